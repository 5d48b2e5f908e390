#include "foliation/periods.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "foliation/errors.hpp"

namespace fol {

namespace {

const long double kPi = std::acos(-1.0L);

long double to_ld(const Rat& q) {
  return static_cast<long double>(q.get_num().get_d()) /
         static_cast<long double>(q.get_den().get_d());
}

Cplx poly_eval_c(const MultiPoly& p, const std::vector<Cplx>& point) {
  Cplx acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Cplx t = to_ld(c);
    for (size_t k = 0; k < e.size(); ++k)
      for (int q = 0; q < e[k]; ++q) t *= point[k];
    acc += t;
  }
  return acc;
}

Cplx rf_eval_c(const RationalFunc& f, const std::vector<Cplx>& point) {
  Cplx d = poly_eval_c(f.den(), point);
  return poly_eval_c(f.num(), point) / d;
}

// 32-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on the Legendre recurrence
struct GaussLegendre {
  std::vector<long double> nodes, weights;
  GaussLegendre() {
    const int n = 32;
    for (int i = 0; i < n; ++i) {
      long double x = std::cos(kPi * (static_cast<long double>(i) + 0.75L) /
                               (static_cast<long double>(n) + 0.5L));
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        long double dp = n * (x * p1 - p0) / (x * x - 1);
        long double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-20L) break;
      }
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      long double dp = n * (x * p1 - p0) / (x * x - 1);
      nodes.push_back(x);
      weights.push_back(2.0L / ((1 - x * x) * dp * dp));
    }
    // ascending nodes so branch tracking sees a monotone sweep
    std::vector<size_t> idx(nodes.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return nodes[a] < nodes[b]; });
    std::vector<long double> sn, sw;
    for (size_t i : idx) {
      sn.push_back(nodes[i]);
      sw.push_back(weights[i]);
    }
    nodes = std::move(sn);
    weights = std::move(sw);
  }
};

const GaussLegendre& gl32() {
  static GaussLegendre g;
  return g;
}

// Durand-Kerner roots of a monic polynomial given by complex coefficients
// c[0..deg] (c[deg] = 1)
std::vector<Cplx> poly_roots(std::vector<Cplx> c) {
  int deg = static_cast<int>(c.size()) - 1;
  std::vector<Cplx> r(static_cast<size_t>(deg));
  Cplx seed(0.4L, 0.9L);
  Cplx acc = 1;
  for (int i = 0; i < deg; ++i) {
    acc *= seed;
    r[static_cast<size_t>(i)] = acc;
  }
  auto eval = [&](Cplx x) {
    Cplx v = c[static_cast<size_t>(deg)];
    for (int k = deg - 1; k >= 0; --k) v = v * x + c[static_cast<size_t>(k)];
    return v;
  };
  for (int it = 0; it < 500; ++it) {
    long double worst = 0;
    for (int i = 0; i < deg; ++i) {
      Cplx num = eval(r[static_cast<size_t>(i)]);
      Cplx den = 1;
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
      Cplx delta = num / den;
      r[static_cast<size_t>(i)] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-19L) break;
  }
  // real-coefficient inputs: snap near-real roots exactly onto the axis so
  // downstream branch choices do not depend on iteration noise
  long double cimag = 0, cmag = 1;
  for (const auto& cc : c) {
    cimag = std::max(cimag, std::fabs(cc.imag()));
    cmag = std::max(cmag, std::abs(cc));
  }
  if (cimag < 1e-17L * cmag) {
    for (auto& root : r)
      if (std::fabs(root.imag()) < 1e-12L * (1 + std::abs(root)))
        root = Cplx(root.real(), 0);
  }
  return r;
}

struct CycleGeometry {
  std::vector<Cplx> roots;             // sorted by (re, im)
  std::vector<std::pair<int, int>> pairs;  // cycle j encircles roots (a, b)
};

CycleGeometry cycle_geometry(const HyperellipticFamily& fam, const Cplx& lambda) {
  const auto& fc = fam.f_coeffs();
  std::vector<Cplx> c;
  c.reserve(fc.size());
  std::vector<Cplx> pt = {lambda};
  for (const auto& k : fc) c.push_back(rf_eval_c(k, pt));
  CycleGeometry geo;
  geo.roots = poly_roots(std::move(c));
  std::sort(geo.roots.begin(), geo.roots.end(), [](const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  long double scale = 0;
  for (const auto& r : geo.roots) scale = std::max(scale, std::abs(r));
  scale = std::max(scale, 1.0L);
  for (size_t i = 0; i < geo.roots.size(); ++i)
    for (size_t j = i + 1; j < geo.roots.size(); ++j)
      if (std::abs(geo.roots[i] - geo.roots[j]) < 1e-10L * scale)
        throw BranchPointCollision("branch points nearly collide at this base point");
  int n = static_cast<int>(geo.roots.size());
  for (int j = 0; j + 1 < n; ++j) geo.pairs.push_back({j, j + 1});
  return geo;
}

// 2 * integral over the segment joining roots a,b of x^i dx / y with the
// sqrt singularity removed by x = c + h sin(theta); the branch of
// sqrt(prod over other roots) is tracked continuously in theta.
CMatrix raw_periods(const CycleGeometry& geo, int panels, int max_xpow) {
  const auto& g = gl32();
  int forms = max_xpow + 1;
  int cycles = static_cast<int>(geo.pairs.size());
  CMatrix out(static_cast<size_t>(forms), std::vector<Cplx>(static_cast<size_t>(cycles), Cplx(0)));
  const Cplx iunit(0, 1);
  for (int j = 0; j < cycles; ++j) {
    auto [ia, ib] = geo.pairs[static_cast<size_t>(j)];
    Cplx ea = geo.roots[static_cast<size_t>(ia)], eb = geo.roots[static_cast<size_t>(ib)];
    Cplx c = (ea + eb) / 2.0L, h = (eb - ea) / 2.0L;
    Cplx prev_sqrt;
    bool have_prev = false;
    std::vector<Cplx> acc(static_cast<size_t>(forms), Cplx(0));
    for (int p = 0; p < panels; ++p) {
      long double lo = -kPi / 2 + kPi * static_cast<long double>(p) / panels;
      long double hi = lo + kPi / panels;
      for (size_t q = 0; q < g.nodes.size(); ++q) {
        long double theta = (lo + hi) / 2 + (hi - lo) / 2 * g.nodes[q];
        long double w = (hi - lo) / 2 * g.weights[q];
        Cplx x = c + h * std::sin(theta);
        Cplx R = 1;
        for (size_t r = 0; r < geo.roots.size(); ++r) {
          if (static_cast<int>(r) == ia || static_cast<int>(r) == ib) continue;
          R *= x - geo.roots[r];
        }
        Cplx s = std::sqrt(R);
        if (!have_prev) {
          // canonical anchor: near-real values take the positive real
          // branch, others the upper half plane; stable against noise in
          // the imaginary part when R sits on the negative real axis
          if (std::fabs(s.imag()) <= 1e-10L * std::abs(s)) {
            if (s.real() < 0) s = -s;
          } else if (s.imag() < 0) {
            s = -s;
          }
        } else if (std::abs(s - prev_sqrt) > std::abs(-s - prev_sqrt)) {
          s = -s;
        }
        prev_sqrt = s;
        have_prev = true;
        Cplx base = w / (iunit * s);
        Cplx xp = 1;
        for (int i = 0; i < forms; ++i) {
          acc[static_cast<size_t>(i)] += base * xp;
          xp *= x;
        }
      }
    }
    for (int i = 0; i < forms; ++i) out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        2.0L * acc[static_cast<size_t>(i)];
  }
  return out;
}

CMatrix adaptive_raw_periods(const HyperellipticFamily& fam, const Cplx& lambda,
                             long double tol, long double* err_out) {
  CycleGeometry geo = cycle_geometry(fam, lambda);
  int max_xpow = 2 * fam.genus() - 1;
  int panels = 4;
  CMatrix prev = raw_periods(geo, panels, max_xpow);
  for (int it = 0; it < 8; ++it) {
    panels *= 2;
    CMatrix next = raw_periods(geo, panels, max_xpow);
    long double diff = 0;
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < next[i].size(); ++j)
        diff = std::max(diff, std::abs(next[i][j] - prev[i][j]));
    prev = std::move(next);
    if (diff < tol) {
      if (err_out) *err_out = diff;
      return prev;
    }
  }
  if (err_out) *err_out = tol;  // converged panels exhausted; report target
  return prev;
}

// --- integer congruence reduction of a unimodular skew matrix to J -------

void apply_swap(IMatrix& q, IMatrix& u, IMatrix& v, size_t a, size_t b) {
  std::swap(q[a], q[b]);
  for (auto& row : q) std::swap(row[a], row[b]);
  std::swap(u[a], u[b]);
  for (auto& row : v) std::swap(row[a], row[b]);
}

// row_a += m * row_b (and mirrored column op), congruence-tracked
void apply_shear(IMatrix& q, IMatrix& u, IMatrix& v, size_t a, size_t b, long long m) {
  size_t n = q.size();
  for (size_t j = 0; j < n; ++j) q[a][j] += m * q[b][j];
  for (size_t i = 0; i < n; ++i) q[i][a] += m * q[i][b];
  for (size_t j = 0; j < n; ++j) u[a][j] += m * u[b][j];
  for (size_t i = 0; i < n; ++i) v[i][b] -= m * v[i][a];
}

}  // namespace

SkewReduction skew_normalize(IMatrix q) {
  size_t n = q.size();
  IMatrix u(n, std::vector<long long>(n, 0)), v(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = v[i][i] = 1;

  int guard = 0;
  for (size_t k = 0; k + 1 < n; k += 2) {
    while (true) {
      if (++guard > 10000)
        throw MathError("HomologyMatching", "skew normalization did not terminate");
      // minimal nonzero entry in the trailing block
      size_t bi = 0, bj = 0;
      long long best = 0;
      for (size_t i = k; i < n; ++i)
        for (size_t j = k; j < n; ++j) {
          long long a = std::llabs(q[i][j]);
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            bi = i;
            bj = j;
          }
        }
      if (best == 0) throw MathError("HomologyMatching", "skew matrix is singular");
      if (bi != k) apply_swap(q, u, v, bi, k);
      if (bj == k) bj = bi;  // swapped away
      if (bj != k + 1) apply_swap(q, u, v, bj, k + 1);
      long long d = q[k][k + 1];
      // clear the rest of rows k, k+1 by shears when divisible
      bool clean = true;
      for (size_t l = k + 2; l < n && clean; ++l) {
        if (q[k][l] % d != 0 || q[k + 1][l] % d != 0) clean = false;
      }
      if (!clean) {
        // make a smaller entry and retry
        for (size_t l = k + 2; l < n; ++l) {
          if (q[k][l] % d != 0) {
            apply_shear(q, u, v, k + 1, l, 1);
            break;
          }
          if (q[k + 1][l] % d != 0) {
            apply_shear(q, u, v, k, l, 1);
            break;
          }
        }
        continue;
      }
      for (size_t l = k + 2; l < n; ++l) {
        long long a = q[k + 1][l] / d;  // shear with row k kills (k+1, l)
        if (a != 0) apply_shear(q, u, v, l, k, a);
        long long b = q[k][l] / d;
        if (b != 0) apply_shear(q, u, v, l, k + 1, -b);
      }
      bool done = true;
      for (size_t l = k + 2; l < n; ++l)
        if (q[k][l] != 0 || q[k + 1][l] != 0) done = false;
      if (!done) continue;
      if (std::llabs(q[k][k + 1]) != 1)
        throw MathError("HomologyMatching", "skew block is not unimodular");
      if (q[k][k + 1] == -1) apply_swap(q, u, v, k, k + 1);
      break;
    }
  }

  // permute pair blocks diag([[0,1],[-1,0]]) into [[0,I],[-I,0]]
  size_t g = n / 2;
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < g; ++i) {
    perm[i] = 2 * i;
    perm[g + i] = 2 * i + 1;
  }
  IMatrix pu(n, std::vector<long long>(n, 0)), pv(n, std::vector<long long>(n, 0));
  IMatrix uu(n, std::vector<long long>(n, 0)), vv(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      uu[i][j] = u[perm[i]][j];
      vv[i][j] = v[i][perm[j]];
    }
  return {uu, vv};
}

namespace {

CMatrix cmatrix_mul(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.size(), std::vector<Cplx>(b[0].size(), Cplx(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == Cplx(0)) continue;
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

CMatrix cmatrix_inverse(CMatrix m) {
  size_t n = m.size();
  CMatrix inv(n, std::vector<Cplx>(n, Cplx(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t i = c + 1; i < n; ++i)
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    if (std::abs(m[piv][c]) < 1e-300L) throw SingularBBlock("matrix numerically singular");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Cplx d = m[c][c];
    for (size_t j = 0; j < n; ++j) {
      m[c][j] /= d;
      inv[c][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      Cplx f = m[i][c];
      if (f == Cplx(0)) continue;
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

CMatrix cmatrix_transpose(const CMatrix& a) {
  CMatrix r(a[0].size(), std::vector<Cplx>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

CMatrix cmatrix_j(size_t g, const Cplx& scale = Cplx(1)) {
  CMatrix j(2 * g, std::vector<Cplx>(2 * g, Cplx(0)));
  for (size_t i = 0; i < g; ++i) {
    j[i][g + i] = scale;
    j[g + i][i] = -scale;
  }
  return j;
}

CMatrix rf_matrix_eval(const RfMatrix& m, const Cplx& lambda) {
  std::vector<Cplx> pt = {lambda};
  CMatrix out(m.size(), std::vector<Cplx>(m.empty() ? 0 : m[0].size(), Cplx(0)));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[i][j] = rf_eval_c(m[i][j], pt);
  return out;
}

// cached symbolic data per family for the numeric pipeline
struct SymbolicSide {
  RfMatrix lambda_exact;  // pairing matrix
  RfMatrix m_norm;        // normalization base change
  ConnectionMatrix conn_norm;
};

SymbolicSide symbolic_side(const HyperellipticFamily& fam) {
  PairingMatrix pm = pairing_matrix(fam);
  ConnectionMatrix conn = gauss_manin_matrix(fam);
  NormalizationResult norm = symplectic_normalize(fam, pm, conn);
  return {pm.lambda, norm.base_change, norm.connection};
}

}  // namespace

PeriodMatrixNumeric numeric_period_oracle(const HyperellipticFamily& fam, const Rat& lambda0,
                                          int precision_digits) {
  if (fam.base_vars().size() != 1)
    throw std::invalid_argument("numeric_period_oracle: base must be 1-dimensional");
  const size_t g = static_cast<size_t>(fam.genus());
  long double tol = std::pow(10.0L, -static_cast<long double>(std::max(precision_digits, 6)));
  Cplx lam(to_ld(lambda0), 0);

  // off the discriminant?
  std::vector<Rat> pt = {lambda0};
  if (is_zero(fam.discriminant().eval(pt)))
    throw BranchPointCollision("base point lies on the discriminant");

  long double err = 0;
  CMatrix pi_c = adaptive_raw_periods(fam, lam, tol, &err);

  SymbolicSide sym = symbolic_side(fam);

  // integer homology correction: match Pi Q Pi^T = -2 pi i Lambda(lambda0);
  // the sign is the one that puts beta in the Siegel space under the
  // documented cycle orientation rule
  CMatrix lambda_num = rf_matrix_eval(sym.lambda_exact, lam);
  const Cplx pairing_scale(0, -2 * kPi);
  CMatrix pinv = cmatrix_inverse(pi_c);
  CMatrix target(2 * g, std::vector<Cplx>(2 * g));
  for (size_t i = 0; i < 2 * g; ++i)
    for (size_t j = 0; j < 2 * g; ++j) target[i][j] = pairing_scale * lambda_num[i][j];
  CMatrix qc = cmatrix_mul(cmatrix_mul(pinv, target), cmatrix_transpose(pinv));

  IMatrix q(2 * g, std::vector<long long>(2 * g, 0));
  long double int_err = 0;
  for (size_t i = 0; i < 2 * g; ++i)
    for (size_t j = 0; j < 2 * g; ++j) {
      long double re = qc[i][j].real();
      long long r = std::llround(re);
      int_err = std::max(int_err, std::fabs(re - static_cast<long double>(r)));
      int_err = std::max(int_err, std::fabs(qc[i][j].imag()));
      q[i][j] = r;
    }
  if (int_err > 1e-4L)
    throw MathError("HomologyMatching",
                    "cycle intersection data did not round to integers; residual " +
                        std::to_string(static_cast<double>(int_err)));

  SkewReduction red = skew_normalize(q);
  // delta = c * U^{-1}: columns transform by V = u_inv
  CMatrix v(2 * g, std::vector<Cplx>(2 * g));
  for (size_t i = 0; i < 2 * g; ++i)
    for (size_t j = 0; j < 2 * g; ++j) v[i][j] = static_cast<long double>(red.u_inv[i][j]);
  CMatrix pi_raw = cmatrix_mul(pi_c, v);

  PeriodMatrixNumeric out;
  out.lambda0 = lambda0;
  out.pi_raw = pi_raw;
  out.pi = cmatrix_mul(rf_matrix_eval(sym.m_norm, lam), pi_raw);
  out.error_estimate = err * 16;  // homology combination amplifies slightly

  // orientation rule: if the Siegel point falls in the lower half space,
  // re-match against the opposite sign of the pairing
  try {
    CMatrix beta = beta_blocks(out);
    if (!imag_positive_definite(beta)) {
      IMatrix qneg = q;
      for (auto& row : qneg)
        for (auto& e : row) e = -e;
      SkewReduction red2 = skew_normalize(qneg);
      for (size_t i = 0; i < 2 * g; ++i)
        for (size_t j = 0; j < 2 * g; ++j) v[i][j] = static_cast<long double>(red2.u_inv[i][j]);
      out.pi_raw = cmatrix_mul(pi_c, v);
      out.pi = cmatrix_mul(rf_matrix_eval(sym.m_norm, lam), out.pi_raw);
    }
  } catch (const SingularBBlock&) {
    // B singular at this base point: keep the first matching
  }
  return out;
}

CMatrix beta_blocks(const PeriodMatrixNumeric& pm) {
  size_t n = pm.pi.size();
  size_t g = n / 2;
  CMatrix a(g, std::vector<Cplx>(g)), b(g, std::vector<Cplx>(g));
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j) {
      a[i][j] = pm.pi[i][j];
      b[i][j] = pm.pi[i][g + j];
    }
  CMatrix binv;
  try {
    binv = cmatrix_inverse(b);
  } catch (const SingularBBlock&) {
    throw SingularBBlock("B block of the period matrix is singular");
  }
  return cmatrix_mul(binv, a);
}

long double riemann_relation_residual(const PeriodMatrixNumeric& pm) {
  size_t n = pm.pi.size();
  size_t g = n / 2;
  CMatrix j = cmatrix_j(g);
  CMatrix lhs = cmatrix_mul(cmatrix_mul(pm.pi, j), cmatrix_transpose(pm.pi));
  const Cplx scale = lhs[0][g];  // expected 2 pi i
  long double res = 0;
  CMatrix jj = cmatrix_j(g, scale);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) res = std::max(res, std::abs(lhs[i][k] - jj[i][k]));
  // normalize by the scalar magnitude
  return res / std::max(std::abs(scale), 1.0L);
}

long double pairing_agreement_residual(const HyperellipticFamily& fam,
                                       const PeriodMatrixNumeric& pm) {
  size_t n = pm.pi_raw.size();
  size_t g = n / 2;
  Cplx lam(to_ld(pm.lambda0), 0);
  PairingMatrix exact = pairing_matrix(fam);
  CMatrix lambda_num = rf_matrix_eval(exact.lambda, lam);
  CMatrix j = cmatrix_j(g);
  CMatrix lhs = cmatrix_mul(cmatrix_mul(pm.pi_raw, j), cmatrix_transpose(pm.pi_raw));
  const Cplx pairing_scale(0, -2 * kPi);
  long double res = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      res = std::max(res, std::abs(lhs[i][k] - pairing_scale * lambda_num[i][k]));
  return res / (2 * kPi);
}

namespace {

// periods of the normalized basis over a fixed cycle system, for
// finite-difference checks; the homology correction from the center point
// is reused at the shifted points
CMatrix normalized_periods_at(const HyperellipticFamily& fam, const SymbolicSide& sym,
                              const CMatrix& v, const Cplx& lam, long double tol) {
  long double err = 0;
  CMatrix raw = adaptive_raw_periods(fam, lam, tol, &err);
  return cmatrix_mul(rf_matrix_eval(sym.m_norm, lam), cmatrix_mul(raw, v));
}

}  // namespace

long double section_residual(const HyperellipticFamily& fam, const Rat& lambda0,
                             int precision_digits) {
  if (fam.base_vars().size() != 1)
    throw std::invalid_argument("section_residual: base must be 1-dimensional");
  size_t g = static_cast<size_t>(fam.genus());
  long double tol = std::pow(10.0L, -static_cast<long double>(std::max(precision_digits, 10)));
  SymbolicSide sym = symbolic_side(fam);

  PeriodMatrixNumeric center = numeric_period_oracle(fam, lambda0, std::max(precision_digits, 10));
  // recover the cycle-correction matrix from the oracle run: pi_raw = raw * v
  Cplx lam(to_ld(lambda0), 0);
  long double err = 0;
  CMatrix raw_center = adaptive_raw_periods(fam, lam, tol, &err);
  CMatrix v = cmatrix_mul(cmatrix_inverse(raw_center), center.pi_raw);

  const long double h = 1e-4L;
  CMatrix pm2 = normalized_periods_at(fam, sym, v, lam - 2 * h, tol);
  CMatrix pm1 = normalized_periods_at(fam, sym, v, lam - h, tol);
  CMatrix pp1 = normalized_periods_at(fam, sym, v, lam + h, tol);
  CMatrix pp2 = normalized_periods_at(fam, sym, v, lam + 2 * h, tol);

  CMatrix omega_num = rf_matrix_eval(sym.conn_norm.omegas[0], lam);
  CMatrix rhs = cmatrix_mul(omega_num, center.pi);
  long double res = 0;
  for (size_t i = 0; i < 2 * g; ++i)
    for (size_t j = 0; j < 2 * g; ++j) {
      Cplx d = (pm2[i][j] - 8.0L * pm1[i][j] + 8.0L * pp1[i][j] - pp2[i][j]) / (12 * h);
      res = std::max(res, std::abs(d - rhs[i][j]));
    }
  return res;
}

long double picard_fuchs_residual(const HyperellipticFamily& fam, const DeRhamForm& form,
                                  const DiffOperator& op, const Rat& lambda0,
                                  int precision_digits) {
  if (fam.base_vars().size() != 1)
    throw std::invalid_argument("picard_fuchs_residual: base must be 1-dimensional");
  long double tol = std::pow(10.0L, -static_cast<long double>(std::max(precision_digits, 15)));

  // the period of `form` over one fixed cycle: coordinates in the raw basis
  std::vector<RationalFunc> coords = griffiths_dwork_reduce(form, fam);
  auto period_at = [&](const Cplx& lam) -> Cplx {
    long double err = 0;
    CMatrix raw = adaptive_raw_periods(fam, lam, tol, &err);
    std::vector<Cplx> pt = {lam};
    Cplx acc = 0;
    for (size_t i = 0; i < coords.size(); ++i) acc += rf_eval_c(coords[i], pt) * raw[i][0];
    return acc;
  };

  Cplx lam(to_ld(lambda0), 0);
  const long double h = 1e-3L;
  std::vector<Cplx> p(5);
  for (int s = -2; s <= 2; ++s) p[static_cast<size_t>(s + 2)] = period_at(lam + s * h);

  std::vector<Cplx> derivs(static_cast<size_t>(op.order) + 1);
  derivs[0] = p[2];
  if (op.order >= 1)
    derivs[1] = (p[0] - 8.0L * p[1] + 8.0L * p[3] - p[4]) / (12 * h);
  if (op.order >= 2)
    derivs[2] = (-p[0] + 16.0L * p[1] - 30.0L * p[2] + 16.0L * p[3] - p[4]) / (12 * h * h);
  if (op.order >= 3)
    derivs[3] = (-p[0] + 2.0L * p[1] - 2.0L * p[3] + p[4]) / (2 * h * h * h);
  if (op.order > 3)
    throw std::invalid_argument("picard_fuchs_residual: stencil supports order <= 3");

  std::vector<Cplx> pt = {lam};
  Cplx acc = derivs[static_cast<size_t>(op.order)];
  for (int s = 0; s < op.order; ++s)
    acc += rf_eval_c(op.lower[static_cast<size_t>(s)], pt) * derivs[static_cast<size_t>(s)];
  return std::abs(acc);
}

bool imag_positive_definite(const CMatrix& beta) {
  size_t gdim = beta.size();
  // Sylvester criterion on the imaginary part
  std::vector<std::vector<long double>> im(gdim, std::vector<long double>(gdim));
  for (size_t i = 0; i < gdim; ++i)
    for (size_t j = 0; j < gdim; ++j) im[i][j] = beta[i][j].imag();
  for (size_t k = 1; k <= gdim; ++k) {
    std::vector<std::vector<long double>> minor(k, std::vector<long double>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor[i][j] = im[i][j];
    long double det = 1;
    for (size_t c = 0; c < k; ++c) {
      size_t piv = c;
      for (size_t r = c + 1; r < k; ++r)
        if (std::fabs(minor[r][c]) > std::fabs(minor[piv][c])) piv = r;
      if (std::fabs(minor[piv][c]) < 1e-300L) return false;
      if (piv != c) {
        std::swap(minor[piv], minor[c]);
        det = -det;
      }
      det *= minor[c][c];
      for (size_t r = c + 1; r < k; ++r) {
        long double f = minor[r][c] / minor[c][c];
        for (size_t cc = c; cc < k; ++cc) minor[r][cc] -= f * minor[c][cc];
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

}  // namespace fol
