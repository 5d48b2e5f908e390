#include "foliation/hyperelliptic.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "foliation/errors.hpp"

namespace fol {

namespace {

// dense univariate polynomials over the base function field
using Uni = std::vector<RationalFunc>;  // index = power of x

int uni_deg(const Uni& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (!a[i].is_zero()) return static_cast<int>(i);
  return -1;
}

void uni_trim(Uni& a) { a.resize(static_cast<size_t>(uni_deg(a) + 1)); }

Uni uni_zero(const std::vector<std::string>& vars, TermOrder order, size_t len = 0) {
  return Uni(len, RationalFunc::zero(vars, order));
}

Uni uni_add(const Uni& a, const Uni& b) {
  Uni r = a;
  if (b.size() > r.size()) r.resize(b.size(), b.empty() ? RationalFunc() : b[0] - b[0]);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  uni_trim(r);
  return r;
}

Uni uni_scale(const Uni& a, const RationalFunc& c) {
  Uni r = a;
  for (auto& e : r) e *= c;
  uni_trim(r);
  return r;
}

Uni uni_mul(const Uni& a, const Uni& b, const std::vector<std::string>& vars, TermOrder order) {
  if (a.empty() || b.empty()) return {};
  Uni r = uni_zero(vars, order, a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  uni_trim(r);
  return r;
}

Uni uni_derivative(const Uni& a) {
  if (a.size() <= 1) return {};
  Uni r(a.size() - 1, a[0]);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i].scaled(static_cast<long>(i));
  uni_trim(r);
  return r;
}

// remainder and quotient of a by b (b nonzero)
void uni_divmod(const Uni& a, const Uni& b, Uni& q, Uni& r, const std::vector<std::string>& vars,
                TermOrder order) {
  int db = uni_deg(b);
  assert(db >= 0);
  r = a;
  uni_trim(r);
  q = uni_zero(vars, order);
  RationalFunc lb_inv = b[static_cast<size_t>(db)].inverse();
  while (uni_deg(r) >= db) {
    int dr = uni_deg(r);
    RationalFunc c = r[static_cast<size_t>(dr)] * lb_inv;
    size_t shift = static_cast<size_t>(dr - db);
    if (q.size() < shift + 1) q.resize(shift + 1, RationalFunc::zero(vars, order));
    q[shift] += c;
    for (size_t i = 0; i <= static_cast<size_t>(db); ++i) {
      if (b[i].is_zero()) continue;
      r[i + shift] -= c * b[i];
    }
    uni_trim(r);
    if (static_cast<int>(r.size()) > dr) r.resize(static_cast<size_t>(dr));  // guard rounding
  }
}

// extended euclid: g = gcd (monic), u*a + v*b = g
void uni_ext_gcd(Uni a, Uni b, Uni& g, Uni& u, Uni& v, const std::vector<std::string>& vars,
                 TermOrder order) {
  Uni one = uni_zero(vars, order, 1);
  one[0] = RationalFunc::constant(1, vars, order);
  Uni r0 = a, r1 = b;
  Uni s0 = one, s1 = uni_zero(vars, order);
  Uni t0 = uni_zero(vars, order), t1 = one;
  uni_trim(r0);
  uni_trim(r1);
  while (uni_deg(r1) >= 0) {
    Uni q, rem;
    uni_divmod(r0, r1, q, rem, vars, order);
    Uni s2 = uni_add(s0, uni_scale(uni_mul(q, s1, vars, order),
                                   RationalFunc::constant(-1, vars, order)));
    Uni t2 = uni_add(t0, uni_scale(uni_mul(q, t1, vars, order),
                                   RationalFunc::constant(-1, vars, order)));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  int dg = uni_deg(r0);
  assert(dg >= 0);
  RationalFunc lead_inv = r0[static_cast<size_t>(dg)].inverse();
  g = uni_scale(r0, lead_inv);
  u = uni_scale(s0, lead_inv);
  v = uni_scale(t0, lead_inv);
}

}  // namespace

HyperellipticFamily::HyperellipticFamily(MultiPoly f, const std::string& x_name,
                                         std::vector<std::string> base_vars)
    : x_name_(x_name), base_vars_(std::move(base_vars)) {
  curve_vars_.push_back(x_name_);
  for (const auto& b : base_vars_) {
    if (b == x_name_) throw std::invalid_argument("HyperellipticFamily: x collides with base variable");
    curve_vars_.push_back(b);
  }
  f_ = f.vars() == curve_vars_ ? std::move(f) : f.with_vars(curve_vars_, order_);

  int dx = f_.degree_in(0);
  if (dx < 3 || dx % 2 == 0)
    throw std::invalid_argument("HyperellipticFamily: degree in x must be odd and >= 3");
  genus_ = (dx - 1) / 2;

  // univariate coefficients over the base ring
  auto parts = f_.coefficients_of({0});
  f_coeffs_.assign(static_cast<size_t>(dx + 1), RationalFunc::zero(base_vars_, order_));
  for (const auto& [e, coef] : parts) {
    f_coeffs_[static_cast<size_t>(e[0])] = RationalFunc(coef.with_vars(base_vars_, order_));
  }
  if (!(f_coeffs_.back().is_constant() && f_coeffs_.back().constant_value() == 1))
    throw std::invalid_argument("HyperellipticFamily: f must be monic in x");

  // resultant_x(f, df/dx) via the Sylvester matrix over the base ring
  MultiPoly fx = f_.derivative(0);
  auto fx_parts = fx.coefficients_of({0});
  std::vector<MultiPoly> a(static_cast<size_t>(dx + 1), MultiPoly::zero(base_vars_, order_));
  std::vector<MultiPoly> b(static_cast<size_t>(dx), MultiPoly::zero(base_vars_, order_));
  for (const auto& [e, coef] : parts) a[static_cast<size_t>(e[0])] = coef.with_vars(base_vars_, order_);
  for (const auto& [e, coef] : fx_parts)
    b[static_cast<size_t>(e[0])] = coef.with_vars(base_vars_, order_);
  size_t n = static_cast<size_t>(dx), m = static_cast<size_t>(dx - 1);
  size_t size = n + m;
  std::vector<std::vector<MultiPoly>> syl(
      size, std::vector<MultiPoly>(size, MultiPoly::zero(base_vars_, order_)));
  for (size_t r = 0; r < m; ++r)
    for (size_t i = 0; i <= n; ++i) syl[r][r + i] = a[n - i];
  for (size_t r = 0; r < n; ++r)
    for (size_t i = 0; i <= m; ++i) syl[m + r][r + i] = b[m - i];
  disc_ = poly_det(std::move(syl), base_vars_, order_);
  if (disc_.is_zero())
    throw std::invalid_argument(
        "HyperellipticFamily: f is not squarefree over the base function field");
}

std::vector<RationalFunc> HyperellipticFamily::fx_coeffs() const {
  Uni fx = uni_derivative(f_coeffs_);
  return fx;
}

std::vector<DeRhamForm> derham_basis(const HyperellipticFamily& fam) {
  std::vector<DeRhamForm> basis;
  const auto& cv = fam.curve_vars();
  for (int i = 0; i < 2 * fam.genus(); ++i) {
    Expvec e(cv.size(), 0);
    e[0] = i;
    basis.push_back({MultiPoly::monomial(e, 1, cv, fam.order()), 1});
  }
  return basis;
}

std::vector<RationalFunc> griffiths_dwork_reduce(const DeRhamForm& form,
                                                 const HyperellipticFamily& fam) {
  if (form.pole_order < 1 || form.pole_order % 2 == 0)
    throw PoleOrderParity("pole order must be odd, got " + std::to_string(form.pole_order));
  const auto& bv = fam.base_vars();
  TermOrder order = fam.order();
  const int g = fam.genus();

  // numerator as univariate over the base field
  MultiPoly num = form.numerator.vars() == fam.curve_vars()
                      ? form.numerator
                      : form.numerator.with_vars(fam.curve_vars(), order);
  Uni A = uni_zero(bv, order);
  for (const auto& [e, coef] : num.coefficients_of({0})) {
    size_t k = static_cast<size_t>(e[0]);
    if (A.size() < k + 1) A.resize(k + 1, RationalFunc::zero(bv, order));
    A[k] = RationalFunc(coef.with_vars(bv, order));
  }
  uni_trim(A);

  const Uni& f = fam.f_coeffs();
  Uni fx = uni_derivative(f);

  // pole-order reduction: A dx/y^m = (a - (2b/(2-m))') dx/y^{m-2} + exact,
  // where A = a f + b f'
  int m = form.pole_order;
  Uni gcd1, u, v;
  if (m >= 3) {
    uni_ext_gcd(f, fx, gcd1, u, v, bv, order);
    assert(uni_deg(gcd1) == 0);
  }
  while (m >= 3) {
    // A = (A u) f + (A v) f'; take the remainder route to keep degrees low:
    // b = A v mod f, a = (A - b f') / f
    Uni Av = uni_mul(A, v, bv, order);
    Uni q, b;
    uni_divmod(Av, f, q, b, bv, order);
    Uni bfx = uni_mul(b, fx, bv, order);
    Uni diff = uni_add(A, uni_scale(bfx, RationalFunc::constant(-1, bv, order)));
    Uni a, rem;
    uni_divmod(diff, f, a, rem, bv, order);
    assert(uni_deg(rem) < 0);
    Uni B = uni_scale(b, RationalFunc::constant(rat(2, 2 - m), bv, order));
    A = uni_add(a, uni_scale(uni_derivative(B), RationalFunc::constant(-1, bv, order)));
    m -= 2;
  }

  // degree reduction at pole order 1 by d(x^j y) = (j x^{j-1} f + x^j f'/2) dx/y
  while (uni_deg(A) >= 2 * g) {
    int D = uni_deg(A);
    int j = D - 2 * g;
    Uni rel = uni_zero(bv, order);
    if (j > 0) {
      // j x^{j-1} f: shift f by j-1 and scale by j
      Uni shifted(static_cast<size_t>(j - 1), RationalFunc::zero(bv, order));
      for (const auto& c : f) shifted.push_back(c.scaled(static_cast<long>(j)));
      rel = shifted;
    }
    Uni xjfx(static_cast<size_t>(j), RationalFunc::zero(bv, order));
    for (const auto& c : fx) xjfx.push_back(c.scaled(Rat(1, 2)));
    rel = uni_add(rel, xjfx);
    assert(uni_deg(rel) == D);
    RationalFunc factor = A[static_cast<size_t>(D)] / rel[static_cast<size_t>(D)];
    A = uni_add(A, uni_scale(rel, -factor));
    assert(uni_deg(A) < D);
  }

  std::vector<RationalFunc> coords(static_cast<size_t>(2 * g), RationalFunc::zero(bv, order));
  for (size_t i = 0; i < A.size() && i < coords.size(); ++i) coords[i] = A[i];
  return coords;
}

ConnectionMatrix gauss_manin_matrix(const HyperellipticFamily& fam) {
  const int g = fam.genus();
  const auto& bv = fam.base_vars();
  TermOrder order = fam.order();
  const auto& cv = fam.curve_vars();

  ConnectionMatrix conn;
  conn.base_vars = bv;
  conn.order = order;

  for (size_t l = 0; l < bv.size(); ++l) {
    // d/dlambda_l (x^i dx/y) = -1/2 x^i (df/dlambda_l) dx/y^3
    MultiPoly dfl = fam.f().derivative(static_cast<int>(l + 1));  // curve ring: x is index 0
    RfMatrix omega = rf_matrix_zero(static_cast<size_t>(2 * g), static_cast<size_t>(2 * g), bv, order);
    for (int i = 0; i < 2 * g; ++i) {
      Expvec e(cv.size(), 0);
      e[0] = i;
      DeRhamForm deriv{dfl.mul_monomial(e, Rat(-1, 2)), 3};
      std::vector<RationalFunc> coords = griffiths_dwork_reduce(deriv, fam);
      for (int j = 0; j < 2 * g; ++j) omega[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          coords[static_cast<size_t>(j)];
    }
    conn.omegas.push_back(std::move(omega));
  }

  if (bv.size() > 1 && !conn.is_flat())
    throw FlatnessFailure("Gauss-Manin matrices over the multi-dimensional base are not flat");
  return conn;
}

std::string DiffOperator::str(const std::string& dsym) const {
  std::ostringstream os;
  os << dsym;
  if (order > 1) os << "^" << order;
  for (int s = order - 1; s >= 0; --s) {
    const RationalFunc& c = lower[static_cast<size_t>(s)];
    if (c.is_zero()) continue;
    os << " + (" << c.str() << ")";
    if (s > 0) {
      os << "*" << dsym;
      if (s > 1) os << "^" << s;
    }
  }
  return os.str();
}

DiffOperator picard_fuchs(const HyperellipticFamily& fam, const DeRhamForm& form) {
  if (fam.base_vars().size() != 1)
    throw std::invalid_argument("picard_fuchs: base must be 1-dimensional");
  const auto& bv = fam.base_vars();
  TermOrder order = fam.order();
  const size_t dim = static_cast<size_t>(2 * fam.genus());

  ConnectionMatrix conn = gauss_manin_matrix(fam);
  const RfMatrix& omega = conn.omegas[0];

  // successive covariant derivatives of the class, row-vector convention:
  // v_{r+1} = v' + v * Omega
  std::vector<std::vector<RationalFunc>> vs;
  vs.push_back(griffiths_dwork_reduce(form, fam));

  auto nabla = [&](const std::vector<RationalFunc>& v) {
    std::vector<RationalFunc> w(dim, RationalFunc::zero(bv, order));
    for (size_t j = 0; j < dim; ++j) {
      w[j] = v[j].derivative(0);
      for (size_t i = 0; i < dim; ++i) {
        if (v[i].is_zero() || omega[i][j].is_zero()) continue;
        w[j] += v[i] * omega[i][j];
      }
    }
    return w;
  };

  for (int r = 1; r <= static_cast<int>(dim); ++r) {
    vs.push_back(nabla(vs.back()));
    // try to solve vs[r] = sum_{s<r} c_s vs[s] over the function field
    size_t rows = dim, cols = static_cast<size_t>(r);
    std::vector<std::vector<RationalFunc>> m(rows,
                                             std::vector<RationalFunc>(cols + 1,
                                                                       RationalFunc::zero(bv, order)));
    for (size_t s = 0; s < cols; ++s)
      for (size_t i = 0; i < rows; ++i) m[i][s] = vs[s][i];
    for (size_t i = 0; i < rows; ++i) m[i][cols] = vs[static_cast<size_t>(r)][i];

    // Gaussian elimination with the augmented column
    std::vector<size_t> pivot_row(cols, SIZE_MAX);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
      size_t p = rank;
      while (p < rows && m[p][c].is_zero()) ++p;
      if (p == rows) continue;
      std::swap(m[p], m[rank]);
      RationalFunc inv = m[rank][c].inverse();
      for (size_t j = c; j <= cols; ++j) m[rank][j] = m[rank][j] * inv;
      for (size_t i = 0; i < rows; ++i) {
        if (i == rank || m[i][c].is_zero()) continue;
        RationalFunc fct = m[i][c];
        for (size_t j = c; j <= cols; ++j) m[i][j] -= fct * m[rank][j];
      }
      pivot_row[c] = rank;
      ++rank;
    }
    bool consistent = true;
    for (size_t i = rank; i < rows; ++i)
      if (!m[i][cols].is_zero()) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    DiffOperator L;
    L.order = r;
    L.lower.assign(static_cast<size_t>(r), RationalFunc::zero(bv, order));
    for (size_t c = 0; c < cols; ++c) {
      RationalFunc coeff = pivot_row[c] == SIZE_MAX ? RationalFunc::zero(bv, order)
                                                    : m[pivot_row[c]][cols];
      L.lower[c] = -coeff;
    }
    return L;
  }
  throw std::logic_error("picard_fuchs: no relation up to order 2g (impossible)");
}

}  // namespace fol
