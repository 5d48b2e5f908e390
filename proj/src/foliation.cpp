#include "foliation/foliation.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

#include "foliation/errors.hpp"

namespace fol {

RationalFunc apply_field(const VectorField& xi, const RationalFunc& h) {
  assert(!xi.empty());
  RationalFunc acc = RationalFunc::zero(h.vars(), h.num().order());
  for (size_t l = 0; l < xi.size(); ++l) {
    if (xi[l].is_zero()) continue;
    acc += xi[l] * h.derivative(static_cast<int>(l));
  }
  return acc;
}

RationalFunc apply_field(const VectorField& xi, const MultiPoly& h) {
  return apply_field(xi, RationalFunc(h));
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  VectorField r;
  r.reserve(a.size());
  for (size_t k = 0; k < a.size(); ++k) r.push_back(apply_field(a, b[k]) - apply_field(b, a[k]));
  return r;
}

namespace {

// deterministic small-rational point source for generic-rank checks
struct PointSource {
  unsigned long state = 0x5bd1e995UL;
  long next_int() {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return static_cast<long>((state >> 33) % 41) - 20;
  }
  std::vector<Rat> point(size_t n) {
    std::vector<Rat> p;
    p.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      long a = next_int();
      long b = 0;
      while (b == 0) b = next_int();
      p.push_back(rat(a, std::abs(b) + 1));
    }
    return p;
  }
};

size_t rational_rank(std::vector<std::vector<Rat>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    Rat inv = 1 / m[rank][c];
    for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || is_zero(m[i][c])) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Foliation::Foliation(AffineChart chart, std::vector<VectorField> fields,
                     std::vector<std::string> params)
    : chart_(std::move(chart)), fields_(std::move(fields)), params_(std::move(params)) {
  verify();
}

void Foliation::verify() const {
  const size_t N = chart_.dim_ambient();
  const size_t n = fields_.size();
  if (n == 0 || n > N)
    throw std::invalid_argument("Foliation: need 1 <= n <= ambient dimension");
  for (const auto& f : fields_)
    if (f.size() != N) throw std::invalid_argument("Foliation: field component count mismatch");

  // tangency to the chart variety
  for (size_t i = 0; i < n; ++i) {
    for (const auto& g : chart_.defining_ideal().gens()) {
      RationalFunc d = apply_field(fields_[i], g);
      if (!chart_.vanishes_on_chart(d))
        throw TangencyFailure("field " + std::to_string(i + 1) + " applied to generator " +
                              g.str() + " gives " + d.str() + ", not in the ideal");
    }
  }

  // pairwise commutation modulo the chart ideal
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      VectorField br = lie_bracket(fields_[i], fields_[j]);
      for (size_t k = 0; k < br.size(); ++k) {
        if (!chart_.vanishes_on_chart(br[k])) {
          std::ostringstream os;
          os << "fields " << (i + 1) << "," << (j + 1) << " do not commute; bracket component "
             << chart_.vars()[k] << ": " << br[k].str();
          throw CommutationFailure(os.str());
        }
      }
    }
  }

  // declared parameters are leafwise constants
  for (const auto& p : params_) {
    int idx = chart_.var_index(p);
    if (idx < 0) throw std::invalid_argument("Foliation: unknown parameter " + p);
    for (size_t i = 0; i < n; ++i) {
      if (!chart_.vanishes_on_chart(fields_[i][static_cast<size_t>(idx)]))
        throw ParameterNotConstant("field " + std::to_string(i + 1) + " moves parameter " + p);
    }
  }

  // generic linear independence at a random rational point off the denominators
  PointSource src;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rat> p = src.point(N);
    bool ok = true;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(N));
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t k = 0; k < N && ok; ++k) {
        if (fields_[i][k].denominator_vanishes_at(p)) {
          ok = false;
          break;
        }
        m[i][k] = fields_[i][k].eval(p);
      }
    if (!ok) continue;
    if (rational_rank(std::move(m)) == n) return;
  }
  throw MathError("DependentFields",
                  "fields are linearly dependent at three random sample points");
}

int Foliation::max_field_degree_num() const {
  int d = 0;
  for (const auto& f : fields_)
    for (const auto& c : f) d = std::max(d, c.num().degree());
  return d;
}

int Foliation::max_field_degree_den() const {
  int d = 0;
  for (const auto& f : fields_)
    for (const auto& c : f) d = std::max(d, c.den().degree());
  return d;
}

Foliation from_graph_coefficients(const RfMatrix& c, const AffineChart& chart) {
  const size_t N = chart.dim_ambient();
  const size_t n = c.size();
  if (n == 0 || n > N) throw std::invalid_argument("from_graph_coefficients: bad shape");
  for (const auto& row : c)
    if (row.size() != N - n)
      throw std::invalid_argument("from_graph_coefficients: row length must be N - n");
  std::vector<VectorField> fields;
  fields.reserve(n);
  const auto& vars = chart.vars();
  TermOrder order = chart.order();
  for (size_t i = 0; i < n; ++i) {
    VectorField f(N, RationalFunc::zero(vars, order));
    f[i] = RationalFunc::constant(1, vars, order);
    for (size_t j = 0; j < N - n; ++j) f[n + j] = c[i][j].with_vars(vars, order);
    fields.push_back(std::move(f));
  }
  return Foliation(chart, std::move(fields));
}

Foliation from_connection(const ConnectionMatrix& omega, const AffineChart& base,
                          const std::string& group_var_prefix) {
  const size_t b = omega.base_vars.size();
  const size_t M = omega.rank();
  if (base.vars() != omega.base_vars)
    throw std::invalid_argument("from_connection: base chart variables do not match connection");
  for (size_t i = 0; i < b; ++i)
    for (size_t j = i + 1; j < b; ++j) {
      RfMatrix c = omega.curvature(i, j);
      if (!rf_matrix_is_zero(c)) {
        std::ostringstream os;
        os << "curvature in directions " << omega.base_vars[i] << "," << omega.base_vars[j]
           << " is nonzero";
        for (size_t r = 0; r < M; ++r)
          for (size_t s = 0; s < M; ++s)
            if (!c[r][s].is_zero()) {
              os << "; entry (" << (r + 1) << "," << (s + 1) << ") = " << c[r][s].str();
              throw FlatnessFailure(os.str());
            }
        throw FlatnessFailure(os.str());
      }
    }

  std::vector<std::string> gvars;
  gvars.reserve(M * M);
  for (size_t r = 0; r < M; ++r)
    for (size_t s = 0; s < M; ++s)
      gvars.push_back(group_var_prefix + std::to_string(r + 1) + "_" + std::to_string(s + 1));
  AffineChart chart = base.extended(gvars);
  const auto& vars = chart.vars();
  TermOrder order = chart.order();

  auto gvar = [&](size_t r, size_t s) {
    return RationalFunc::variable(gvars[r * M + s], vars, order);
  };

  std::vector<VectorField> fields;
  fields.reserve(b);
  for (size_t i = 0; i < b; ++i) {
    VectorField f(vars.size(), RationalFunc::zero(vars, order));
    f[i] = RationalFunc::constant(1, vars, order);
    for (size_t r = 0; r < M; ++r)
      for (size_t s = 0; s < M; ++s) {
        RationalFunc acc = RationalFunc::zero(vars, order);
        for (size_t u = 0; u < M; ++u) {
          if (omega.omegas[i][r][u].is_zero()) continue;
          acc += omega.omegas[i][r][u].with_vars(vars, order) * gvar(u, s);
        }
        f[b + r * M + s] = std::move(acc);
      }
    fields.push_back(std::move(f));
  }
  return Foliation(chart, std::move(fields));
}

FlowJet flow_jet(const Foliation& f, int order) {
  if (order < 1) throw std::invalid_argument("flow_jet: order must be >= 1");
  const auto& vars = f.chart().vars();
  TermOrder ord = f.chart().order();
  const size_t n = f.leaf_dim();
  const size_t N = vars.size();
  const std::vector<Expvec> alphas = graded_exponents(n, order);

  FlowJet jet;
  jet.leaf_dim = n;
  jet.order = order;

  for (size_t k = 0; k < N; ++k) {
    // iterated derivatives xi^a(x_k), canonical application order: the
    // first nonzero index is applied outermost
    std::map<Expvec, RationalFunc> derivs;
    JetPoly comp(n, order, vars, ord);
    for (const Expvec& a : alphas) {
      if (total_degree(a) == 0) {
        derivs[a] = RationalFunc::variable(vars[k], vars, ord);
        comp.add_term(a, derivs[a]);
        continue;
      }
      size_t i = 0;
      while (a[i] == 0) ++i;
      Expvec prev = a;
      prev[i] -= 1;
      RationalFunc v = apply_field(f.fields()[i], derivs.at(prev));
      Rat fact = 1;
      for (size_t q = 0; q < n; ++q) fact *= Rat(factorial_int(static_cast<unsigned>(a[q])));
      comp.add_term(a, v.scaled(1 / fact));
      derivs[a] = std::move(v);
    }
    jet.components.push_back(std::move(comp));
  }
  return jet;
}

Foliation subfoliation_family(const Foliation& f, int k) {
  const int n = static_cast<int>(f.leaf_dim());
  if (k < 1 || k > n) throw std::invalid_argument("subfoliation_family: need 1 <= k <= n");
  if (k == 1) return f;

  const int s = n - k + 1;  // number of fields in the family
  std::vector<std::string> csyms;
  for (int i = 1; i <= s; ++i)
    for (int j = s + 1; j <= n; ++j)
      csyms.push_back("c" + std::to_string(i) + "_" + std::to_string(j));

  AffineChart chart = f.chart().extended(csyms);
  const auto& vars = chart.vars();
  TermOrder order = chart.order();
  const size_t N = vars.size();

  std::vector<VectorField> lifted;
  lifted.reserve(static_cast<size_t>(n));
  for (const auto& field : f.fields()) {
    VectorField g(N, RationalFunc::zero(vars, order));
    for (size_t c = 0; c < field.size(); ++c) g[c] = field[c].with_vars(vars, order);
    lifted.push_back(std::move(g));
  }

  std::vector<VectorField> family;
  family.reserve(static_cast<size_t>(s));
  for (int i = 0; i < s; ++i) {
    VectorField g = lifted[static_cast<size_t>(i)];
    for (int j = s; j < n; ++j) {
      RationalFunc c = RationalFunc::variable(
          "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1), vars, order);
      for (size_t comp = 0; comp < N; ++comp) {
        if (lifted[static_cast<size_t>(j)][comp].is_zero()) continue;
        g[comp] += c * lifted[static_cast<size_t>(j)][comp];
      }
    }
    family.push_back(std::move(g));
  }

  std::vector<std::string> params = f.params();
  params.insert(params.end(), csyms.begin(), csyms.end());
  return Foliation(chart, std::move(family), std::move(params));
}

}  // namespace fol
