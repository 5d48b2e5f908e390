#include "foliation/sigma.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "foliation/errors.hpp"

namespace fol {

namespace {

double binom_approx(size_t a, size_t b) {
  if (b > a) return 0.0;
  double r = 1.0;
  for (size_t i = 0; i < b; ++i) r *= static_cast<double>(a - i) / static_cast<double>(i + 1);
  return r;
}

}  // namespace

SigmaLocusResult sigma_equations(const Ideal& V, const Foliation& f, int k,
                                 const OrderBoundPolicy& policy, size_t subset_cap,
                                 size_t minor_cap) {
  const int n = static_cast<int>(f.leaf_dim());
  if (k < 1 || k > n)
    throw std::invalid_argument("sigma_equations: need 1 <= k <= leaf dimension");
  const auto& vars = f.chart().vars();
  TermOrder order = f.chart().order();
  if (V.vars() != vars)
    throw std::invalid_argument("sigma_equations: V must live on the foliation chart");

  SigmaLocusResult res;
  res.k = k;
  res.rigorous = policy.rigorous();

  std::vector<MultiPoly> vgens;
  int deg_v = 1;
  for (const auto& g : V.gens()) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      // unit ideal: the empty locus, vacuously
      res.generators = Ideal(vars, order, {MultiPoly::constant(1, vars, order)});
      res.mu = policy.rigorous() ? policy.fixed_mu : 1;
      res.max_degree = 0;
      res.sum_degree = 0;
      res.degree_bound = 1;
      res.provenance.push_back("degenerate: V is the unit ideal; empty locus");
      return res;
    }
    deg_v = std::max(deg_v, g.degree());
    vgens.push_back(g);
  }

  const size_t s = static_cast<size_t>(n - k + 1);  // subset size

  if (vgens.size() < s) {
    // fewer equations than n-k+1: at every point of V the leaf meets V in
    // dimension >= n - #gens >= k, so the locus is all of V
    res.generators = Ideal(vars, order, vgens);
    res.mu = policy.rigorous() ? policy.fixed_mu
                               : order_bound(policy, n - k + 1, f.max_field_degree_num(), deg_v);
    res.max_degree = res.generators.is_zero_ideal() ? 0 : deg_v;
    res.sum_degree = 0;
    for (const auto& g : res.generators.gens()) res.sum_degree += g.degree();
    res.degree_bound = std::max<long>(deg_v, 1);
    res.provenance.push_back("trivial: fewer generators than n-k+1; locus is all of V");
    res.subsets_used = 0;
    return res;
  }

  double subsets = binom_approx(vgens.size(), s);
  if (subsets > static_cast<double>(subset_cap))
    throw SubsetCapExceeded("about " + std::to_string(subsets) + " generator subsets of size " +
                            std::to_string(s) + " exceed the cap " + std::to_string(subset_cap));

  Foliation family = subfoliation_family(f, k);
  const auto& fam_vars = family.chart().vars();
  TermOrder fam_order = family.chart().order();

  // the extension variables are exactly those beyond the original chart
  std::vector<int> c_indices;
  for (size_t i = vars.size(); i < fam_vars.size(); ++i)
    c_indices.push_back(static_cast<int>(i));

  int mu = order_bound(policy, static_cast<int>(s),
                       std::max(family.max_field_degree_num(), family.max_field_degree_den()),
                       deg_v);
  res.mu = mu;

  std::set<std::string> seen;
  std::vector<MultiPoly> out_gens;
  auto push_gen = [&](const MultiPoly& g) {
    if (g.is_zero()) return;
    MultiPoly p = g.primitive_part();
    if (seen.insert(p.str()).second) out_gens.push_back(std::move(p));
  };

  res.degree_bound = deg_v;
  std::vector<size_t> sel(s);
  std::function<void(size_t, size_t)> run_subset = [&](size_t start, size_t depth) {
    if (depth == s) {
      std::vector<MultiPoly> P;
      P.reserve(s);
      std::ostringstream tag;
      tag << "subset {";
      for (size_t q = 0; q < s; ++q) {
        P.push_back(vgens[sel[q]].with_vars(fam_vars, fam_order));
        tag << (q ? "," : "") << (sel[q] + 1);
      }
      tag << "}";
      MultiplicityOperatorSet ops = multiplicity_operators(P, family, mu, minor_cap);
      res.degree_bound = std::max(res.degree_bound, ops.degree_bound);
      size_t extracted = 0;
      for (const auto& e : ops.emitted) {
        for (const auto& [cexp, coef] : e.coefficients_of(c_indices)) {
          if (coef.is_zero()) continue;
          push_gen(coef.with_vars(vars, order));
          ++extracted;
        }
      }
      tag << ": " << ops.emitted.size() << " operators, " << extracted
          << " coefficient equations, max operator degree " << ops.max_degree;
      res.provenance.push_back(tag.str());
      ++res.subsets_used;
      return;
    }
    for (size_t i = start; i + (s - depth) <= vgens.size(); ++i) {
      sel[depth] = i;
      run_subset(i + 1, depth + 1);
    }
  };
  run_subset(0, 0);

  for (const auto& g : vgens) push_gen(g);

  res.max_degree = 0;
  res.sum_degree = 0;
  for (const auto& g : out_gens) {
    res.max_degree = std::max(res.max_degree, g.degree());
    res.sum_degree += g.degree();
  }
  std::sort(res.provenance.begin(), res.provenance.end());
  res.generators = Ideal(vars, order, std::move(out_gens));
  return res;
}

SigmaLocusResult a_locus(const Ideal& V, const Foliation& f, int k, const OrderBoundPolicy& policy,
                         size_t subset_cap, size_t minor_cap) {
  // declared parameters must be leafwise constants
  for (const auto& p : f.params()) {
    int idx = f.chart().var_index(p);
    if (idx < 0) throw std::invalid_argument("a_locus: unknown parameter " + p);
    for (size_t i = 0; i < f.leaf_dim(); ++i) {
      if (!f.chart().vanishes_on_chart(f.fields()[i][static_cast<size_t>(idx)]))
        throw ParameterNotConstant("field " + std::to_string(i + 1) + " moves parameter " + p);
    }
  }
  return sigma_equations(V, f, k, policy, subset_cap, minor_cap);
}

ConstructibleSet constructible_difference(const Ideal& A, const Ideal& B) {
  if (A.vars() != B.vars())
    throw std::invalid_argument("constructible_difference: ambient variables differ");
  ConstructibleSet out;
  out.closure = A;
  std::vector<MultiPoly> boundary = A.gens();
  for (const auto& g : B.gens()) boundary.push_back(g);
  out.boundary = Ideal(A.vars(), A.order(), std::move(boundary));
  out.closure_degree = 0;
  for (const auto& g : out.closure.gens()) out.closure_degree = std::max(out.closure_degree, g.degree());
  out.boundary_degree = 0;
  for (const auto& g : out.boundary.gens())
    out.boundary_degree = std::max(out.boundary_degree, g.degree());
  out.complexity = out.closure_degree + out.boundary_degree;
  return out;
}

Ideal project_closure(const Ideal& A, const std::vector<std::string>& drop,
                      std::vector<std::string>* provenance) {
  Ideal image = eliminate(A, drop);
  if (provenance) {
    std::ostringstream os;
    os << "projection: dropped {";
    for (size_t i = 0; i < drop.size(); ++i) os << (i ? "," : "") << drop[i];
    os << "}, " << image.gens().size() << " generators";
    provenance->push_back(os.str());
  }
  return image;
}

}  // namespace fol
