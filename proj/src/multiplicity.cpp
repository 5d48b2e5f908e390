#include "foliation/multiplicity.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "foliation/errors.hpp"
#include "foliation/ideal.hpp"

namespace fol {

int order_bound(const OrderBoundPolicy& policy, int dim, int deg_xi, int deg_p) {
  if (policy.mode == OrderBoundPolicy::Mode::FixedMu) {
    if (policy.fixed_mu < 1) throw std::invalid_argument("order_bound: fixed mu must be >= 1");
    return policy.fixed_mu;
  }
  if (dim < 1 || deg_p < 1 || deg_xi < 0)
    throw std::invalid_argument("order_bound: need dim >= 1, deg_p >= 1, deg_xi >= 0");
  long base = static_cast<long>(deg_p) * (deg_xi + 1);
  long mu = 1;
  for (int i = 0; i < dim; ++i) {
    mu *= base;
    if (mu > 1'000'000) throw std::invalid_argument("order_bound: heuristic mu overflows sane range");
  }
  return static_cast<int>(std::max(mu, 1L));
}

const std::vector<std::string>& MultiplicityOperatorSet::chart_vars() const {
  static const std::vector<std::string> empty;
  if (!rows.empty() && !rows[0].empty()) return rows[0][0].vars();
  return empty;
}

namespace {

Rat multi_factorial(const Expvec& e) {
  Rat f = 1;
  for (int k : e) f *= Rat(factorial_int(static_cast<unsigned>(k)));
  return f;
}

}  // namespace

MultiplicityOperatorSet multiplicity_operator_matrix(const std::vector<MultiPoly>& P,
                                                     const Foliation& f, int k) {
  const size_t n = f.leaf_dim();
  if (P.size() != n)
    throw std::invalid_argument("multiplicity_operator_matrix: |P| must equal the leaf dimension");
  if (k < 1) throw std::invalid_argument("multiplicity_operator_matrix: k must be >= 1");
  const auto& vars = f.chart().vars();
  TermOrder order = f.chart().order();

  MultiplicityOperatorSet set;
  set.order = k;
  set.leaf_dim = n;
  set.cols = graded_exponents(n, k);
  set.num_cols = set.cols.size();
  set.minor_size = set.num_cols - static_cast<size_t>(k);

  std::map<Expvec, size_t> col_of;
  for (size_t c = 0; c < set.cols.size(); ++c) col_of[set.cols[c]] = c;

  int deg_p = 0;
  // iterated derivatives per component, canonical application order
  std::vector<std::map<Expvec, RationalFunc>> derivs(n);
  for (size_t i = 0; i < n; ++i) {
    MultiPoly pi = P[i].vars() == vars ? P[i] : P[i].with_vars(vars, order);
    deg_p = std::max(deg_p, pi.degree());
    for (const Expvec& a : set.cols) {
      if (total_degree(a) == 0) {
        derivs[i][a] = RationalFunc(pi);
        continue;
      }
      size_t q = 0;
      while (a[q] == 0) ++q;
      Expvec prev = a;
      prev[q] -= 1;
      derivs[i][a] = apply_field(f.fields()[q], derivs[i].at(prev));
    }
  }

  for (size_t i = 0; i < n; ++i) {
    for (const Expvec& beta : set.cols) {
      std::vector<RationalFunc> row(set.num_cols, RationalFunc::zero(vars, order));
      bool nonzero = false;
      for (const Expvec& alpha : set.cols) {
        Expvec gamma(alpha.size());
        bool ok = true;
        for (size_t q = 0; q < alpha.size(); ++q) {
          gamma[q] = alpha[q] - beta[q];
          if (gamma[q] < 0) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        RationalFunc e = derivs[i].at(gamma).scaled(1 / multi_factorial(gamma));
        if (!e.is_zero()) nonzero = true;
        row[col_of.at(alpha)] = std::move(e);
      }
      if (!nonzero) continue;
      set.row_tags.push_back({i, beta});
      set.rows.push_back(std::move(row));
    }
  }

  // clear denominators per row (lcm = minimal clearing); the factors must
  // not vanish identically on the chart
  for (const auto& row : set.rows) {
    MultiPoly lcm = MultiPoly::constant(1, vars, order);
    for (const auto& e : row)
      if (!e.is_zero() && !e.den().is_one()) lcm = poly_lcm(lcm, e.den());
    if (!lcm.is_one() && f.chart().vanishes_on_chart(lcm))
      throw ChartDenominator("row clearing factor " + lcm.str() + " vanishes on the chart");
    std::vector<MultiPoly> cleared;
    cleared.reserve(row.size());
    for (const auto& e : row) {
      if (e.is_zero()) {
        cleared.push_back(MultiPoly::zero(vars, order));
      } else {
        cleared.push_back(e.num() * lcm.div_exact(e.den()));
      }
    }
    set.cleared_rows.push_back(std::move(cleared));
    set.row_clearing.push_back(std::move(lcm));
  }

  long dn = f.max_field_degree_num();
  long dd = f.max_field_degree_den();
  set.degree_bound =
      static_cast<long>(set.minor_size) * (std::max(deg_p, 1) + static_cast<long>(k) * (dn + dd));
  return set;
}

void materialize_minors(MultiplicityOperatorSet& set, size_t minor_cap) {
  if (set.materialized) return;
  const size_t s = set.minor_size;
  const size_t rows = set.cleared_rows.size();
  const size_t cols = set.num_cols;
  const auto& vars = set.chart_vars();
  if (set.rows.empty()) {
    set.materialized = true;
    set.max_degree = -1;
    return;
  }
  TermOrder order = set.rows[0][0].num().order();

  // number of minors = C(rows, s) * C(cols, s)
  auto binom = [](size_t a, size_t b) -> double {
    if (b > a) return 0.0;
    double r = 1.0;
    for (size_t i = 0; i < b; ++i) r *= static_cast<double>(a - i) / static_cast<double>(i + 1);
    return r;
  };
  double count = binom(rows, s) * binom(cols, s);
  if (count > static_cast<double>(minor_cap))
    throw MinorCapExceeded("operator set has about " + std::to_string(count) +
                           " minors of size " + std::to_string(s) + ", cap is " +
                           std::to_string(minor_cap));

  std::set<std::string> seen;
  std::vector<size_t> rsel(s), csel(s);
  std::function<void(size_t, size_t)> pick_cols;
  auto emit = [&]() {
    std::vector<std::vector<MultiPoly>> sub(s, std::vector<MultiPoly>());
    for (size_t i = 0; i < s; ++i) {
      sub[i].reserve(s);
      for (size_t j = 0; j < s; ++j) sub[i].push_back(set.cleared_rows[rsel[i]][csel[j]]);
    }
    MultiPoly det = poly_det(std::move(sub), vars, order);
    if (det.is_zero()) return;
    det = det.primitive_part();
    if (seen.insert(det.str()).second) set.emitted.push_back(std::move(det));
  };
  std::function<void(size_t, size_t)> pick_rows = [&](size_t start, size_t depth) {
    if (depth == s) {
      pick_cols(0, 0);
      return;
    }
    for (size_t r = start; r + (s - depth) <= rows; ++r) {
      rsel[depth] = r;
      pick_rows(r + 1, depth + 1);
    }
  };
  pick_cols = [&](size_t start, size_t depth) {
    if (depth == s) {
      emit();
      return;
    }
    for (size_t c = start; c + (s - depth) <= cols; ++c) {
      csel[depth] = c;
      pick_cols(c + 1, depth + 1);
    }
  };
  pick_rows(0, 0);

  set.max_degree = -1;
  for (const auto& e : set.emitted) set.max_degree = std::max(set.max_degree, e.degree());
  set.materialized = true;
}

MultiplicityOperatorSet multiplicity_operators(const std::vector<MultiPoly>& P, const Foliation& f,
                                               int k, size_t minor_cap) {
  MultiplicityOperatorSet set = multiplicity_operator_matrix(P, f, k);
  materialize_minors(set, minor_cap);
  return set;
}

namespace {

// sparse exact Gaussian elimination with graded column prefixes: returns the
// rank after each column group (cols of total degree <= k, k = 0..order)
std::vector<size_t> rank_profile(std::vector<std::vector<std::pair<size_t, Rat>>> rows,
                                 const std::vector<Expvec>& cols, int order) {
  std::vector<size_t> group_end(static_cast<size_t>(order) + 1, 0);
  for (size_t c = 0; c < cols.size(); ++c) {
    int d = total_degree(cols[c]);
    for (int k = d; k <= order; ++k) group_end[static_cast<size_t>(k)] = c + 1;
  }

  // bucket rows by leading column
  std::vector<std::vector<size_t>> bucket(cols.size() + 1);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) bucket[rows[r][0].first].push_back(r);
  }

  auto subtract = [&](std::vector<std::pair<size_t, Rat>>& target,
                      const std::vector<std::pair<size_t, Rat>>& pivot, const Rat& factor) {
    // target -= factor * pivot (merged; both sorted by column)
    std::vector<std::pair<size_t, Rat>> out;
    out.reserve(target.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < target.size() && j < pivot.size()) {
      if (target[i].first == pivot[j].first) {
        Rat v = target[i].second - factor * pivot[j].second;
        if (!is_zero(v)) out.push_back({target[i].first, std::move(v)});
        ++i, ++j;
      } else if (target[i].first < pivot[j].first) {
        out.push_back(target[i++]);
      } else {
        Rat v = -factor * pivot[j].second;
        out.push_back({pivot[j].first, std::move(v)});
        ++j;
      }
    }
    for (; i < target.size(); ++i) out.push_back(target[i]);
    for (; j < pivot.size(); ++j) out.push_back({pivot[j].first, -factor * pivot[j].second});
    target = std::move(out);
  };

  std::vector<size_t> profile;
  size_t rank = 0;
  size_t next_group = 0;
  for (size_t c = 0; c < cols.size(); ++c) {
    while (next_group <= static_cast<size_t>(order) && group_end[next_group] == c) {
      profile.push_back(rank);
      ++next_group;
    }
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    // pivot: fewest entries
    size_t best = 0;
    for (size_t q = 1; q < cand.size(); ++q)
      if (rows[cand[q]].size() < rows[cand[best]].size()) best = q;
    size_t piv = cand[best];
    cand.erase(cand.begin() + static_cast<long>(best));
    ++rank;
    const Rat& pv = rows[piv][0].second;
    for (size_t r : cand) {
      Rat factor = rows[r][0].second / pv;
      subtract(rows[r], rows[piv], factor);
      if (!rows[r].empty()) bucket[rows[r][0].first].push_back(r);
    }
    cand.clear();
  }
  while (next_group <= static_cast<size_t>(order)) {
    profile.push_back(rank);
    ++next_group;
  }
  return profile;
}

}  // namespace

std::vector<bool> vanishing_pattern_at(const MultiplicityOperatorSet& set,
                                       const std::vector<Rat>& p) {
  // evaluate the raw rational entries; denominators must be invertible at p
  std::vector<std::vector<std::pair<size_t, Rat>>> rows;
  rows.reserve(set.rows.size());
  std::set<std::vector<std::pair<size_t, Rat>>> dedupe;
  for (const auto& row : set.rows) {
    std::vector<std::pair<size_t, Rat>> r;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c].is_zero()) continue;
      Rat v = row[c].eval(p);  // throws ChartDenominator on vanishing denominator
      if (!is_zero(v)) r.push_back({c, v});
    }
    if (!r.empty() && dedupe.insert(r).second) rows.push_back(std::move(r));
  }
  std::vector<size_t> profile = rank_profile(std::move(rows), set.cols, set.order);
  // profile[k] = rank of M_k(p); all order-k operators vanish iff
  // rank < N_k - k
  std::vector<bool> out;
  size_t nk = 0;
  for (int k = 1; k <= set.order; ++k) {
    // N_k = number of cols with degree <= k
    while (nk < set.cols.size() && total_degree(set.cols[nk]) <= k) ++nk;
    out.push_back(profile[static_cast<size_t>(k)] < nk - static_cast<size_t>(k));
  }
  return out;
}

bool operators_all_vanish_at(const MultiplicityOperatorSet& set, const std::vector<Rat>& p) {
  return vanishing_pattern_at(set, p).back();
}

namespace {

MultiPoly mul_trunc(const MultiPoly& a, const MultiPoly& b, int cap) {
  std::map<Expvec, Rat> acc;
  for (const auto& [ea, ca] : a.terms()) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > cap) continue;
      Expvec e(ea.size());
      for (size_t q = 0; q < e.size(); ++q) e[q] = ea[q] + eb[q];
      auto [it, inserted] = acc.try_emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  MultiPoly out(a.vars(), a.order());
  for (const auto& [e, c] : acc)
    if (!is_zero(c)) out.add_term(e, c);
  return out;
}

// compose a chart polynomial with per-variable images in the t-ring,
// truncating at total degree cap
MultiPoly compose_truncated(const MultiPoly& p, const std::vector<MultiPoly>& images, int cap,
                            const std::vector<std::string>& tvars, TermOrder torder) {
  std::vector<std::vector<MultiPoly>> pw(images.size());
  auto power = [&](size_t v, int e) -> const MultiPoly& {
    auto& cache = pw[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(1, tvars, torder));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(mul_trunc(cache.back(), images[v], cap));
    return cache[static_cast<size_t>(e)];
  };
  MultiPoly acc(tvars, torder);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(c, tvars, torder);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) t = mul_trunc(t, power(v, e[v]), cap);
    acc = acc + t;
  }
  return acc;
}

}  // namespace

std::optional<long> leaf_multiplicity_oracle(const std::vector<MultiPoly>& P, const Foliation& f,
                                             const std::vector<Rat>& p, int cap) {
  const size_t n = f.leaf_dim();
  if (P.size() != n)
    throw std::invalid_argument("leaf_multiplicity_oracle: |P| must equal the leaf dimension");
  if (cap < 1) throw std::invalid_argument("leaf_multiplicity_oracle: cap must be >= 1");
  if (!f.chart().point_on_chart(p))
    throw PointOffChart("sample point violates the chart ideal or a chart denominator");

  std::vector<std::string> tvars;
  for (size_t i = 0; i < n; ++i) tvars.push_back("t" + std::to_string(i + 1));
  TermOrder torder = TermOrder::grevlex();

  FlowJet jet = flow_jet(f, cap);
  std::vector<MultiPoly> images;
  images.reserve(jet.components.size());
  try {
    for (const auto& comp : jet.components) images.push_back(comp.eval_coeffs(p, tvars, torder));
  } catch (const ChartDenominator& e) {
    throw PointOffChart(std::string("flow jet undefined at the sample point: ") + e.what());
  }

  const auto& vars = f.chart().vars();
  std::vector<MultiPoly> gens;
  for (const auto& pi : P) {
    MultiPoly q = pi.vars() == vars ? pi : pi.with_vars(vars, f.chart().order());
    // shift so the germ sits at the origin of the t-chart: the jet already
    // expands around p, so composing gives the leafwise germ directly
    MultiPoly composed = compose_truncated(q, images, cap, tvars, torder);
    // constant term = P(p); subtracting nothing: a unit constant term makes
    // the local algebra vanish, which is the multiplicity-0 answer
    gens.push_back(std::move(composed));
  }
  // add m^{cap+1}
  for (const Expvec& e : graded_exponents(n, cap + 1))
    if (total_degree(e) == cap + 1) gens.push_back(MultiPoly::monomial(e, 1, tvars, torder));

  Ideal gb = groebner_basis(Ideal(tvars, torder, std::move(gens)), torder);
  long dim = quotient_dimension(gb, cap);
  if (dim < cap) return dim;
  return std::nullopt;
}

}  // namespace fol
