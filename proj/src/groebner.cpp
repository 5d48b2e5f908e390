#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "foliation/ideal.hpp"

namespace fol {

Ideal::Ideal(std::vector<std::string> vars, TermOrder order, std::vector<MultiPoly> gens,
             bool is_groebner)
    : vars_(std::move(vars)), order_(order), is_groebner_(is_groebner) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    assert(g.vars() == vars_);
    gens_.push_back(g.order().same_as(order_) ? std::move(g) : g.with_order(order_));
  }
}

bool Ideal::is_unit_ideal() const {
  for (const auto& g : gens_)
    if (g.is_constant() && !g.is_zero()) return true;
  if (is_groebner_) return false;
  return groebner_basis(*this, order_).is_unit_ideal();
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].str();
  os << "}";
  return os.str();
}

namespace {

bool exp_divides(const Expvec& a, const Expvec& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expvec exp_lcm(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exp_coprime(const Expvec& a, const Expvec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Pair {
  size_t i, j;
  long sugar;
  Expvec lcm;
};

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
  Expvec l = exp_lcm(f.leading_exp(), g.leading_exp());
  Expvec mf(l.size()), mg(l.size());
  for (size_t k = 0; k < l.size(); ++k) {
    mf[k] = l[k] - f.leading_exp()[k];
    mg[k] = l[k] - g.leading_exp()[k];
  }
  return f.mul_monomial(mf, 1 / f.leading_coeff()) - g.mul_monomial(mg, 1 / g.leading_coeff());
}

// full reduction; tracks sugar when a slot is provided
MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& G,
                      const std::vector<long>* sugars = nullptr, long* sugar_io = nullptr) {
  MultiPoly r(f.vars(), f.order());
  MultiPoly h = f;
  while (!h.is_zero()) {
    bool divided = false;
    for (size_t i = 0; i < G.size(); ++i) {
      const Expvec& ge = G[i].leading_exp();
      const Expvec& he = h.leading_exp();
      if (!exp_divides(ge, he)) continue;
      Expvec q(he.size());
      for (size_t k = 0; k < q.size(); ++k) q[k] = he[k] - ge[k];
      Rat c = h.leading_coeff() / G[i].leading_coeff();
      if (sugars && sugar_io)
        *sugar_io = std::max(*sugar_io, (*sugars)[i] + total_degree(q));
      h = h - G[i].mul_monomial(q, c);
      divided = true;
      break;
    }
    if (!divided) {
      // move leading term of h to the remainder
      r.add_term(h.leading_exp(), h.leading_coeff());
      h = h - MultiPoly::monomial(h.leading_exp(), h.leading_coeff(), h.vars(), h.order());
    }
  }
  return r;
}

// Gebauer-Möller style update of the pair queue when h joins the basis.
void update_pairs(std::vector<MultiPoly>& G, std::vector<long>& sugars, std::vector<Pair>& pairs,
                  const MultiPoly& h, long h_sugar) {
  size_t t = G.size();
  const Expvec& lh = h.leading_exp();

  std::vector<Pair> fresh;
  fresh.reserve(t);
  for (size_t k = 0; k < t; ++k) {
    Expvec l = exp_lcm(G[k].leading_exp(), lh);
    long s = std::max(sugars[k] + total_degree(l) - total_degree(G[k].leading_exp()),
                      h_sugar + total_degree(l) - total_degree(lh));
    fresh.push_back({k, t, s, std::move(l)});
  }

  // old pairs whose lcm is a proper multiple of both new lcms are redundant
  std::vector<Pair> kept;
  kept.reserve(pairs.size());
  for (auto& p : pairs) {
    if (exp_divides(lh, p.lcm) && fresh[p.i].lcm != p.lcm && fresh[p.j].lcm != p.lcm) continue;
    kept.push_back(std::move(p));
  }
  pairs = std::move(kept);

  // among the fresh pairs keep a minimal set of lcms
  std::sort(fresh.begin(), fresh.end(), [](const Pair& a, const Pair& b) {
    int da = total_degree(a.lcm), db = total_degree(b.lcm);
    if (da != db) return da < db;
    if (a.lcm != b.lcm) return a.lcm < b.lcm;
    return a.i < b.i;
  });
  std::vector<Pair> minimal;
  for (auto& p : fresh) {
    bool redundant = false;
    for (auto& q : minimal) {
      if (exp_divides(q.lcm, p.lcm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(p));
  }

  // Buchberger product criterion
  for (auto& p : minimal) {
    if (!exp_coprime(G[p.i].leading_exp(), lh)) pairs.push_back(std::move(p));
  }

  G.push_back(h);
  sugars.push_back(h_sugar);
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
  std::vector<MultiPoly> G;
  G.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g);
  if (G.empty()) return p;
  return reduce_full(p, G);
}

Ideal groebner_basis(const Ideal& ideal, TermOrder order) {
  const auto& vars = ideal.vars();
  std::vector<MultiPoly> input;
  input.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) {
    if (g.is_zero()) continue;
    input.push_back(g.order().same_as(order) ? g : g.with_order(order));
  }

  std::vector<MultiPoly> G;
  std::vector<long> sugars;
  std::vector<Pair> pairs;

  std::sort(input.begin(), input.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order.less(a.leading_exp(), b.leading_exp());
  });
  for (auto& f : input) {
    MultiPoly h = reduce_full(f, G);
    if (!h.is_zero()) update_pairs(G, sugars, pairs, h.monic(), h.degree());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int da = total_degree(a.lcm), db = total_degree(b.lcm);
      if (da != db) return da < db;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair p = *best;
    pairs.erase(best);
    long sugar = p.sugar;
    MultiPoly h = reduce_full(s_poly(G[p.i], G[p.j]), G, &sugars, &sugar);
    if (h.is_zero()) continue;
    update_pairs(G, sugars, pairs, h.monic(), sugar);
    if (total_degree(G.back().leading_exp()) == 0) break;  // unit ideal
  }

  // minimalize: drop generators whose leading term is divisible by another's
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      if (exp_divides(G[j].leading_exp(), G[i].leading_exp()) &&
          (G[j].leading_exp() != G[i].leading_exp() || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // tail-reduce each against the others
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }

  if (reduced.empty()) return Ideal(vars, order, {}, true);
  for (const auto& g : reduced) {
    if (g.is_constant()) return Ideal(vars, order, {MultiPoly::constant(1, vars, order)}, true);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order.less(b.leading_exp(), a.leading_exp());
  });
  return Ideal(vars, order, std::move(reduced), true);
}

MultiPoly reduce_mod_ideal(const MultiPoly& p, const Ideal& gb) {
  if (!gb.is_groebner())
    throw std::invalid_argument("reduce_mod_ideal: generator list is not marked as a Groebner basis");
  MultiPoly q = p.order().same_as(gb.order()) ? p : p.with_order(gb.order());
  return normal_form(q, gb.gens());
}

bool ideal_member(const MultiPoly& p, const Ideal& ideal) {
  if (p.is_zero()) return true;
  if (ideal.is_groebner()) return reduce_mod_ideal(p, ideal).is_zero();
  Ideal gb = groebner_basis(ideal, ideal.order());
  return reduce_mod_ideal(p, gb).is_zero();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
  const auto& vars = ideal.vars();
  std::vector<std::string> dropped, kept;
  for (const auto& v : vars) {
    if (std::find(drop.begin(), drop.end(), v) != drop.end())
      dropped.push_back(v);
    else
      kept.push_back(v);
  }
  for (const auto& d : drop)
    if (std::find(vars.begin(), vars.end(), d) == vars.end())
      throw std::invalid_argument("eliminate: unknown variable " + d);
  if (dropped.empty()) {
    std::vector<MultiPoly> gens = ideal.gens();
    return Ideal(vars, ideal.order(), std::move(gens));
  }

  std::vector<std::string> reordered = dropped;
  reordered.insert(reordered.end(), kept.begin(), kept.end());
  TermOrder block = TermOrder::block(static_cast<int>(dropped.size()));

  std::vector<MultiPoly> moved;
  moved.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) moved.push_back(g.with_vars(reordered, block));
  Ideal gb = groebner_basis(Ideal(reordered, block, std::move(moved)), block);

  TermOrder out_order = TermOrder::grevlex();
  std::vector<MultiPoly> kept_gens;
  for (const auto& g : gb.gens()) {
    bool uses_dropped = false;
    for (const auto& [e, c] : g.terms()) {
      for (size_t k = 0; k < dropped.size(); ++k)
        if (e[k] != 0) {
          uses_dropped = true;
          break;
        }
      if (uses_dropped) break;
    }
    if (!uses_dropped) kept_gens.push_back(g.with_vars(kept, out_order));
  }
  return Ideal(kept, out_order, std::move(kept_gens), true);
}

Ideal adjoin_inverse(const Ideal& ideal, const MultiPoly& q, const std::string& fresh_var) {
  std::vector<std::string> vars = ideal.vars();
  if (std::find(vars.begin(), vars.end(), fresh_var) != vars.end())
    throw std::invalid_argument("adjoin_inverse: variable name collision " + fresh_var);
  vars.push_back(fresh_var);
  TermOrder order = ideal.order();
  std::vector<MultiPoly> gens;
  gens.reserve(ideal.gens().size() + 1);
  for (const auto& g : ideal.gens()) gens.push_back(g.with_vars(vars, order));
  MultiPoly u = MultiPoly::variable(fresh_var, vars, order);
  gens.push_back(q.with_vars(vars, order) * u - MultiPoly::constant(1, vars, order));
  return Ideal(vars, order, std::move(gens));
}

bool radical_member(const MultiPoly& p, const Ideal& ideal) {
  if (p.is_zero()) return true;
  Ideal sat = adjoin_inverse(ideal, p);
  return groebner_basis(sat, sat.order()).is_unit_ideal();
}

long quotient_dimension(const Ideal& gb, int degree_cap) {
  if (!gb.is_groebner())
    throw std::invalid_argument("quotient_dimension: needs a Groebner basis");
  if (gb.is_unit_ideal()) return 0;
  std::vector<Expvec> lead;
  lead.reserve(gb.gens().size());
  for (const auto& g : gb.gens()) lead.push_back(g.leading_exp());

  size_t n = gb.vars().size();
  long count = 0;
  Expvec mono(n, 0);
  // enumerate monomials of total degree <= cap, counting the standard ones
  std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
    if (i == n) {
      for (const auto& l : lead)
        if (exp_divides(l, mono)) return;
      ++count;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      mono[i] = e;
      rec(i + 1, remaining - e);
    }
    mono[i] = 0;
  };
  rec(0, degree_cap);
  return count;
}

}  // namespace fol
