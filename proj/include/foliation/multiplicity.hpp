#ifndef FOLIATION_MULTIPLICITY_HPP
#define FOLIATION_MULTIPLICITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "foliation/foliation.hpp"

namespace fol {

// Truncation-order policy: a user-fixed mu (rigorous when sourced from the
// multiplicity-bound literature) or the documented non-rigorous heuristic
// (deg_P * (deg_xi + 1))^d.
struct OrderBoundPolicy {
  enum class Mode { FixedMu, Heuristic };
  Mode mode = Mode::Heuristic;
  int fixed_mu = 0;

  static OrderBoundPolicy fixed(int mu) { return {Mode::FixedMu, mu}; }
  static OrderBoundPolicy heuristic() { return {Mode::Heuristic, 0}; }
  bool rigorous() const { return mode == Mode::FixedMu; }
};

int order_bound(const OrderBoundPolicy& policy, int dim, int deg_xi, int deg_p);

// Multiplicity operators of order k for an n-tuple P along an n-dimensional
// foliation. Realization: the truncated multiplication matrix M_k with rows
// trunc_k(t^beta * F_i), F = leafwise restriction of P in the flow chart,
// whose entries are the iterated field derivatives D^{alpha-beta}(P_i) /
// (alpha-beta)!. All operators of order k vanish at p precisely when
// rank M_k(p) < N_k - k, i.e. when every minor of that size vanishes; the
// minors are the emitted polynomials.
struct MultiplicityOperatorSet {
  int order = 0;         // k
  size_t leaf_dim = 0;   // n
  size_t num_cols = 0;   // N_k = C(k+n, n)
  size_t minor_size = 0; // N_k - k

  std::vector<Expvec> cols;                          // alpha, graded order
  std::vector<std::pair<size_t, Expvec>> row_tags;   // (component i, beta)
  std::vector<std::vector<RationalFunc>> rows;       // raw matrix entries
  std::vector<MultiPoly> row_clearing;               // per-row cleared factor
  std::vector<std::vector<MultiPoly>> cleared_rows;  // polynomial entries

  std::vector<MultiPoly> emitted;  // minors of size minor_size (on demand)
  bool materialized = false;
  int max_degree = -1;             // degree ledger over emitted
  long degree_bound = 0;           // documented bound minor_size*(degP + k*(dn+dd))

  const std::vector<std::string>& chart_vars() const;
};

// Builds the operator matrix (no minors yet).
MultiplicityOperatorSet multiplicity_operator_matrix(const std::vector<MultiPoly>& P,
                                                     const Foliation& f, int k);

// Materializes the emitted polynomial list; throws MinorCapExceeded when the
// number of size-(N_k - k) minors exceeds `minor_cap`.
void materialize_minors(MultiplicityOperatorSet& set, size_t minor_cap = 20000);

// Full operator set with materialized minors.
MultiplicityOperatorSet multiplicity_operators(const std::vector<MultiPoly>& P, const Foliation& f,
                                               int k, size_t minor_cap = 20000);

// Do all operators of order k' vanish at p, for every k' = 1..set.order?
// Entry j (0-based) answers k' = j+1. A single exact elimination pass
// serves all orders.
std::vector<bool> vanishing_pattern_at(const MultiplicityOperatorSet& set,
                                       const std::vector<Rat>& p);
bool operators_all_vanish_at(const MultiplicityOperatorSet& set, const std::vector<Rat>& p);

// Leafwise multiplicity oracle: substitutes the order-cap flow jet at p into
// P and measures the truncated local algebra C[[t]]/((F) + m^{cap+1}).
// nullopt = AboveCap (multiplicity >= cap, possibly infinite).
std::optional<long> leaf_multiplicity_oracle(const std::vector<MultiPoly>& P, const Foliation& f,
                                             const std::vector<Rat>& p, int cap);

}  // namespace fol

#endif
