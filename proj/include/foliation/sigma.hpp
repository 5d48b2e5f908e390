#ifndef FOLIATION_SIGMA_HPP
#define FOLIATION_SIGMA_HPP

#include <string>
#include <vector>

#include "foliation/ideal.hpp"
#include "foliation/multiplicity.hpp"

namespace fol {

// Equations for the locus of points of V whose leaf meets V in dimension
// >= k, together with the audit data the pipeline accumulates.
struct SigmaLocusResult {
  Ideal generators;  // on the foliation's chart ring (V's generators joined)
  int k = 0;
  int mu = 0;
  bool rigorous = false;
  int max_degree = -1;   // ledger: max generator degree
  long sum_degree = 0;   // ledger: sum of generator degrees
  long degree_bound = 0; // documented composition of the per-stage minor bound
  size_t subsets_used = 0;
  std::vector<std::string> provenance;  // canonically sorted
};

// V(closure) \ V(boundary); the boundary ideal contains the closure ideal
// by construction (generators are summed).
struct ConstructibleSet {
  Ideal closure;
  Ideal boundary;
  int closure_degree = -1;
  int boundary_degree = -1;
  long complexity = 0;  // sum of the two degree ledgers
};

// Full equation-generation pipeline: complete-intersection reduction over
// subsets P' of V's generators of size n-k+1, parameterized subfoliation
// family F'(c), multiplicity operators at order mu, c-coefficient
// extraction, and the join over subsets.
SigmaLocusResult sigma_equations(const Ideal& V, const Foliation& f, int k,
                                 const OrderBoundPolicy& policy, size_t subset_cap = 2000,
                                 size_t minor_cap = 20000);

// Same contract with declared parameters riding along as leafwise
// constants; rejects foliations that move a declared parameter.
SigmaLocusResult a_locus(const Ideal& V, const Foliation& f, int k,
                         const OrderBoundPolicy& policy, size_t subset_cap = 2000,
                         size_t minor_cap = 20000);

ConstructibleSet constructible_difference(const Ideal& A, const Ideal& B);

// Zariski closure of the coordinate projection (delegates to eliminate).
Ideal project_closure(const Ideal& A, const std::vector<std::string>& drop,
                      std::vector<std::string>* provenance = nullptr);

}  // namespace fol

#endif
