#ifndef FOLIATION_PAIRING_HPP
#define FOLIATION_PAIRING_HPP

#include "foliation/hyperelliptic.hpp"
#include "foliation/series.hpp"

namespace fol {

// Symplectic pairing matrix Lambda[i][j] = sum_P res_P(F_i * omega_j), the
// 2*pi*i-normalized cup product on the de Rham basis. Antisymmetric with
// vanishing holomorphic block and invertible on the chart.
struct PairingMatrix {
  RfMatrix lambda;  // 2g x 2g over the base ring
};

// Laurent expansion of a form at the single point at infinity of the odd
// model: x = t^{-2}, y = t^{-(2g+1)} (1 + ...), branch fixed by leading
// coefficient +1. Returns coefficients for exponents <= `order`.
LaurentSeries expansion_at_infinity(const DeRhamForm& form, const HyperellipticFamily& fam,
                                    int order);

// sum_P res_P(f * eta), f a primitive of omega; both forms second kind.
RationalFunc residue_pairing(const DeRhamForm& omega, const DeRhamForm& eta,
                             const HyperellipticFamily& fam);

PairingMatrix pairing_matrix(const HyperellipticFamily& fam);

// the standard block form J = [[0, I], [-I, 0]] as rational functions
RfMatrix standard_j(size_t g, const std::vector<std::string>& vars, TermOrder order);

struct NormalizationResult {
  RfMatrix base_change;        // M with M Lambda M^T = J
  ConnectionMatrix connection; // Omega' = (dM) M^{-1} + M Omega M^{-1}
};

// Base change keeping the holomorphic block and combining the second-kind
// forms so that the pairing becomes J exactly; the transformed connection
// satisfies Omega'^T J + J Omega' = 0 identically.
NormalizationResult symplectic_normalize(const HyperellipticFamily& fam, const PairingMatrix& pm,
                                         const ConnectionMatrix& conn);

}  // namespace fol

#endif
