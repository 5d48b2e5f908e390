#ifndef FOLIATION_PERIODS_HPP
#define FOLIATION_PERIODS_HPP

#include <complex>
#include <vector>

#include "foliation/hyperelliptic.hpp"
#include "foliation/pairing.hpp"

namespace fol {

using Cplx = std::complex<long double>;
using CMatrix = std::vector<std::vector<Cplx>>;

// Approximate period matrix at a rational base point of a family over a
// 1-dimensional base. Rows are the symplectically normalized basis forms,
// columns a homology basis corrected to be standard symplectic: the matrix
// satisfies Pi J Pi^T ~ 2*pi*i*J (Riemann relations) within the estimate.
// pi_raw holds the periods of the x^i dx/y basis over the same cycles, so
// Pi_raw J Pi_raw^T ~ 2*pi*i*Lambda.
struct PeriodMatrixNumeric {
  Rat lambda0;
  CMatrix pi;      // normalized basis
  CMatrix pi_raw;  // x^i dx/y basis
  long double error_estimate = 0;
};

PeriodMatrixNumeric numeric_period_oracle(const HyperellipticFamily& fam, const Rat& lambda0,
                                          int precision_digits);

// beta = B^{-1} A over the normalized basis blocks; symmetric with
// positive-definite imaginary part within tolerance.
CMatrix beta_blocks(const PeriodMatrixNumeric& pm);

// max-norm residuals for the numeric identities
long double riemann_relation_residual(const PeriodMatrixNumeric& pm);
long double pairing_agreement_residual(const HyperellipticFamily& fam,
                                       const PeriodMatrixNumeric& pm);
// finite-difference dPi/dlambda vs Omega' * Pi (normalized connection)
long double section_residual(const HyperellipticFamily& fam, const Rat& lambda0,
                             int precision_digits);
// |L(period)| for a monic operator applied to one period of `form`
long double picard_fuchs_residual(const HyperellipticFamily& fam, const DeRhamForm& form,
                                  const DiffOperator& op, const Rat& lambda0,
                                  int precision_digits);

bool imag_positive_definite(const CMatrix& beta);

// Integer congruence reduction of a unimodular skew-symmetric matrix to the
// standard form J: u * q * u^T = J, with the inverse tracked alongside.
// Used to correct a raw cycle basis into a symplectic one.
using IMatrix = std::vector<std::vector<long long>>;
struct SkewReduction {
  IMatrix u;
  IMatrix u_inv;
};
SkewReduction skew_normalize(IMatrix q);

}  // namespace fol

#endif
