#include "foliation/pairing.hpp"

#include <algorithm>
#include <cassert>

#include "foliation/errors.hpp"

namespace fol {

namespace {

constexpr const char* kParam = "t";

int degree_in_x(const MultiPoly& num) {
  int d = 0;
  for (const auto& [e, c] : num.terms()) d = std::max(d, e[0]);
  return d;
}

// lowest exponent of the expansion of num(x) dx / y^m at infinity
int expansion_low(const DeRhamForm& form, const HyperellipticFamily& fam, int deg_a) {
  return form.pole_order * (2 * fam.genus() + 1) - 3 - 2 * deg_a;
}

}  // namespace

LaurentSeries expansion_at_infinity(const DeRhamForm& form, const HyperellipticFamily& fam,
                                    int order) {
  if (form.pole_order < 1 || form.pole_order % 2 == 0)
    throw PoleOrderParity("expansion_at_infinity: odd pole order required");
  const auto& bv = fam.base_vars();
  TermOrder bo = fam.order();
  const int g = fam.genus();
  const int m = form.pole_order;

  MultiPoly num = form.numerator.vars() == fam.curve_vars()
                      ? form.numerator
                      : form.numerator.with_vars(fam.curve_vars(), fam.order());
  int deg_a = degree_in_x(num);
  int low = expansion_low(form, fam, deg_a);
  if (order < low)
    throw TruncationTooSmall("expansion_at_infinity: requested order " + std::to_string(order) +
                             " is below the leading exponent " + std::to_string(low));

  // working truncation: slack for the unit-series manipulations
  int W = order - low + 2 * (2 * g + 1) + 4;

  // w(t) = t^{2(2g+1)} f(t^{-2}) = 1 + c_{2g} t^2 + ... (exact polynomial)
  LaurentSeries w = LaurentSeries::zero_to(kParam, bv, bo, W);
  {
    LaurentSeries acc(kParam, bv, bo, 0, W);
    const auto& fc = fam.f_coeffs();
    for (size_t i = 0; i < fc.size(); ++i) {
      if (fc[i].is_zero()) continue;
      int e = 2 * (2 * g + 1) - 2 * static_cast<int>(i);
      if (e < W) acc.set_coeff(e, fc[i]);
    }
    w = acc;
  }
  LaurentSeries u = w.sqrt_one_plus();       // y = t^{-(2g+1)} u, u(0) = 1
  LaurentSeries um = u.pow(m).inverse();     // u^{-m}

  // A(t^{-2}) as an exact Laurent polynomial over the base ring
  LaurentSeries ax(kParam, bv, bo, -2 * deg_a, W);
  for (const auto& [e, c] : num.coefficients_of({0})) {
    if (c.is_zero()) continue;
    ax.set_coeff(-2 * e[0], RationalFunc(c.with_vars(bv, bo)));
  }

  // form = A(x) dx / y^m = -2 t^{m(2g+1)-3} A(t^{-2}) u^{-m} dt
  LaurentSeries mono = LaurentSeries::monomial(
      kParam, RationalFunc::constant(-2, bv, bo), m * (2 * g + 1) - 3, W + m * (2 * g + 1));
  LaurentSeries out = mono * ax * um;
  if (out.trunc() < order + 1)
    throw TruncationTooSmall("expansion_at_infinity: internal truncation too small");
  return out.truncate(order + 1);
}

RationalFunc residue_pairing(const DeRhamForm& omega, const DeRhamForm& eta,
                             const HyperellipticFamily& fam) {
  const auto& bv = fam.base_vars();
  TermOrder bo = fam.order();

  MultiPoly na = omega.numerator.vars() == fam.curve_vars()
                     ? omega.numerator
                     : omega.numerator.with_vars(fam.curve_vars(), fam.order());
  MultiPoly nb = eta.numerator.vars() == fam.curve_vars()
                     ? eta.numerator
                     : eta.numerator.with_vars(fam.curve_vars(), fam.order());
  int low_o = expansion_low(omega, fam, degree_in_x(na));
  int low_e = expansion_low(eta, fam, degree_in_x(nb));

  // res(F * eta) needs F up to -1 - low_e and eta up to -2 - low_o
  int ord_o = std::max(low_o, -2 - low_e);
  int ord_e = std::max(low_e, -2 - low_o);

  LaurentSeries wo = expansion_at_infinity(omega, fam, ord_o);
  LaurentSeries we = expansion_at_infinity(eta, fam, ord_e);

  if (wo.trunc() > -1 && !wo.residue().is_zero())
    throw NonSecondKind("residue_pairing: first form has residue " + wo.residue().str());
  if (we.trunc() > -1 && !we.residue().is_zero())
    throw NonSecondKind("residue_pairing: second form has residue " + we.residue().str());

  LaurentSeries primitive = wo.antiderivative();
  LaurentSeries prod = primitive * we;
  if (prod.trunc() <= -1) {
    // product is known only below t^{-1}: all coefficients there are zero
    // exactly when the series vanish; the residue is then zero
    return RationalFunc::zero(bv, bo);
  }
  return prod.residue();
}

PairingMatrix pairing_matrix(const HyperellipticFamily& fam) {
  const int g = fam.genus();
  const auto& bv = fam.base_vars();
  TermOrder bo = fam.order();
  std::vector<DeRhamForm> basis = derham_basis(fam);

  PairingMatrix pm;
  pm.lambda = rf_matrix_zero(static_cast<size_t>(2 * g), static_cast<size_t>(2 * g), bv, bo);
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j)
      pm.lambda[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          residue_pairing(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], fam);

  // invariants: antisymmetry, isotropic holomorphic block, nondegeneracy
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) {
      const RationalFunc& a = pm.lambda[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const RationalFunc& b = pm.lambda[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (!(a + b).is_zero())
        throw DegeneratePairing("pairing matrix is not antisymmetric at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
      if (i < g && j < g && !a.is_zero())
        throw DegeneratePairing("holomorphic block is not isotropic");
    }
  if (rf_matrix_det(pm.lambda).is_zero())
    throw DegeneratePairing("pairing matrix is degenerate on the chart");
  return pm;
}

RfMatrix standard_j(size_t g, const std::vector<std::string>& vars, TermOrder order) {
  RfMatrix j = rf_matrix_zero(2 * g, 2 * g, vars, order);
  for (size_t i = 0; i < g; ++i) {
    j[i][g + i] = RationalFunc::constant(1, vars, order);
    j[g + i][i] = RationalFunc::constant(-1, vars, order);
  }
  return j;
}

NormalizationResult symplectic_normalize(const HyperellipticFamily& fam, const PairingMatrix& pm,
                                         const ConnectionMatrix& conn) {
  const size_t g = static_cast<size_t>(fam.genus());
  const auto& bv = fam.base_vars();
  TermOrder bo = fam.order();
  const size_t n = 2 * g;
  assert(pm.lambda.size() == n);

  // Lambda = [[0, B], [-B^T, C]]; keep the holomorphic block, replace the
  // second-kind forms: M = [[I, 0], [X, Y]], Y = B^{-T}, X = -1/2 Y C Y^T
  RfMatrix B(g, std::vector<RationalFunc>(g, RationalFunc::zero(bv, bo)));
  RfMatrix C(g, std::vector<RationalFunc>(g, RationalFunc::zero(bv, bo)));
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j) {
      B[i][j] = pm.lambda[i][g + j];
      C[i][j] = pm.lambda[g + i][g + j];
    }
  RfMatrix Binv;
  try {
    Binv = rf_matrix_inverse(B);
  } catch (const std::domain_error&) {
    throw DegeneratePairing("holomorphic/second-kind pairing block is singular");
  }
  RfMatrix Y = rf_matrix_transpose(Binv);
  RfMatrix YCYt = rf_matrix_mul(rf_matrix_mul(Y, C), rf_matrix_transpose(Y));
  RfMatrix X = YCYt;
  for (auto& row : X)
    for (auto& e : row) e = e.scaled(Rat(-1, 2));

  RfMatrix M = rf_matrix_identity(n, bv, bo);
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j) {
      M[g + i][j] = X[i][j];
      M[g + i][g + j] = Y[i][j];
    }

  // exact check M Lambda M^T = J
  RfMatrix check = rf_matrix_mul(rf_matrix_mul(M, pm.lambda), rf_matrix_transpose(M));
  RfMatrix J = standard_j(g, bv, bo);
  if (!rf_matrix_is_zero(rf_matrix_sub(check, J)))
    throw DegeneratePairing("normalization failed to reach the standard form");

  NormalizationResult out;
  out.base_change = M;
  out.connection.base_vars = conn.base_vars;
  out.connection.order = conn.order;
  RfMatrix Minv = rf_matrix_inverse(M);
  for (size_t l = 0; l < conn.omegas.size(); ++l) {
    RfMatrix dM = rf_matrix_derivative(M, static_cast<int>(l));
    RfMatrix omega_prime =
        rf_matrix_add(rf_matrix_mul(dM, Minv), rf_matrix_mul(rf_matrix_mul(M, conn.omegas[l]), Minv));
    // sp-membership: Omega'^T J + J Omega' = 0 identically
    RfMatrix sp = rf_matrix_add(rf_matrix_mul(rf_matrix_transpose(omega_prime), J),
                                rf_matrix_mul(J, omega_prime));
    if (!rf_matrix_is_zero(sp))
      throw DegeneratePairing("normalized connection is not in the symplectic Lie algebra");
    out.connection.omegas.push_back(std::move(omega_prime));
  }
  return out;
}

}  // namespace fol
