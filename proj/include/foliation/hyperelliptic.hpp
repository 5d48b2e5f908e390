#ifndef FOLIATION_HYPERELLIPTIC_HPP
#define FOLIATION_HYPERELLIPTIC_HPP

#include <string>
#include <vector>

#include "foliation/connection.hpp"
#include "foliation/multipoly.hpp"

namespace fol {

// Family of hyperelliptic curves y^2 = f(x, lambda) with f monic in x of
// odd degree 2g+1 and squarefree over the function field of the base. The
// base chart inverts the discriminant.
class HyperellipticFamily {
 public:
  HyperellipticFamily(MultiPoly f, const std::string& x_name,
                      std::vector<std::string> base_vars);

  int genus() const { return genus_; }
  const MultiPoly& f() const { return f_; }
  const std::string& x_name() const { return x_name_; }
  const std::vector<std::string>& base_vars() const { return base_vars_; }
  const std::vector<std::string>& curve_vars() const { return curve_vars_; }  // {x} + base
  TermOrder order() const { return order_; }

  // univariate coefficients of f over the base ring, index = power of x,
  // size 2g+2, leading coefficient 1
  const std::vector<RationalFunc>& f_coeffs() const { return f_coeffs_; }
  // df/dx as univariate coefficients
  std::vector<RationalFunc> fx_coeffs() const;
  // resultant_x(f, df/dx) as a polynomial in the base variables
  const MultiPoly& discriminant() const { return disc_; }

 private:
  MultiPoly f_;  // on curve_vars_
  std::string x_name_;
  std::vector<std::string> base_vars_;
  std::vector<std::string> curve_vars_;
  TermOrder order_ = TermOrder::grevlex();
  int genus_ = 0;
  std::vector<RationalFunc> f_coeffs_;
  MultiPoly disc_;
};

// numerator(x, lambda) * dx / y^m with m odd; the basis forms are x^i dx/y
struct DeRhamForm {
  MultiPoly numerator;  // on the family's curve ring
  int pole_order = 1;
};

// x^i dx/y for i = 0..2g-1; the first g are holomorphic, the last g of the
// second kind with pole only at infinity
std::vector<DeRhamForm> derham_basis(const HyperellipticFamily& fam);

// Coordinates of the form's class in the basis, modulo exact forms
// d(x^j y^{2-m}) and the relation y^2 = f.
std::vector<RationalFunc> griffiths_dwork_reduce(const DeRhamForm& form,
                                                 const HyperellipticFamily& fam);

// Gauss-Manin connection in the basis above, row convention:
// nabla_{d/dlambda_l} omega_i = sum_j Omega_l[i][j] omega_j.
ConnectionMatrix gauss_manin_matrix(const HyperellipticFamily& fam);

// Monic linear differential operator d^order + sum_s lower[s] d^s over the
// 1-dimensional base function field.
struct DiffOperator {
  int order = 0;
  std::vector<RationalFunc> lower;  // size = order, index = power of d
  std::string str(const std::string& dsym = "D") const;
};

// Minimal monic operator annihilating the class of `form` in the connection
// module (cyclic-vector elimination; order <= 2g always suffices).
DiffOperator picard_fuchs(const HyperellipticFamily& fam, const DeRhamForm& form);

}  // namespace fol

#endif
