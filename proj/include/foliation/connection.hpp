#ifndef FOLIATION_CONNECTION_HPP
#define FOLIATION_CONNECTION_HPP

#include <string>
#include <vector>

#include "foliation/ratfunc.hpp"

namespace fol {

using RfMatrix = std::vector<std::vector<RationalFunc>>;

RfMatrix rf_matrix_zero(size_t rows, size_t cols, const std::vector<std::string>& vars,
                        TermOrder order);
RfMatrix rf_matrix_identity(size_t n, const std::vector<std::string>& vars, TermOrder order);
RfMatrix rf_matrix_mul(const RfMatrix& a, const RfMatrix& b);
RfMatrix rf_matrix_add(const RfMatrix& a, const RfMatrix& b);
RfMatrix rf_matrix_sub(const RfMatrix& a, const RfMatrix& b);
RfMatrix rf_matrix_transpose(const RfMatrix& a);
RfMatrix rf_matrix_derivative(const RfMatrix& a, int var_index);
// Gauss-Jordan inverse; throws std::domain_error on singular input
RfMatrix rf_matrix_inverse(const RfMatrix& a);
RationalFunc rf_matrix_det(const RfMatrix& a);
bool rf_matrix_is_zero(const RfMatrix& a);

// Flat connection d + sum_i Omega_i dx_i on a trivial bundle over a base
// chart: one square matrix of rational functions per base variable. The
// matrix convention is row-wise: the connection acts on a frame (e_i) by
// nabla e_i = sum_j Omega[i][j] e_j, so a period-style frame matrix P
// satisfies dP = Omega * P.
struct ConnectionMatrix {
  std::vector<std::string> base_vars;
  TermOrder order = TermOrder::grevlex();
  std::vector<RfMatrix> omegas;  // one per base variable

  size_t rank() const { return omegas.empty() ? 0 : omegas[0].size(); }

  // curvature component d_i O_j - d_j O_i - [O_i, O_j]; empty result means flat
  RfMatrix curvature(size_t i, size_t j) const;
  bool is_flat() const;
};

}  // namespace fol

#endif
