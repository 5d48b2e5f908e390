#include "foliation/connection.hpp"

#include <cassert>
#include <stdexcept>

namespace fol {

RfMatrix rf_matrix_zero(size_t rows, size_t cols, const std::vector<std::string>& vars,
                        TermOrder order) {
  return RfMatrix(rows, std::vector<RationalFunc>(cols, RationalFunc::zero(vars, order)));
}

RfMatrix rf_matrix_identity(size_t n, const std::vector<std::string>& vars, TermOrder order) {
  RfMatrix m = rf_matrix_zero(n, n, vars, order);
  for (size_t i = 0; i < n; ++i) m[i][i] = RationalFunc::constant(1, vars, order);
  return m;
}

RfMatrix rf_matrix_mul(const RfMatrix& a, const RfMatrix& b) {
  assert(!a.empty() && !b.empty() && a[0].size() == b.size());
  const auto& vars = a[0][0].vars();
  TermOrder order = a[0][0].num().order();
  RfMatrix r = rf_matrix_zero(a.size(), b[0].size(), vars, order);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b[0].size(); ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

RfMatrix rf_matrix_add(const RfMatrix& a, const RfMatrix& b) {
  RfMatrix r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

RfMatrix rf_matrix_sub(const RfMatrix& a, const RfMatrix& b) {
  RfMatrix r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

RfMatrix rf_matrix_transpose(const RfMatrix& a) {
  if (a.empty()) return a;
  RfMatrix r(a[0].size(), std::vector<RationalFunc>(a.size(), a[0][0]));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

RfMatrix rf_matrix_derivative(const RfMatrix& a, int var_index) {
  RfMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = e.derivative(var_index);
  return r;
}

RfMatrix rf_matrix_inverse(const RfMatrix& a) {
  size_t n = a.size();
  assert(n > 0 && a[0].size() == n);
  const auto& vars = a[0][0].vars();
  TermOrder order = a[0][0].num().order();
  RfMatrix m = a;
  RfMatrix inv = rf_matrix_identity(n, vars, order);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("rf_matrix_inverse: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    RationalFunc d = m[col][col].inverse();
    for (size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] * d;
      inv[col][j] = inv[col][j] * d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      RationalFunc f = m[i][col];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RationalFunc rf_matrix_det(const RfMatrix& a) {
  size_t n = a.size();
  assert(n > 0 && a[0].size() == n);
  const auto& vars = a[0][0].vars();
  TermOrder order = a[0][0].num().order();
  RfMatrix m = a;
  RationalFunc det = RationalFunc::constant(1, vars, order);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return RationalFunc::zero(vars, order);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    RationalFunc d = m[col][col].inverse();
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      RationalFunc f = m[i][col] * d;
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

bool rf_matrix_is_zero(const RfMatrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

RfMatrix ConnectionMatrix::curvature(size_t i, size_t j) const {
  RfMatrix c = rf_matrix_sub(rf_matrix_derivative(omegas[j], static_cast<int>(i)),
                             rf_matrix_derivative(omegas[i], static_cast<int>(j)));
  RfMatrix bracket =
      rf_matrix_sub(rf_matrix_mul(omegas[i], omegas[j]), rf_matrix_mul(omegas[j], omegas[i]));
  return rf_matrix_sub(c, bracket);
}

bool ConnectionMatrix::is_flat() const {
  for (size_t i = 0; i < omegas.size(); ++i)
    for (size_t j = i + 1; j < omegas.size(); ++j)
      if (!rf_matrix_is_zero(curvature(i, j))) return false;
  return true;
}

}  // namespace fol
