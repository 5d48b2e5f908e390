#ifndef FOLIATION_RATFUNC_HPP
#define FOLIATION_RATFUNC_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "foliation/multipoly.hpp"

namespace fol {

// Quotient of two MultiPoly over the same ring, kept normalized:
// gcd(num, den) = 1 and den monic under the ring's order.
class RationalFunc {
 public:
  RationalFunc() = default;
  explicit RationalFunc(MultiPoly num);
  RationalFunc(MultiPoly num, MultiPoly den);

  static RationalFunc zero(const std::vector<std::string>& vars, TermOrder order) {
    return RationalFunc(MultiPoly::zero(vars, order));
  }
  static RationalFunc constant(const Rat& c, const std::vector<std::string>& vars,
                               TermOrder order) {
    return RationalFunc(MultiPoly::constant(c, vars, order));
  }
  static RationalFunc variable(const std::string& name, const std::vector<std::string>& vars,
                               TermOrder order) {
    return RationalFunc(MultiPoly::variable(name, vars, order));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rat constant_value() const { return num_.constant_value(); }

  RationalFunc operator-() const;
  RationalFunc operator+(const RationalFunc& o) const;
  RationalFunc operator-(const RationalFunc& o) const;
  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;
  RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
  RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
  RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
  bool operator==(const RationalFunc& o) const;
  bool operator!=(const RationalFunc& o) const { return !(*this == o); }

  RationalFunc scaled(const Rat& c) const { return RationalFunc(num_.scaled(c), den_); }
  RationalFunc inverse() const;
  RationalFunc derivative(int var_index) const;  // quotient rule
  RationalFunc pow(int e) const;

  // Evaluation; throws ChartDenominator if the denominator vanishes.
  Rat eval(const std::vector<Rat>& point) const;
  bool denominator_vanishes_at(const std::vector<Rat>& point) const;

  RationalFunc with_vars(const std::vector<std::string>& new_vars, TermOrder new_order) const;

  std::string str() const;

 private:
  void normalize();
  MultiPoly num_;
  MultiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunc& f);

// Full expression parser: +, -, *, /, ^, parentheses, integer and
// int/int literals, variables from `vars`. Returns a normalized quotient.
RationalFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& vars,
                           TermOrder order = TermOrder::grevlex());

}  // namespace fol

#endif
