#ifndef FOLIATION_SERIES_HPP
#define FOLIATION_SERIES_HPP

#include <string>
#include <vector>

#include "foliation/ratfunc.hpp"

namespace fol {

// Truncated Laurent series in one local parameter with RationalFunc
// coefficients (rationals are the zero-variable case). Coefficients are
// known exactly for exponents in [low, trunc); asking beyond the truncation
// throws TruncationTooSmall rather than returning a silently truncated value.
class LaurentSeries {
 public:
  LaurentSeries(std::string param, std::vector<std::string> coeff_vars, TermOrder coeff_order,
                int low, int trunc);

  static LaurentSeries zero_to(const std::string& param, const std::vector<std::string>& cvars,
                               TermOrder corder, int trunc) {
    return LaurentSeries(param, cvars, corder, trunc, trunc);
  }
  static LaurentSeries monomial(const std::string& param, const RationalFunc& c, int exponent,
                                int trunc);

  const std::string& param() const { return param_; }
  int low() const { return low_; }
  int trunc() const { return trunc_; }
  const std::vector<std::string>& coeff_vars() const { return cvars_; }
  TermOrder coeff_order() const { return corder_; }

  // exact below the truncation; throws TruncationTooSmall at or above it
  const RationalFunc& coeff(int exponent) const;
  void set_coeff(int exponent, RationalFunc c);

  bool known_zero() const;  // all stored coefficients vanish

  LaurentSeries operator-() const;
  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries scaled(const RationalFunc& c) const;

  // multiplicative inverse; the lowest stored coefficient must be a unit
  LaurentSeries inverse() const;
  LaurentSeries pow(int e) const;

  // square root of a series with lowest term 1*t^0 (branch with constant
  // term +1)
  LaurentSeries sqrt_one_plus() const;

  LaurentSeries derivative() const;
  // term-by-term primitive with integration constant 0; requires a vanishing
  // t^{-1} coefficient
  LaurentSeries antiderivative() const;

  // forget coefficients at or above new_trunc
  LaurentSeries truncate(int new_trunc) const;

  // coefficient of t^{-1}; requires trunc > -1
  RationalFunc residue() const;

  std::string str() const;

 private:
  void tighten();  // raise `low` past leading zeros
  RationalFunc zero_coeff() const { return RationalFunc::zero(cvars_, corder_); }
  std::string param_;
  std::vector<std::string> cvars_;
  TermOrder corder_;
  int low_;
  int trunc_;
  std::vector<RationalFunc> coeffs_;  // size trunc_ - low_
};

}  // namespace fol

#endif
