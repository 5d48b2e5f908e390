#include "foliation/ratfunc.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

#include "foliation/errors.hpp"

namespace fol {

RationalFunc::RationalFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(1, num_.vars(), num_.order())) {}

RationalFunc::RationalFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunc: zero denominator");
  normalize();
}

void RationalFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1, num_.vars(), num_.order());
    return;
  }
  if (!den_.is_one()) {
    if (den_.is_constant()) {
      num_ = num_.scaled(1 / den_.constant_value());
      den_ = MultiPoly::constant(1, num_.vars(), num_.order());
      return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
      den_ = den_.scaled(1 / lc);
      num_ = num_.scaled(1 / lc);
    }
  }
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RationalFunc(num_ + o.num_, den_);
  return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  if (is_zero() || o.is_zero()) return zero(vars(), num_.order());
  // cross-cancel before multiplying to curb growth
  MultiPoly g1 = poly_gcd(num_, o.den_);
  MultiPoly g2 = poly_gcd(o.num_, den_);
  MultiPoly n1 = g1.is_constant() ? num_ : num_.div_exact(g1);
  MultiPoly d2 = g1.is_constant() ? o.den_ : o.den_.div_exact(g1);
  MultiPoly n2 = g2.is_constant() ? o.num_ : o.num_.div_exact(g2);
  MultiPoly d1 = g2.is_constant() ? den_ : den_.div_exact(g2);
  return RationalFunc(n1 * n2, d1 * d2);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const { return *this * o.inverse(); }

bool RationalFunc::operator==(const RationalFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RationalFunc RationalFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunc::inverse: zero");
  return RationalFunc(den_, num_);
}

RationalFunc RationalFunc::derivative(int v) const {
  if (den_.is_one()) return RationalFunc(num_.derivative(v));
  MultiPoly n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
  return RationalFunc(std::move(n), den_ * den_);
}

RationalFunc RationalFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunc r = constant(1, vars(), num_.order());
  RationalFunc b = *this;
  unsigned k = static_cast<unsigned>(e);
  while (k != 0) {
    if (k & 1) r = r * b;
    b = (k >>= 1) ? b * b : b;
  }
  return r;
}

Rat RationalFunc::eval(const std::vector<Rat>& point) const {
  Rat d = den_.eval(point);
  if (fol::is_zero(d)) throw ChartDenominator("denominator " + den_.str() + " vanishes at evaluation point");
  return num_.eval(point) / d;
}

bool RationalFunc::denominator_vanishes_at(const std::vector<Rat>& point) const {
  return fol::is_zero(den_.eval(point));
}

RationalFunc RationalFunc::with_vars(const std::vector<std::string>& new_vars,
                                     TermOrder new_order) const {
  return RationalFunc(num_.with_vars(new_vars, new_order), den_.with_vars(new_vars, new_order));
}

std::string RationalFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.terms().size() > 1 || sgn(num_.leading_coeff()) < 0 ||
      n.find('/') != std::string::npos)
    n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.terms().size() > 1 || d.find('/') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunc& f) { return os << f.str(); }

}  // namespace fol
