#include "foliation/series.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "foliation/errors.hpp"

namespace fol {

LaurentSeries::LaurentSeries(std::string param, std::vector<std::string> coeff_vars,
                             TermOrder coeff_order, int low, int trunc)
    : param_(std::move(param)),
      cvars_(std::move(coeff_vars)),
      corder_(coeff_order),
      low_(low),
      trunc_(trunc) {
  if (trunc_ < low_) throw std::invalid_argument("LaurentSeries: trunc < low");
  coeffs_.assign(static_cast<size_t>(trunc_ - low_), RationalFunc::zero(cvars_, corder_));
}

LaurentSeries LaurentSeries::monomial(const std::string& param, const RationalFunc& c,
                                      int exponent, int trunc) {
  LaurentSeries s(param, c.vars(), c.num().order(), std::min(exponent, trunc), trunc);
  if (exponent < trunc) s.set_coeff(exponent, c);
  return s;
}

const RationalFunc& LaurentSeries::coeff(int exponent) const {
  if (exponent >= trunc_)
    throw TruncationTooSmall("coefficient of " + param_ + "^" + std::to_string(exponent) +
                             " requested, series truncated at order " + std::to_string(trunc_));
  static thread_local RationalFunc zero_slot;
  if (exponent < low_) {
    zero_slot = RationalFunc::zero(cvars_, corder_);
    return zero_slot;
  }
  return coeffs_[static_cast<size_t>(exponent - low_)];
}

void LaurentSeries::set_coeff(int exponent, RationalFunc c) {
  if (exponent < low_ || exponent >= trunc_)
    throw std::invalid_argument("set_coeff: exponent out of range");
  coeffs_[static_cast<size_t>(exponent - low_)] = std::move(c);
}

bool LaurentSeries::known_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const RationalFunc& c) { return c.is_zero(); });
}

void LaurentSeries::tighten() {
  size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  if (k > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k));
    low_ += static_cast<int>(k);
  }
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  assert(param_ == o.param_);
  int low = std::min(low_, o.low_);
  int trunc = std::min(trunc_, o.trunc_);
  LaurentSeries r(param_, cvars_, corder_, std::min(low, trunc), trunc);
  for (int e = r.low_; e < trunc; ++e) {
    RationalFunc c = zero_coeff();
    if (e >= low_ && e < trunc_) c += coeffs_[static_cast<size_t>(e - low_)];
    if (e >= o.low_ && e < o.trunc_) c += o.coeffs_[static_cast<size_t>(e - o.low_)];
    r.set_coeff(e, std::move(c));
  }
  r.tighten();
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  assert(param_ == o.param_);
  // a zero factor with finite truncation still limits what is known
  int low = low_ + o.low_;
  int trunc = std::min(trunc_ + o.low_, o.trunc_ + low_);
  LaurentSeries r(param_, cvars_, corder_, std::min(low, trunc), trunc);
  for (int i = low_; i < trunc_; ++i) {
    if (coeffs_[static_cast<size_t>(i - low_)].is_zero()) continue;
    for (int j = o.low_; j < o.trunc_; ++j) {
      int e = i + j;
      if (e >= trunc) break;
      const RationalFunc& cj = o.coeffs_[static_cast<size_t>(j - o.low_)];
      if (cj.is_zero()) continue;
      r.set_coeff(e, r.coeff(e) + coeffs_[static_cast<size_t>(i - low_)] * cj);
    }
  }
  r.tighten();
  return r;
}

LaurentSeries LaurentSeries::scaled(const RationalFunc& c) const {
  LaurentSeries r = *this;
  for (auto& k : r.coeffs_) k = k * c;
  r.tighten();
  return r;
}

LaurentSeries LaurentSeries::inverse() const {
  LaurentSeries a = *this;
  a.tighten();
  if (a.coeffs_.empty() || a.coeffs_[0].is_zero())
    throw std::domain_error("LaurentSeries::inverse: leading coefficient unknown or zero");
  int n = a.trunc_ - a.low_;  // number of known coefficients
  // (c0 t^low (1 + u))^{-1}; invert the unit part order by order
  LaurentSeries r(param_, cvars_, corder_, -a.low_, -a.low_ + n);
  const RationalFunc& c0 = a.coeffs_[0];
  RationalFunc c0inv = c0.inverse();
  r.set_coeff(-a.low_, c0inv);
  for (int k = 1; k < n; ++k) {
    RationalFunc acc = zero_coeff();
    for (int i = 1; i <= k; ++i) {
      const RationalFunc& ai = a.coeffs_[static_cast<size_t>(i)];
      if (ai.is_zero()) continue;
      acc += ai * r.coeffs_[static_cast<size_t>(k - i)];
    }
    r.set_coeff(-a.low_ + k, -(acc * c0inv));
  }
  return r;
}

LaurentSeries LaurentSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) {
    LaurentSeries one(param_, cvars_, corder_, 0, trunc_ - low_);
    one.set_coeff(0, RationalFunc::constant(1, cvars_, corder_));
    return one;
  }
  LaurentSeries acc = *this;
  for (int k = 1; k < e; ++k) acc = acc * *this;
  return acc;
}

LaurentSeries LaurentSeries::sqrt_one_plus() const {
  LaurentSeries a = *this;
  a.tighten();
  if (a.low_ != 0 || a.coeffs_.empty() || !(a.coeffs_[0].is_constant() && a.coeffs_[0].constant_value() == 1))
    throw std::domain_error("sqrt_one_plus: series must start with 1");
  int n = a.trunc_;
  LaurentSeries r(param_, cvars_, corder_, 0, n);
  r.set_coeff(0, RationalFunc::constant(1, cvars_, corder_));
  Rat half(1, 2);
  for (int k = 1; k < n; ++k) {
    RationalFunc acc = k < a.trunc_ - a.low_ ? a.coeffs_[static_cast<size_t>(k)] : zero_coeff();
    for (int i = 1; i < k; ++i)
      acc -= r.coeffs_[static_cast<size_t>(i)] * r.coeffs_[static_cast<size_t>(k - i)];
    r.set_coeff(k, acc.scaled(half));
  }
  return r;
}

LaurentSeries LaurentSeries::derivative() const {
  LaurentSeries r(param_, cvars_, corder_, low_ - 1, trunc_ - 1);
  for (int e = low_; e < trunc_; ++e)
    r.set_coeff(e - 1, coeffs_[static_cast<size_t>(e - low_)].scaled(e));
  r.tighten();
  return r;
}

LaurentSeries LaurentSeries::antiderivative() const {
  if (low_ <= -1 && -1 < trunc_ && !coeff(-1).is_zero())
    throw NonSecondKind("antiderivative: nonvanishing residue " + coeff(-1).str());
  LaurentSeries r(param_, cvars_, corder_, low_ + 1, trunc_ + 1);
  for (int e = low_; e < trunc_; ++e) {
    if (e == -1) continue;
    r.set_coeff(e + 1, coeffs_[static_cast<size_t>(e - low_)].scaled(Rat(1) / Rat(e + 1)));
  }
  r.tighten();
  return r;
}

LaurentSeries LaurentSeries::truncate(int new_trunc) const {
  if (new_trunc > trunc_)
    throw TruncationTooSmall("truncate: cannot extend a series (have " + std::to_string(trunc_) +
                             ", asked " + std::to_string(new_trunc) + ")");
  LaurentSeries r(param_, cvars_, corder_, std::min(low_, new_trunc), new_trunc);
  for (int e = r.low_; e < new_trunc; ++e)
    if (e >= low_) r.set_coeff(e, coeffs_[static_cast<size_t>(e - low_)]);
  r.tighten();
  return r;
}

RationalFunc LaurentSeries::residue() const {
  if (trunc_ <= -1)
    throw TruncationTooSmall("residue: series truncated below t^{-1}");
  return coeff(-1);
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  bool any = false;
  for (int e = low_; e < trunc_; ++e) {
    const RationalFunc& c = coeffs_[static_cast<size_t>(e - low_)];
    if (c.is_zero()) continue;
    if (any) os << " + ";
    os << "(" << c.str() << ")*" << param_ << "^" << e;
    any = true;
  }
  if (!any) os << "0";
  os << " + O(" << param_ << "^" << trunc_ << ")";
  return os.str();
}

}  // namespace fol
