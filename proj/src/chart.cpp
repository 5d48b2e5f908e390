#include "foliation/chart.hpp"

#include <algorithm>
#include <stdexcept>

#include "foliation/errors.hpp"

namespace fol {

AffineChart::AffineChart(std::vector<std::string> vars, std::vector<MultiPoly> defining,
                         std::vector<MultiPoly> inverted)
    : vars_(std::move(vars)) {
  ideal_ = Ideal(vars_, order_, std::move(defining));
  gb_ = groebner_basis(ideal_, order_);
  for (auto& q : inverted) {
    if (q.is_zero()) throw ChartDenominator("inverted polynomial is zero");
    MultiPoly nf = reduce_mod_ideal(q, gb_);
    if (nf.is_zero())
      throw ChartDenominator("inverted polynomial " + q.str() + " vanishes on the variety");
    inverted_.push_back(std::move(q));
  }
}

int AffineChart::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

MultiPoly AffineChart::inverted_product() const {
  MultiPoly p = MultiPoly::constant(1, vars_, order_);
  for (const auto& q : inverted_) p = p * q;
  return p;
}

bool AffineChart::vanishes_on_chart(const MultiPoly& p) const {
  if (p.is_zero()) return true;
  MultiPoly nf = reduce_mod_ideal(p, gb_);
  if (nf.is_zero()) return true;
  if (inverted_.empty() && ideal_.is_zero_ideal()) return false;
  // p vanishes on V(I) \ V(q) iff I + (u*q*p - 1) is the unit ideal
  MultiPoly q = inverted_product() * p;
  return groebner_basis(adjoin_inverse(gb_, q), TermOrder::grevlex()).is_unit_ideal();
}

bool AffineChart::vanishes_on_chart(const RationalFunc& f) const {
  if (f.is_zero()) return true;
  if (f.is_polynomial()) return vanishes_on_chart(f.num());
  // the denominator is a unit wherever it does not vanish; restrict to there
  MultiPoly q = inverted_product() * f.den() * f.num();
  if (reduce_mod_ideal(f.num(), gb_).is_zero()) return true;
  return groebner_basis(adjoin_inverse(gb_, q), TermOrder::grevlex()).is_unit_ideal();
}

AffineChart AffineChart::extended(const std::vector<std::string>& fresh) const {
  std::vector<std::string> vars = vars_;
  for (const auto& v : fresh) {
    if (var_index(v) >= 0) throw std::invalid_argument("extended: duplicate variable " + v);
    vars.push_back(v);
  }
  std::vector<MultiPoly> defining, inverted;
  for (const auto& g : ideal_.gens()) defining.push_back(g.with_vars(vars, order_));
  for (const auto& q : inverted_) inverted.push_back(q.with_vars(vars, order_));
  return AffineChart(std::move(vars), std::move(defining), std::move(inverted));
}

bool AffineChart::point_on_chart(const std::vector<Rat>& p) const {
  for (const auto& g : ideal_.gens())
    if (!is_zero(g.eval(p))) return false;
  for (const auto& q : inverted_)
    if (is_zero(q.eval(p))) return false;
  return true;
}

}  // namespace fol
