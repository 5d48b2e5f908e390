#ifndef FOLIATION_CHART_HPP
#define FOLIATION_CHART_HPP

#include <string>
#include <vector>

#include "foliation/ideal.hpp"
#include "foliation/ratfunc.hpp"

namespace fol {

// Affine chart: ambient coordinates, the defining ideal of the subvariety
// X (zero for affine space), and a list of polynomials inverted on the
// chart (localization).
class AffineChart {
 public:
  AffineChart() = default;
  AffineChart(std::vector<std::string> vars, std::vector<MultiPoly> defining,
              std::vector<MultiPoly> inverted);

  static AffineChart affine_space(std::vector<std::string> vars) {
    return AffineChart(std::move(vars), {}, {});
  }

  const std::vector<std::string>& vars() const { return vars_; }
  TermOrder order() const { return order_; }
  const Ideal& defining_ideal() const { return ideal_; }
  const Ideal& defining_gb() const { return gb_; }
  const std::vector<MultiPoly>& inverted() const { return inverted_; }

  size_t dim_ambient() const { return vars_.size(); }
  int var_index(const std::string& name) const;

  // product of the inverted polynomials (1 when none)
  MultiPoly inverted_product() const;

  // does p vanish identically on the chart (V(ideal) minus the inverted
  // loci)? exact: saturation by the inverted product via Rabinowitsch
  bool vanishes_on_chart(const MultiPoly& p) const;
  bool vanishes_on_chart(const RationalFunc& f) const;

  // extend by fresh variables (appended); the defining ideal is unchanged
  AffineChart extended(const std::vector<std::string>& fresh) const;

  // membership of a rational point: on V(ideal), off the inverted loci
  bool point_on_chart(const std::vector<Rat>& p) const;

 private:
  std::vector<std::string> vars_;
  TermOrder order_ = TermOrder::grevlex();
  Ideal ideal_;
  Ideal gb_;
  std::vector<MultiPoly> inverted_;
};

}  // namespace fol

#endif
