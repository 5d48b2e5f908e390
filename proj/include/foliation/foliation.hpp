#ifndef FOLIATION_FOLIATION_HPP
#define FOLIATION_FOLIATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "foliation/chart.hpp"
#include "foliation/connection.hpp"
#include "foliation/jets.hpp"

namespace fol {

// A vector field on a chart: one RationalFunc coefficient per ambient
// coordinate.
using VectorField = std::vector<RationalFunc>;

// Applies the derivation: xi(h) = sum_l xi_l * dh/dx_l.
RationalFunc apply_field(const VectorField& xi, const RationalFunc& h);
RationalFunc apply_field(const VectorField& xi, const MultiPoly& h);

// Lie bracket [a, b], componentwise a(b_k) - b(a_k).
VectorField lie_bracket(const VectorField& a, const VectorField& b);

// Non-singular foliation presented by n pairwise commuting rational vector
// fields tangent to the chart. Constructors verify commutation modulo the
// chart ideal, tangency, and generic linear independence. `params` names
// chart variables that every field annihilates (leafwise constants).
class Foliation {
 public:
  Foliation(AffineChart chart, std::vector<VectorField> fields,
            std::vector<std::string> params = {});

  const AffineChart& chart() const { return chart_; }
  const std::vector<VectorField>& fields() const { return fields_; }
  const std::vector<std::string>& params() const { return params_; }
  size_t leaf_dim() const { return fields_.size(); }

  int max_field_degree_num() const;
  int max_field_degree_den() const;

 private:
  void verify() const;
  AffineChart chart_;
  std::vector<VectorField> fields_;
  std::vector<std::string> params_;
};

// Formal flow of the foliation to order m with identity initial condition:
// one truncated series per chart variable in leaf-time symbols t_1..t_n,
// built as the Lie series sum_a t^a xi^a(x_k)/a!.
struct FlowJet {
  size_t leaf_dim = 0;
  int order = 0;
  std::vector<JetPoly> components;  // one per chart variable
};

// xi_i = d/dx_i + sum_j c[i][j] d/dx_j on a chart whose first n variables
// are leaf coordinates and the rest transverse. c has shape n x (N - n).
Foliation from_graph_coefficients(const RfMatrix& c, const AffineChart& chart);

// Lift of the coordinate fields along a flat connection: fields
// d/dx_i + (Omega_i g)_{kl} d/dg_{kl} on base x group-coordinate chart.
// group_var_prefix names the fresh matrix variables g<r>_<c>.
Foliation from_connection(const ConnectionMatrix& omega, const AffineChart& base,
                          const std::string& group_var_prefix = "g");

FlowJet flow_jet(const Foliation& f, int order);

// Family of subfoliations xi'_i = xi_i + sum_{j>n-k+1} c_{ij} xi_j spanned
// by n-k+1 fields, over the chart extended by the (n-k+1)(k-1) fresh
// c-symbols (annihilated by every field).
Foliation subfoliation_family(const Foliation& f, int k);

}  // namespace fol

#endif
