#include <doctest.h>

#include "foliation/errors.hpp"
#include "foliation/foliation.hpp"

using namespace fol;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const TermOrder G = TermOrder::grevlex();

RationalFunc RF(const std::string& t, const std::vector<std::string>& vars) {
  return parse_ratfunc(t, vars);
}

Expvec tmono(size_t n, std::initializer_list<int> e) {
  Expvec v(n, 0);
  size_t i = 0;
  for (int x : e) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("from_graph_coefficients: coordinate and graph foliations") {
  auto chart = AffineChart::affine_space(XY);

  // c = 0: xi = d/dx
  Foliation f0 = from_graph_coefficients({{RF("0", XY)}}, chart);
  CHECK(f0.leaf_dim() == 1);
  CHECK(f0.fields()[0][0] == RF("1", XY));
  CHECK(f0.fields()[0][1].is_zero());

  // c = (y): xi = d/dx + y d/dy
  Foliation f1 = from_graph_coefficients({{RF("y", XY)}}, chart);
  CHECK(f1.fields()[0][1] == RF("y", XY));

  // failing pair on A^3: cx = y, cy = -x gives bracket -2 d/dz
  std::vector<std::string> xyz = {"x", "y", "z"};
  auto chart3 = AffineChart::affine_space(xyz);
  CHECK_THROWS_AS(
      (void)from_graph_coefficients({{RF("y", xyz)}, {RF("-x", xyz)}}, chart3),
      CommutationFailure);

  // commuting pair on A^3: [dx + y dz, dy + x dz]... use symmetric coeffs
  Foliation f2 = from_graph_coefficients({{RF("y", xyz)}, {RF("x", xyz)}}, chart3);
  CHECK(f2.leaf_dim() == 2);
}

TEST_CASE("tangency is enforced on nontrivial charts") {
  // X = V(y - x^2); d/dx + 2x d/dy is tangent, d/dx is not
  std::vector<MultiPoly> ideal = {parse_poly("y - x^2", XY)};
  AffineChart chart(XY, ideal, {});
  std::vector<VectorField> good = {{RF("1", XY), RF("2*x", XY)}};
  CHECK_NOTHROW(Foliation(chart, good));
  std::vector<VectorField> bad = {{RF("1", XY), RF("0", XY)}};
  CHECK_THROWS_AS(Foliation(chart, bad), TangencyFailure);
}

TEST_CASE("flow jets: worked examples") {
  auto chart = AffineChart::affine_space(XY);

  // straight line flow
  Foliation f0 = from_graph_coefficients({{RF("0", XY)}}, chart);
  FlowJet j0 = flow_jet(f0, 3);
  CHECK(j0.components[0].coeff(tmono(1, {0})) == RF("x", XY));
  CHECK(j0.components[0].coeff(tmono(1, {1})) == RF("1", XY));
  CHECK(j0.components[0].coeff(tmono(1, {2})).is_zero());
  CHECK(j0.components[1].coeff(tmono(1, {0})) == RF("y", XY));
  CHECK(j0.components[1].coeff(tmono(1, {1})).is_zero());

  // exponential: y-series = y(1 + t + t^2/2 + t^3/6)
  Foliation f1 = from_graph_coefficients({{RF("y", XY)}}, chart);
  FlowJet j1 = flow_jet(f1, 3);
  CHECK(j1.components[1].coeff(tmono(1, {1})) == RF("y", XY));
  CHECK(j1.components[1].coeff(tmono(1, {2})) == RF("1/2*y", XY));
  CHECK(j1.components[1].coeff(tmono(1, {3})) == RF("1/6*y", XY));

  // xi = d/dx + x d/dy: y-series = y + x t + t^2/2
  Foliation f2 = from_graph_coefficients({{RF("x", XY)}}, chart);
  FlowJet j2 = flow_jet(f2, 2);
  CHECK(j2.components[1].coeff(tmono(1, {1})) == RF("x", XY));
  CHECK(j2.components[1].coeff(tmono(1, {2})) == RF("1/2", XY));

  // order consistency: m' > m truncates to the m-jet
  FlowJet j2b = flow_jet(f2, 5);
  for (const auto& [e, c] : j2.components[1].terms())
    CHECK(j2b.components[1].coeff(e) == c);
}

TEST_CASE("flow jet stays on the chart variety") {
  // X = V(y - x^2), field d/dx + 2x d/dy: substituting the jet into the
  // generator must vanish identically to jet order
  std::vector<MultiPoly> ideal = {parse_poly("y - x^2", XY)};
  AffineChart chart(XY, ideal, {});
  Foliation f(chart, {{RF("1", XY), RF("2*x", XY)}});
  FlowJet jet = flow_jet(f, 4);
  JetPoly composed = compose_poly(parse_poly("y - x^2", XY), jet.components);
  for (const auto& [e, c] : composed.terms()) {
    CHECK(chart.vanishes_on_chart(c));
  }
}

TEST_CASE("from_connection: worked examples") {
  std::vector<std::string> xv = {"x"};
  auto base = AffineChart::affine_space(xv);

  // zero connection: coordinate field
  ConnectionMatrix zero;
  zero.base_vars = xv;
  zero.omegas = {rf_matrix_zero(1, 1, xv, G)};
  Foliation f0 = from_connection(zero, base);
  CHECK(f0.leaf_dim() == 1);
  CHECK(f0.fields()[0][1].is_zero());

  // Omega = (1): xi = d/dx + g d/dg, leaf g = g0 e^x via the jet recursion
  ConnectionMatrix one;
  one.base_vars = xv;
  one.omegas = {{{RF("1", xv)}}};
  Foliation f1 = from_connection(one, base);
  const auto& gv = f1.chart().vars();
  REQUIRE(gv.size() == 2);
  CHECK(f1.fields()[0][1] == RF("g1_1", gv));
  FlowJet jet = flow_jet(f1, 3);
  CHECK(jet.components[1].coeff(tmono(1, {1})) == RF("g1_1", gv));
  CHECK(jet.components[1].coeff(tmono(1, {2})) == RF("1/2*g1_1", gv));
  CHECK(jet.components[1].coeff(tmono(1, {3})) == RF("1/6*g1_1", gv));

  // curvature failure on a 2-dim base: Omega_1 = (y), Omega_2 = (x) has
  // d_1 O_2 - d_2 O_1 = 1 - 1 = 0 but [O_1, O_2] = 0: flat; use instead
  // O_1 = (y), O_2 = (0): d_1 O_2 - d_2 O_1 = -1 != 0
  ConnectionMatrix bad;
  bad.base_vars = XY;
  bad.omegas = {{{RF("y", XY)}}, {{RF("0", XY)}}};
  auto base2 = AffineChart::affine_space(XY);
  CHECK_THROWS_AS((void)from_connection(bad, base2), FlatnessFailure);
}

TEST_CASE("from_connection round-trip: group jet solves dP = Omega P") {
  // 2x2 flat connection over A^1: Omega = [[0, 1], [0, 0]]
  std::vector<std::string> xv = {"x"};
  auto base = AffineChart::affine_space(xv);
  ConnectionMatrix conn;
  conn.base_vars = xv;
  conn.omegas = {{{RF("0", xv), RF("1", xv)}, {RF("0", xv), RF("0", xv)}}};
  Foliation f = from_connection(conn, base);
  const auto& vars = f.chart().vars();
  REQUIRE(vars.size() == 5);

  int m = 4;
  FlowJet jet = flow_jet(f, m);
  // d/dt of the group block == (Omega composed with jet) * (group block),
  // coefficientwise up to order m-1
  auto entry = [&](size_t r, size_t c) { return jet.components[1 + r * 2 + c]; };
  for (size_t r = 0; r < 2; ++r)
    for (size_t c = 0; c < 2; ++c) {
      JetPoly lhs = entry(r, c).time_derivative(0);
      JetPoly rhs(1, m, vars, G);
      for (size_t s = 0; s < 2; ++s) {
        RationalFunc o = conn.omegas[0][r][s].with_vars(vars, G);
        JetPoly ojet = compose_ratfunc(o, jet.components);
        rhs = rhs + ojet * entry(s, c);
      }
      JetPoly diff = lhs - rhs.truncated(m - 1);
      CHECK(diff.truncated(m - 1).is_zero());
    }
}

TEST_CASE("subfoliation families") {
  std::vector<std::string> xyz = {"x", "y", "z"};
  auto chart3 = AffineChart::affine_space(xyz);
  Foliation f = from_graph_coefficients({{RF("0", xyz)}, {RF("0", xyz)}}, chart3);

  // k = 1: unchanged
  Foliation s1 = subfoliation_family(f, 1);
  CHECK(s1.leaf_dim() == 2);
  CHECK(s1.chart().vars() == xyz);
  CHECK(s1.params().empty());

  // n = 2, k = 2: one field, one c-symbol
  Foliation s2 = subfoliation_family(f, 2);
  CHECK(s2.leaf_dim() == 1);
  CHECK(s2.chart().vars().size() == 4);
  CHECK(s2.params().size() == 1);
  // the c-symbol is annihilated: its component in the field is zero
  int cidx = s2.chart().var_index(s2.params()[0]);
  REQUIRE(cidx >= 0);
  CHECK(s2.fields()[0][static_cast<size_t>(cidx)].is_zero());

  // n = 3, k = 2: two fields, two c-symbols
  std::vector<std::string> v4 = {"x", "y", "z", "w"};
  auto chart4 = AffineChart::affine_space(v4);
  Foliation f3 = from_graph_coefficients(
      {{RF("0", v4)}, {RF("0", v4)}, {RF("0", v4)}}, chart4);
  Foliation s3 = subfoliation_family(f3, 2);
  CHECK(s3.leaf_dim() == 2);
  CHECK(s3.params().size() == 2);

  CHECK_THROWS_AS((void)subfoliation_family(f, 5), std::invalid_argument);
}
