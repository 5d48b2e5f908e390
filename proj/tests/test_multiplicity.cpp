#include <doctest.h>

#include <random>

#include "foliation/errors.hpp"
#include "foliation/multiplicity.hpp"

using namespace fol;

namespace {

const std::vector<std::string> XY = {"x", "y"};

RationalFunc RF(const std::string& t, const std::vector<std::string>& vars) {
  return parse_ratfunc(t, vars);
}

Foliation coord_foliation(const std::vector<std::string>& vars, size_t n) {
  auto chart = AffineChart::affine_space(vars);
  RfMatrix c(n, std::vector<RationalFunc>(vars.size() - n, RationalFunc::zero(vars, chart.order())));
  return from_graph_coefficients(c, chart);
}

}  // namespace

TEST_CASE("order_bound: fixed and heuristic") {
  CHECK(order_bound(OrderBoundPolicy::fixed(8), 3, 2, 5) == 8);
  CHECK(order_bound(OrderBoundPolicy::heuristic(), 1, 0, 2) == 2);
  CHECK(order_bound(OrderBoundPolicy::heuristic(), 2, 1, 2) == 16);
  CHECK(OrderBoundPolicy::fixed(8).rigorous());
  CHECK_FALSE(OrderBoundPolicy::heuristic().rigorous());
}

TEST_CASE("multiplicity operators: simple zero is seen at k = 1") {
  std::vector<std::string> xv = {"x"};
  Foliation f = coord_foliation(xv, 1);
  std::vector<MultiPoly> P = {parse_poly("x", xv)};
  MultiplicityOperatorSet set = multiplicity_operators(P, f, 1);
  REQUIRE(set.materialized);
  // some emitted polynomial is nonvanishing at 0: mult = 1, not > 1
  bool nonvanishing = false;
  for (const auto& e : set.emitted)
    if (!is_zero(e.eval({0}))) nonvanishing = true;
  CHECK(nonvanishing);
  CHECK_FALSE(operators_all_vanish_at(set, {0}));
}

TEST_CASE("multiplicity operators: double zero splits between k = 1 and 2") {
  std::vector<std::string> xv = {"x"};
  Foliation f = coord_foliation(xv, 1);
  std::vector<MultiPoly> P = {parse_poly("x^2", xv)};
  MultiplicityOperatorSet k1 = multiplicity_operators(P, f, 1);
  CHECK(operators_all_vanish_at(k1, {0}));
  MultiplicityOperatorSet k2 = multiplicity_operators(P, f, 2);
  CHECK_FALSE(operators_all_vanish_at(k2, {0}));
}

TEST_CASE("multiplicity operators: local algebra of (x^2, y^3) has dimension 6") {
  Foliation f = coord_foliation(XY, 2);
  std::vector<MultiPoly> P = {parse_poly("x^2", XY), parse_poly("y^3", XY)};
  MultiplicityOperatorSet big = multiplicity_operator_matrix(P, f, 6);
  std::vector<bool> pattern = vanishing_pattern_at(big, {0, 0});
  REQUIRE(pattern.size() == 6);
  for (int k = 1; k <= 5; ++k) CHECK(pattern[static_cast<size_t>(k - 1)]);
  CHECK_FALSE(pattern[5]);
}

TEST_CASE("leaf multiplicity oracle: worked examples") {
  std::vector<std::string> xv = {"x"};
  Foliation f1 = coord_foliation(xv, 1);
  auto r1 = leaf_multiplicity_oracle({parse_poly("x", xv)}, f1, {0}, 10);
  REQUIRE(r1.has_value());
  CHECK(*r1 == 1);

  Foliation f2 = coord_foliation(XY, 2);
  auto r2 = leaf_multiplicity_oracle({parse_poly("x^2", XY), parse_poly("y^3", XY)}, f2, {0, 0}, 10);
  REQUIRE(r2.has_value());
  CHECK(*r2 == 6);

  // leaf contained in the zero set: AboveCap
  Foliation f3 = coord_foliation(XY, 1);
  auto r3 = leaf_multiplicity_oracle({parse_poly("y", XY)}, f3, {0, 0}, 10);
  CHECK_FALSE(r3.has_value());

  CHECK_THROWS_AS(
      (void)leaf_multiplicity_oracle({parse_poly("x", XY), parse_poly("y", XY)}, f3, {0, 0}, 10),
      std::invalid_argument);
}

TEST_CASE("oracle agreement on randomized germs (compact version)") {
  std::mt19937 gen(7321);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  const int kmax = 8;
  int cases = 0;
  while (cases < 12) {
    int n = uniform(1, 2);
    std::vector<std::string> vars = n == 1 ? std::vector<std::string>{"x"} : XY;
    Foliation f = coord_foliation(vars, static_cast<size_t>(n));
    std::vector<MultiPoly> P;
    if (n == 1) {
      int a = uniform(1, 6);
      Expvec e(1, a);
      MultiPoly p = MultiPoly::monomial(e, 1, vars, f.chart().order());
      if (uniform(0, 1)) {
        Expvec hi(1, a + uniform(1, 2));
        p.add_term(hi, uniform(1, 3));
      }
      P = {p};
    } else {
      int a = uniform(1, 3), b = uniform(1, 3);
      MultiPoly p1 = parse_poly("x^" + std::to_string(a), vars);
      MultiPoly p2 = parse_poly("y^" + std::to_string(b), vars);
      if (uniform(0, 1)) p1 = p1 + parse_poly("y^" + std::to_string(b + uniform(0, 1)), vars);
      P = {p1, p2};
    }
    std::vector<Rat> origin(vars.size(), 0);
    auto mult = leaf_multiplicity_oracle(P, f, origin, kmax + 2);
    MultiplicityOperatorSet set = multiplicity_operator_matrix(P, f, kmax);
    std::vector<bool> pattern = vanishing_pattern_at(set, origin);
    for (int k = 1; k <= kmax; ++k) {
      bool oracle_says = !mult.has_value() || *mult > k;
      CHECK(pattern[static_cast<size_t>(k - 1)] == oracle_says);
    }
    ++cases;
  }
}

TEST_CASE("degree ledger respects the documented bound") {
  Foliation f = coord_foliation(XY, 2);
  std::vector<MultiPoly> P = {parse_poly("x^2 + y", XY), parse_poly("y^2 - x", XY)};
  for (int k = 1; k <= 2; ++k) {
    MultiplicityOperatorSet set = multiplicity_operators(P, f, k);
    CHECK(set.max_degree <= set.degree_bound);
  }

  // rational field coefficients exercise the clearing path
  auto chart = AffineChart(XY, {}, {parse_poly("y", XY)});
  Foliation frat(chart, {{RF("1", XY), RF("1/y", XY)}});
  std::vector<MultiPoly> Q = {parse_poly("x^2", XY)};
  MultiplicityOperatorSet set = multiplicity_operators(Q, frat, 2);
  CHECK(set.max_degree <= set.degree_bound);
  for (const auto& factor : set.row_clearing) {
    CHECK_FALSE(factor.is_zero());
  }
}

TEST_CASE("emitted sets are stable under generator reversal") {
  Foliation f = coord_foliation(XY, 2);
  std::vector<MultiPoly> P = {parse_poly("x^2", XY), parse_poly("y^2 + x", XY)};
  std::vector<MultiPoly> Prev = {P[1], P[0]};
  MultiplicityOperatorSet a = multiplicity_operators(P, f, 2);
  MultiplicityOperatorSet b = multiplicity_operators(Prev, f, 2);
  Ideal ia(XY, TermOrder::grevlex(), a.emitted);
  Ideal ib(XY, TermOrder::grevlex(), b.emitted);
  for (const auto& g : a.emitted) CHECK(radical_member(g, ib));
  for (const auto& g : b.emitted) CHECK(radical_member(g, ia));
}

TEST_CASE("oracle rejects points off the chart") {
  std::vector<MultiPoly> ideal = {parse_poly("y - x^2", XY)};
  AffineChart chart(XY, ideal, {});
  Foliation f(chart, {{RF("1", XY), RF("2*x", XY)}});
  CHECK_THROWS_AS(
      (void)leaf_multiplicity_oracle({parse_poly("x", XY)}, f, {Rat(1), Rat(5)}, 8),
      PointOffChart);
  auto ok = leaf_multiplicity_oracle({parse_poly("x", XY)}, f, {Rat(0), Rat(0)}, 8);
  REQUIRE(ok.has_value());
  CHECK(*ok == 1);
}

TEST_CASE("clearing fails loudly when a denominator dies on the variety") {
  // chart X = V(y); a field coefficient with denominator y is a unit
  // nowhere on X, so the emitted rows cannot be cleared there
  std::vector<MultiPoly> ideal = {parse_poly("y", XY)};
  AffineChart chart(XY, ideal, {});
  std::vector<VectorField> bad_fields = {{RF("1/y", XY), RF("0", XY)}};
  CHECK_THROWS_AS(
      [&] {
        Foliation g(chart, bad_fields);
        (void)multiplicity_operators({parse_poly("x", XY)}, g, 1);
      }(),
      ChartDenominator);
}

TEST_CASE("minor cap trips with a clear error") {
  std::vector<std::string> v3 = {"x", "y", "z"};
  Foliation f = coord_foliation(v3, 3);
  std::vector<MultiPoly> P = {parse_poly("x^2", v3), parse_poly("y^2", v3),
                              parse_poly("z^2", v3)};
  CHECK_THROWS_AS((void)multiplicity_operators(P, f, 4, 10), MinorCapExceeded);
}
