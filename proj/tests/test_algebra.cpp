#include <doctest.h>

#include <random>

#include "foliation/ideal.hpp"
#include "foliation/ratfunc.hpp"

using namespace fol;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

MultiPoly P(const std::string& t, const std::vector<std::string>& vars = XY,
            TermOrder order = TermOrder::grevlex()) {
  return parse_poly(t, vars, order);
}

// deterministic random polynomials for the property tests
struct Rng {
  std::mt19937 gen{20240817};
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  MultiPoly poly(const std::vector<std::string>& vars, int max_deg, int terms) {
    MultiPoly p(vars, TermOrder::grevlex());
    for (int t = 0; t < terms; ++t) {
      Expvec e(vars.size(), 0);
      int budget = max_deg;
      for (size_t v = 0; v < vars.size(); ++v) {
        e[v] = uniform(0, budget);
        budget -= e[v];
      }
      int c = uniform(-9, 9);
      if (c != 0) p.add_term(e, c);
    }
    return p;
  }
};

}  // namespace

TEST_CASE("polynomial text grammar round-trips") {
  auto p = P("x^2*y - 3/2*x + 1");
  CHECK(p.str() == "x^2*y - 3/2*x + 1");
  CHECK(parse_poly(p.str(), XY) == p);

  CHECK(P("0").is_zero());
  CHECK(P("x - x").is_zero());
  CHECK(P("0").str() == "0");
  CHECK(P("-x").str() == "-x");
  CHECK(P("y^3 - z^2", XYZ).str() == "y^3 - z^2");

  Rng rng;
  for (int i = 0; i < 50; ++i) {
    MultiPoly q = rng.poly(XYZ, 4, 6);
    CHECK(parse_poly(q.str(), XYZ) == q);
  }
}

TEST_CASE("exact arithmetic: (a + b) - b == a bit for bit") {
  Rng rng;
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = rng.poly(XYZ, 5, 8);
    MultiPoly b = rng.poly(XYZ, 5, 8);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("division and gcd") {
  auto a = P("x^2 - y^2");
  auto b = P("x + y");
  CHECK(a.div_exact(b) == P("x - y"));
  CHECK(poly_gcd(a, P("x^2 + 2*x*y + y^2")) == P("x + y"));
  CHECK(poly_gcd(P("0"), P("0")).is_zero());
  CHECK(poly_gcd(P("6"), P("4")) == P("1"));

  Rng rng;
  for (int i = 0; i < 30; ++i) {
    MultiPoly f = rng.poly(XY, 3, 4);
    MultiPoly g = rng.poly(XY, 3, 4);
    MultiPoly h = rng.poly(XY, 2, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    MultiPoly gcd = poly_gcd(f * h, g * h);
    CHECK(gcd.divides(f * h));
    CHECK(gcd.divides(g * h));
    CHECK(h.monic().divides(gcd));
  }
}

TEST_CASE("rational function normalization") {
  auto f = parse_ratfunc("(x^2-y^2)/(x-y)", XY);
  CHECK(f.is_polynomial());
  CHECK(f.num() == P("x + y"));

  auto g = parse_ratfunc("y/(2*x)", XY);
  CHECK(g.den().leading_coeff() == 1);  // monic denominator
  CHECK(g.num() == P("1/2*y"));

  auto h = parse_ratfunc("1/(x-y) + 1/(y-x)", XY);
  CHECK(h.is_zero());

  // derivative: quotient rule on y/x
  auto q = parse_ratfunc("y/x", XY);
  auto dq = q.derivative(0);
  CHECK(dq == parse_ratfunc("-y/x^2", XY));
}

TEST_CASE("groebner basis: worked examples") {
  TermOrder lex = TermOrder::lex();

  // already a basis
  Ideal g1 = groebner_basis(Ideal(XY, lex, {P("x", XY, lex)}), lex);
  REQUIRE(g1.gens().size() == 1);
  CHECK(g1.gens()[0] == P("x", XY, lex));

  // unit ideal
  Ideal g2 = groebner_basis(Ideal(XY, lex, {P("1", XY, lex)}), lex);
  REQUIRE(g2.gens().size() == 1);
  CHECK(g2.gens()[0].is_one());

  // one S-polynomial reduction: {x^2+y^2-1, x-y} -> {x-y, y^2-1/2}
  Ideal g3 = groebner_basis(
      Ideal(XY, lex, {P("x^2 + y^2 - 1", XY, lex), P("x - y", XY, lex)}), lex);
  REQUIRE(g3.gens().size() == 2);
  CHECK(g3.gens()[0] == P("x - y", XY, lex));
  CHECK(g3.gens()[1] == P("y^2 - 1/2", XY, lex));

  // idempotence on its own output
  Ideal g4 = groebner_basis(g3, lex);
  CHECK(g4.gens() == g3.gens());
}

TEST_CASE("eliminate: worked examples") {
  // twisted cubic
  Ideal tc(XYZ, TermOrder::grevlex(), {P("y - x^2", XYZ), P("z - x^3", XYZ)});
  Ideal e1 = eliminate(tc, {"x"});
  REQUIRE(e1.gens().size() == 1);
  std::vector<std::string> yz = {"y", "z"};
  MultiPoly expected = parse_poly("y^3 - z^2", yz);
  CHECK((e1.gens()[0] == expected || e1.gens()[0] == -expected));

  // y absent
  Ideal e2 = eliminate(Ideal(XY, TermOrder::grevlex(), {P("x - 1")}), {"y"});
  REQUIRE(e2.gens().size() == 1);
  std::vector<std::string> xonly = {"x"};
  CHECK(e2.gens()[0] == parse_poly("x - 1", xonly));

  // substitute c = x
  std::vector<std::string> xyc = {"x", "y", "c"};
  Ideal e3 = eliminate(
      Ideal(xyc, TermOrder::grevlex(), {parse_poly("x - c", xyc), parse_poly("y - c", xyc)}),
      {"c"});
  REQUIRE(e3.gens().size() == 1);
  CHECK(e3.gens()[0] == P("x - y"));
}

TEST_CASE("reduce_mod_ideal: worked examples and guards") {
  TermOrder lex = TermOrder::lex();
  Ideal gx = groebner_basis(Ideal(XY, lex, {P("x", XY, lex)}), lex);
  CHECK(reduce_mod_ideal(P("x^2", XY, lex), gx).is_zero());
  CHECK(reduce_mod_ideal(P("y", XY, lex), gx) == P("y", XY, lex));

  Ideal gxy = groebner_basis(Ideal(XY, lex, {P("x - y", XY, lex)}), lex);
  CHECK(reduce_mod_ideal(P("x + y", XY, lex), gxy) == P("2*y", XY, lex));

  Ideal raw(XY, lex, {P("x - y", XY, lex)});
  CHECK_THROWS_AS((void)reduce_mod_ideal(P("x", XY, lex), raw), std::invalid_argument);
}

TEST_CASE("normal form is a ring homomorphism on representatives") {
  Rng rng;
  int done = 0;
  for (int i = 0; i < 40 && done < 20; ++i) {
    MultiPoly f = rng.poly(XYZ, 3, 3);
    MultiPoly g = rng.poly(XYZ, 3, 3);
    if (f.is_zero() || g.is_zero()) continue;
    Ideal I = groebner_basis(Ideal(XYZ, TermOrder::grevlex(), {f, g}), TermOrder::grevlex());
    if (I.is_unit_ideal()) continue;
    MultiPoly p = rng.poly(XYZ, 3, 4);
    MultiPoly q = rng.poly(XYZ, 3, 4);
    MultiPoly r = rng.poly(XYZ, 3, 4);
    MultiPoly lhs = reduce_mod_ideal(p * q + r, I);
    MultiPoly rhs = reduce_mod_ideal(
        reduce_mod_ideal(p, I) * reduce_mod_ideal(q, I) + reduce_mod_ideal(r, I), I);
    CHECK(lhs == rhs);
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("eliminate is monotone under ideal inclusion") {
  Rng rng;
  int done = 0;
  for (int i = 0; i < 30 && done < 10; ++i) {
    MultiPoly f = rng.poly(XYZ, 2, 3);
    MultiPoly g = rng.poly(XYZ, 2, 3);
    if (f.is_zero() || g.is_zero()) continue;
    Ideal small(XYZ, TermOrder::grevlex(), {f});
    Ideal big(XYZ, TermOrder::grevlex(), {f, g});
    Ideal es = eliminate(small, {"z"});
    Ideal eb = eliminate(big, {"z"});
    Ideal eb_gb = eb.is_groebner() ? eb : groebner_basis(eb, eb.order());
    for (const auto& gen : es.gens()) CHECK(reduce_mod_ideal(gen, eb_gb).is_zero());
    ++done;
  }
  CHECK(done >= 5);
}

TEST_CASE("reduced groebner bases are canonical") {
  Rng rng;
  int done = 0;
  for (int i = 0; i < 30 && done < 12; ++i) {
    MultiPoly f = rng.poly(XYZ, 3, 3);
    MultiPoly g = rng.poly(XYZ, 3, 3);
    MultiPoly h = rng.poly(XYZ, 2, 2);
    if (f.is_zero() || g.is_zero()) continue;
    TermOrder order = TermOrder::grevlex();
    Ideal a = groebner_basis(Ideal(XYZ, order, {f, g, h}), order);
    Ideal b = groebner_basis(Ideal(XYZ, order, {h, g, f}), order);
    Ideal c = groebner_basis(Ideal(XYZ, order, {g, f + g, h}), order);  // same ideal
    CHECK(a.gens() == b.gens());
    CHECK(a.gens() == c.gens());
    // generators of the input reduce to zero against the basis
    for (const auto& p : {f, g, h}) CHECK(reduce_mod_ideal(p, a).is_zero());
    ++done;
  }
  CHECK(done >= 6);
}

TEST_CASE("radical membership via adjoined inverse") {
  Ideal I(XY, TermOrder::grevlex(), {P("x^2")});
  CHECK(radical_member(P("x"), I));
  CHECK_FALSE(radical_member(P("y"), I));
  CHECK_FALSE(radical_member(P("x + y"), I));
}
