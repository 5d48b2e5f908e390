#include <doctest.h>

#include "foliation/errors.hpp"
#include "foliation/series.hpp"

using namespace fol;

namespace {

const std::vector<std::string> NOVARS = {};
const TermOrder G = TermOrder::grevlex();

RationalFunc C(long n, long d = 1) {
  return RationalFunc::constant(rat(n, d), NOVARS, G);
}

}  // namespace

TEST_CASE("laurent arithmetic and truncation bookkeeping") {
  // a = t^-1 + 2 + 3t, known through t^2
  LaurentSeries a("t", NOVARS, G, -1, 3);
  a.set_coeff(-1, C(1));
  a.set_coeff(0, C(2));
  a.set_coeff(1, C(3));

  CHECK(a.coeff(2).is_zero());
  CHECK_THROWS_AS((void)a.coeff(3), TruncationTooSmall);

  LaurentSeries b = a * a;
  CHECK(b.low() == -2);
  CHECK(b.trunc() == 2);  // min(3 + -1, 3 + -1)
  CHECK(b.coeff(-2) == C(1));
  CHECK(b.coeff(-1) == C(4));
  CHECK(b.coeff(0) == C(10));
  CHECK(b.coeff(1) == C(12));

  LaurentSeries s = a + (-a);
  CHECK(s.known_zero());
}

TEST_CASE("inverse and sqrt") {
  // u = 1 + t^2
  LaurentSeries u("t", NOVARS, G, 0, 6);
  u.set_coeff(0, C(1));
  u.set_coeff(2, C(1));
  LaurentSeries v = u.inverse();
  CHECK(v.coeff(0) == C(1));
  CHECK(v.coeff(2) == C(-1));
  CHECK(v.coeff(4) == C(1));
  LaurentSeries prod = u * v;
  CHECK(prod.coeff(0) == C(1));
  for (int e = 1; e < prod.trunc(); ++e) CHECK(prod.coeff(e).is_zero());

  LaurentSeries r = u.sqrt_one_plus();
  CHECK(r.coeff(0) == C(1));
  CHECK(r.coeff(2) == C(1, 2));
  CHECK(r.coeff(4) == C(-1, 8));
  LaurentSeries sq = r * r;
  CHECK(sq.coeff(0) == C(1));
  CHECK(sq.coeff(2) == C(1));
  CHECK(sq.coeff(4).is_zero());
}

TEST_CASE("inverse of a series with a pole") {
  // a = t^-2 (1 + t): inverse is t^2 (1 - t + t^2 - ...)
  LaurentSeries a("t", NOVARS, G, -2, 3);
  a.set_coeff(-2, C(1));
  a.set_coeff(-1, C(1));
  LaurentSeries v = a.inverse();
  CHECK(v.low() == 2);
  CHECK(v.coeff(2) == C(1));
  CHECK(v.coeff(3) == C(-1));
  CHECK(v.coeff(4) == C(1));
  LaurentSeries prod = a * v;
  CHECK(prod.coeff(0) == C(1));
  for (int e = 1; e < prod.trunc(); ++e) CHECK(prod.coeff(e).is_zero());
}

TEST_CASE("derivative, antiderivative, residue") {
  LaurentSeries a("t", NOVARS, G, -2, 4);
  a.set_coeff(-2, C(6));
  a.set_coeff(1, C(2));

  LaurentSeries d = a.derivative();
  CHECK(d.coeff(-3) == C(-12));
  CHECK(d.coeff(0) == C(2));

  LaurentSeries f = a.antiderivative();
  CHECK(f.coeff(-1) == C(-6));
  CHECK(f.coeff(2) == C(1));
  // derivative of the primitive gives back the series where both are known
  LaurentSeries back = f.derivative();
  CHECK(back.coeff(-2) == C(6));
  CHECK(back.coeff(1) == C(2));

  CHECK(a.residue().is_zero());
  LaurentSeries withres("t", NOVARS, G, -1, 2);
  withres.set_coeff(-1, C(5));
  CHECK(withres.residue() == C(5));
  CHECK_THROWS_AS((void)withres.antiderivative(), NonSecondKind);
}
