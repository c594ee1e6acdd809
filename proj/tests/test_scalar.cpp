#include <random>

#include "doctest.h"
#include "mdrep/json_io.hpp"
#include "mdrep/scalar.hpp"

using namespace mdrep;

namespace {

RatFunc P(const std::string& s) { return parse_ratfunc(s); }

Cyclo random_rational(std::mt19937& g) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  return Cyclo(Rational(num(g), den(g)));
}

}  // namespace

TEST_CASE("rational function arithmetic examples") {
  CHECK((P("p/q") * P("q/p")).is_one());
  CHECK(P("(p^2-q^2)/(p-q)") == P("p+q"));
  CHECK(P("1/(t^2-1)") + P("1/(t^2-1)") == P("2/(t^2-1)"));
  CHECK_THROWS_AS(P("p") / RatFunc(), unsatisfiable_error);
  CHECK_THROWS_AS(P("p/(q-q)"), unsatisfiable_error);
}

TEST_CASE("evaluation examples") {
  Assignment a{{"p", Cyclo(2)}, {"q", Cyclo(3)}};
  CHECK(P("p/q").evaluate(a) == Cyclo(Rational(2, 3)));
  CHECK(P("(p^2-1)/(4*p)").evaluate({{"p", Cyclo(1)}}).is_zero());
  CHECK_THROWS_AS(P("1/(p-1)").evaluate({{"p", Cyclo(1)}}), rejected_point);
  Constraints cs{Poly::var("p") + Poly(1)};
  CHECK_THROWS_AS(P("p").evaluate({{"p", Cyclo(-1)}}, cs), rejected_point);
}

TEST_CASE("zero test examples") {
  CHECK((P("p*q") - P("q*p")).is_zero());
  CHECK((P("(p+q)^2") - P("p^2") - P("2*p*q") - P("q^2")).is_zero());
  CHECK_FALSE((P("p") - P("q")).is_zero());
}

TEST_CASE("evaluation is a homomorphism at random points") {
  std::mt19937 g(7);
  std::vector<RatFunc> pool = {P("p/(q+1)"), P("(p^2-q)/(p*q-2)"), P("1/(t^2-1)+p"), P("(p-q)^3/(p+q)"),
                               P("z3*p+q"), P("(q^2+1)/(p-z3)")};
  int checked = 0;
  while (checked < 120) {
    const RatFunc& a = pool[g() % pool.size()];
    const RatFunc& b = pool[g() % pool.size()];
    Assignment at{{"p", random_rational(g)}, {"q", random_rational(g)}, {"t", random_rational(g)}};
    try {
      Cyclo va = a.evaluate(at), vb = b.evaluate(at);
      CHECK((a + b).evaluate(at) == va + vb);
      CHECK((a - b).evaluate(at) == va - vb);
      CHECK((a * b).evaluate(at) == va * vb);
      if (!vb.is_zero()) CHECK((a / b).evaluate(at) == va / vb);
      ++checked;
    } catch (const rejected_point&) {
    }
  }
}

TEST_CASE("canonical form is idempotent and normalised") {
  RatFunc f(Poly::var("p") * Poly(2) - Poly(2), (Poly::var("p") - Poly(1)) * Poly::var("q") * Poly(4));
  CHECK(f == P("1/(2*q)"));
  CHECK(f.canonical() == f);
  CHECK(f.canonical().canonical() == f.canonical());
  CHECK(f.den().lc().is_one());
}

TEST_CASE("roots of unity") {
  for (int m : {1, 2, 3, 4, 6}) CHECK(Cyclo::zeta(m).pow(m).is_one());
  Cyclo w = Cyclo::zeta(3);
  CHECK((w * w + w + Cyclo(1)).is_zero());
  Cyclo i = Cyclo::zeta(4);
  CHECK((i * i + Cyclo(1)).is_zero());
  Cyclo z6 = Cyclo::zeta(6);
  CHECK((z6 * z6 - z6 + Cyclo(1)).is_zero());
  CHECK(w.inv() * w == Cyclo(1));
  CHECK_THROWS_AS(w + i, field_error);
}

TEST_CASE("symbolic zero agrees with evaluation") {
  std::mt19937 g(11);
  std::vector<std::pair<RatFunc, bool>> cases = {
      {P("(p+q)*(p-q) - p^2 + q^2"), true},
      {P("1/(p-1) - 1/(p+1) - 2/(p^2-1)"), true},
      {P("p/(q+2) - 1"), false},
  };
  for (auto& [f, zero] : cases) {
    CHECK(f.is_zero() == zero);
    int n = 0;
    while (n < 20) {
      Assignment at{{"p", random_rational(g)}, {"q", random_rational(g)}};
      try {
        bool z = f.evaluate(at).is_zero();
        if (zero) CHECK(z);
        ++n;
      } catch (const rejected_point&) {
      }
    }
  }
}

TEST_CASE("constraints cover products of declared factors") {
  Constraints cs{Poly::var("p"), Poly::var("p") - Poly(1)};
  CHECK(cs.allows(P("p^3*(p-1)").num()));
  CHECK(cs.allows(Poly(5)));
  CHECK_FALSE(cs.allows(P("p+1").num()));
}

TEST_CASE("rational function JSON round trip") {
  for (auto s : {"p/q", "(z3*p+q^2)/(p-3)", "7/2", "0"}) {
    RatFunc f = P(s);
    CHECK(ratfunc_from_json(to_json(f)) == f);
  }
  json j = to_json(P("2*p^2*q"));
  CHECK(j["den"][0][0]["q"] == "1");
  CHECK(j["num"][0][1]["p"] == 2);
}
