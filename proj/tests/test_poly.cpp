#include "doctest.h"
#include "hopfkit/poly.hpp"

using namespace hk;

TEST_CASE("MultiPoly arithmetic") {
  MultiPoly a = MultiPoly::var("a"), b = MultiPoly::var("b");
  MultiPoly p = (a + b) * (a - b);
  CHECK(p == a * a - b * b);
  CHECK(p.degree() == 2);
  CHECK(p.variables() == std::vector<std::string>{"a", "b"});
  CHECK((p - p).is_zero());
  CHECK(p.terms().size() == 2);
  CHECK(p.substitute("b", a) == MultiPoly());
  CHECK(p.evaluate({{"a", Scalar(3)}, {"b", Scalar(2)}}) == Scalar(5));
  CHECK_THROWS_AS(p.evaluate({{"a", Scalar(3)}}), Error);
  CHECK(MultiPoly(Scalar(0)).is_zero());
  CHECK((Scalar(2) * a).str() == "(2)*a");
  std::vector<MultiPoly> parts = (a * a * b + a + Scalar(3)).in_var("a");
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == MultiPoly(Scalar(3)));
  CHECK(parts[1] == MultiPoly(Scalar(1)));
  CHECK(parts[2] == b);
  // canonical order: names sorted inside monomials
  CHECK((b * a).str() == "a*b");
}

TEST_CASE("polynomial system solver") {
  const Field f = default_field();
  MultiPoly t = MultiPoly::var("t"), u = MultiPoly::var("u");
  SolveResult r = solve_polynomial_system({t * t + Scalar(1)}, f);
  CHECK(r.complete);
  CHECK(r.solutions.size() == 2);
  for (const PolySolution& s : r.solutions) CHECK(s.at({}).at("t") * s.at({}).at("t") == Scalar(-1));

  // no rational root of t^2 - 2 over Q(i)
  CHECK(solve_polynomial_system({t * t - Scalar(2)}, f).solutions.empty());

  // t u = 1, t = u: two solutions
  SolveResult r2 = solve_polynomial_system({t * u - Scalar(1), t - u}, f);
  CHECK(r2.solutions.size() == 2);

  // u free
  SolveResult r3 = solve_polynomial_system({t - Scalar(2) * u}, f);
  REQUIRE(r3.solutions.size() == 1);
  CHECK(r3.solutions[0].free == std::vector<std::string>{"u"});
  CHECK(r3.solutions[0].at({{"u", Scalar(3)}}).at("t") == Scalar(6));

  CHECK(solve_polynomial_system({MultiPoly(Scalar(1))}, f).solutions.empty());
  // t u = 0 splits
  SolveResult r4 = solve_polynomial_system({t * u, u - Scalar(1)}, f);
  REQUIRE(r4.solutions.size() == 1);
  CHECK(r4.solutions[0].at({}).at("t") == Scalar(0));
}
