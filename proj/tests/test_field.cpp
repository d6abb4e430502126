#include "doctest.h"
#include "hopfkit/field.hpp"
#include "test_util.hpp"

using namespace hk;

TEST_CASE("cyclotomic polynomials") {
  // Phi_4 = x^2 + 1, Phi_8 = x^4 + 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
  CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<Rational>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(15) == 8);
}

TEST_CASE("basic arithmetic in Q(i)") {
  Field f = default_field();
  Scalar i = Scalar::imag_unit(f);
  CHECK(i * i == Scalar(-1));
  CHECK(Scalar(1, 2) + Scalar(1, 2) == Scalar(1));
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK((i * i + Scalar(1)).is_zero());

  // (1 + i)^{-1}: the candidate (1 - i)/2 times (1 + i) must be 1
  Scalar x = Scalar(1) + i;
  Scalar cand = (Scalar(1) - i) * Scalar(1, 2);
  CHECK(x * cand == Scalar(1));
  CHECK(x.inv() == cand);
  CHECK_THROWS_AS(Scalar(0).inv(), Error);
  CHECK_THROWS_AS(x / Scalar(0), Error);
}

TEST_CASE("field mismatch") {
  Scalar a = Scalar::zeta(cyclotomic_field(4), 1);
  Scalar b = Scalar::zeta(cyclotomic_field(3), 1);
  try {
    (void)(a + b);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  // explicit embedding Q(z4) -> Q(z8): i = z8^2
  Field f8 = cyclotomic_field(8);
  CHECK(a.coerce(f8) == Scalar::zeta(f8, 2));
}

TEST_CASE("quadratic extensions") {
  Field q = cyclotomic_field(1);
  Field qi = adjoin_sqrt(q, Scalar(-1));
  Scalar s = Scalar::sqrt_generator(qi);
  CHECK(s * s == Scalar(-1));

  Field f = default_field();
  Scalar i = Scalar::imag_unit(f);
  Field g = adjoin_sqrt(f, Scalar(1) - i);
  Scalar sigma = Scalar::sqrt_generator(g);
  CHECK((sigma * sigma - (Scalar(1) - i)).is_zero());
  CHECK(sigma * sigma == (Scalar(1) - i).coerce(g));

  Field four = adjoin_sqrt(q, Scalar(4));
  Scalar t = Scalar::sqrt_generator(four);
  CHECK(t * t == Scalar(4));
  CHECK(t != Scalar(2));  // stays formal
  CHECK(t.str() == "s");

  try {
    adjoin_sqrt(g, Scalar(2));
    FAIL("expected AlreadyExtended");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlreadyExtended);
  }
  try {
    adjoin_sqrt(f, Scalar(0));
    FAIL("expected ZeroDiscriminant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDiscriminant);
  }

  // coercion round trip
  Scalar base = Scalar(3, 7) - Scalar(2) * i;
  Scalar up = base.coerce(g);
  CHECK(up.in_base());
  CHECK(up.base_coeffs() == base.base_coeffs());
}

TEST_CASE("literal parsing and printing round trip") {
  Field f = default_field();
  Scalar i = Scalar::imag_unit(f);
  CHECK(parse_scalar("1/2-1/2*i", f) == (Scalar(1) - i) * Scalar(1, 2));
  CHECK(parse_scalar("(1+i)*(1-i)", f) == Scalar(2));
  CHECK(parse_scalar("z(4,3)", f) == -i);
  CHECK(parse_scalar("-3", f) == Scalar(-3));
  CHECK_THROWS(parse_scalar("i", nullptr));
  CHECK_THROWS(parse_scalar("1+", f));
  Field g = adjoin_sqrt(f, parse_scalar("1-i", f));
  Scalar x = parse_scalar("2/3+i*s-5*s", g);
  CHECK(parse_scalar(x.str(), g) == x);
  Field f8 = cyclotomic_field(8);
  Scalar y = parse_scalar("z(8,3)-1/4*z(8,1)+7", f8);
  CHECK(parse_scalar(y.str(), f8) == y);
  CHECK(parse_scalar("i", f8) == Scalar::zeta(f8, 2));
}

TEST_CASE("square roots") {
  Field f = default_field();
  Scalar i = Scalar::imag_unit(f);
  auto r = try_sqrt(Scalar(2) * i);  // (1+i)^2 = 2i
  REQUIRE(r);
  CHECK(*r * *r == Scalar(2) * i);
  CHECK(!try_sqrt(Scalar(1) - i));
  CHECK(!try_sqrt(Scalar(-4, 9)));  // over Q
  CHECK(try_sqrt(Scalar(-4, 9).coerce(f)));

  Field g = adjoin_sqrt(f, Scalar(1) - i);
  auto s1 = try_sqrt((Scalar(1) - i).coerce(g));
  REQUIRE(s1);
  CHECK(*s1 * *s1 == Scalar(1) - i);
  // 1 + i = 2/(1 - i) needs sqrt(2), which Q(i)(s) lacks
  CHECK(!try_sqrt((Scalar(1) + i).coerce(g)));

  Field f8 = cyclotomic_field(8);
  Field g8 = adjoin_sqrt(f8, Scalar(1) - Scalar::zeta(f8, 2));
  auto s2 = try_sqrt((Scalar(1) + Scalar::zeta(f8, 2)).coerce(g8));
  REQUIRE(s2);
  CHECK(*s2 * *s2 == Scalar(1) + Scalar::zeta(f8, 2));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  Field f4 = default_field();
  Field g = adjoin_sqrt(f4, Scalar(1) - Scalar::imag_unit(f4));
  for (const Field& f : {cyclotomic_field(1), f4, cyclotomic_field(5), cyclotomic_field(12), g}) {
    for (int t = 0; t < 40; ++t) {
      Scalar a = testing::random_scalar(rng, f), b = testing::random_scalar(rng, f),
             c = testing::random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
      CHECK(parse_scalar(a.str(), f) == a);
    }
  }
}
