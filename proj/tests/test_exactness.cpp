#include "doctest.h"
#include "hopfkit/constructions.hpp"
#include "hopfkit/exactness.hpp"

using namespace hk;

TEST_CASE("catalog entries are AM-exact") {
  for (const ComoduleAlgebra& a : catalog()) {
    CAPTURE(a.name);
    ExactnessVerdict v = am_exact(a);
    CHECK(v.right_h_simple);
    CHECK(v.coinvariants_dim == 1);
    CHECK(v.am_exact);
    CHECK(v.method == SimplicityMethod::Burnside);
    CHECK(v.operator_algebra_dim == a.dim() * a.dim());
  }
}

TEST_CASE("costable operators") {
  CHECK(costable_operators(catalog_entry("k")).size() == 2);
  CHECK(costable_operators(catalog_entry("kp")).size() == 16);
  CHECK(is_right_h_simple(catalog_entry("kpsi")).operator_algebra_dim == 16);
}

TEST_CASE("non-exact inputs carry a verified witness") {
  ComoduleAlgebra gk = catalog_entry("ga_K");
  ComoduleAlgebra two = direct_sum(gk, gk);
  ExactnessVerdict v = am_exact(two);
  CHECK(!v.right_h_simple);
  CHECK(!v.am_exact);
  CHECK(v.coinvariants_dim == 2);
  REQUIRE(v.witness.has_value());
  CHECK(v.method == SimplicityMethod::Witness);
  CHECK(v.witness->dim() > 0);
  CHECK(v.witness->dim() < 8);
  CHECK(is_costable_right_ideal(two, *v.witness));

  ComoduleAlgebra m;
  m.name = "m2";
  m.hopf = kp();
  m.alg = matrix_algebra(2);
  m.coaction = kron(Matrix::from_cols({kp()->alg.unit}, 8), Matrix::identity(4));
  ExactnessVerdict mv = am_exact(m);
  CHECK(mv.coinvariants_dim == 4);
  CHECK(!mv.am_exact);
  CHECK(!mv.right_h_simple);
  REQUIRE(mv.witness.has_value());
  CHECK(is_costable_right_ideal(m, *mv.witness));
}

TEST_CASE("the full subspace and zero are costable ideals") {
  ComoduleAlgebra a = catalog_entry("kp");
  CHECK(is_costable_right_ideal(a, Subspace::full(8)));
  CHECK(is_costable_right_ideal(a, Subspace::span(8, {})));
  CHECK(!is_costable_right_ideal(a, Subspace::span(8, {unit_vec(8, 1)})));
}
