#include "doctest.h"
#include "hopfkit/constructions.hpp"
#include "test_util.hpp"

using namespace hk;

namespace {

Algebra dual_numbers() {
  Algebra a(2, {"1", "t"});
  a.m(0, 0, 0) = 1;
  a.m(0, 1, 1) = 1;
  a.m(1, 0, 1) = 1;
  a.unit = unit_vec(2, 0);
  return a;
}

}  // namespace

TEST_CASE("matrix algebra M_2") {
  Algebra m2 = matrix_algebra(2);
  CHECK(check_algebra(m2).ok());
  CHECK(center(m2) == Subspace::span(4, {m2.unit}));
  CHECK(trace_radical(m2).dim() == 0);
  // E12 E21 = E11, E21 E12 = E22
  CHECK(m2.basis_product(1, 2) == unit_vec(4, 0));
  CHECK(m2.basis_product(2, 1) == unit_vec(4, 3));
  CHECK(m2.basis_product(1, 1) == zero_vec(4));
}

TEST_CASE("trace radical") {
  Algebra d = dual_numbers();
  CHECK(trace_radical(d) == Subspace::span(2, {unit_vec(2, 1)}));
  CHECK(trace_radical(build_klein().alg).dim() == 0);
  CHECK(trace_radical(build_kp().alg).dim() == 0);
  CHECK(trace_radical(build_twisted_group_algebra(Cocycle::klein_sign()).alg).dim() == 0);

  Algebra bad = d;
  bad.m(1, 1, 0) = 1;
  bad.m(1, 1, 1) = 1;  // t^2 = 1 + t, still associative (commutative, generated by t)
  CHECK(check_algebra(bad).ok());
  Algebra broken(2, {"1", "t"});
  broken.m(0, 0, 0) = 1;
  broken.m(0, 1, 1) = 1;
  broken.unit = unit_vec(2, 0);  // t 1 = 0
  CHECK(!check_algebra(broken).ok());
  CHECK_THROWS_AS(trace_radical(broken), Error);
}

TEST_CASE("associativity failures are located") {
  Algebra a = matrix_algebra(2);
  a.m(1, 2, 0) = 2;  // E12 E21 = 2 E11 breaks (E12 E21) E12 = E12 (E21 E12)
  AlgebraReport r = check_algebra(a);
  CHECK(!r.associative);
  bool found = false;
  for (const auto& t : r.failing_triples) found |= t == std::array<size_t, 3>{1, 2, 1};
  CHECK(found);
}

TEST_CASE("generated operator algebra") {
  Algebra m2 = matrix_algebra(2);
  std::vector<Matrix> left, both;
  for (size_t i = 0; i < 4; ++i) {
    left.push_back(mult_operator(m2, Side::Left, m2.basis(i)));
    both.push_back(left.back());
    both.push_back(mult_operator(m2, Side::Right, m2.basis(i)));
  }
  CHECK(generated_operator_algebra(left).dim() == 4);
  CHECK(generated_operator_algebra(both).dim() == 16);
  CHECK(generated_operator_algebra(3, {Matrix(3, 3)}).dim() == 1);
  CHECK_THROWS_AS(generated_operator_algebra({}), Error);
}

TEST_CASE("kK_psi is M_2") {
  ComoduleAlgebra kpsi = build_twisted_group_algebra(Cocycle::klein_sign());
  Matrix f = kpsi_to_m2();
  CHECK(is_algebra_map(kpsi.alg, matrix_algebra(2), f));
  CHECK(inverse(f).has_value());
  CHECK(center(kpsi.alg).dim() == 1);
}

TEST_CASE("subalgebras, direct sums and basis changes") {
  Algebra kp = build_kp().alg;
  Subspace k4 = Subspace::span(8, {unit_vec(8, 0), unit_vec(8, 1), unit_vec(8, 2), unit_vec(8, 3)});
  CHECK(is_subalgebra(kp, k4));
  CHECK(!is_subalgebra(kp, Subspace::span(8, {unit_vec(8, 0), unit_vec(8, 4)})));
  Algebra sub = sub_algebra(kp, k4, {"1", "x", "y", "xy"});
  CHECK(sub.mult == build_klein().alg.mult);
  CHECK_THROWS_AS(sub_algebra(kp, Subspace::span(8, {unit_vec(8, 4)})), Error);

  Algebra s = direct_sum(dual_numbers(), matrix_algebra(2));
  CHECK(s.dim == 6);
  CHECK(s.labels[1] == "t_1");
  CHECK(s.labels[2] == "E11_2");
  CHECK(check_algebra(s).ok());
  CHECK(trace_radical(s).dim() == 1);
  CHECK(center(s).dim() == 3);

  std::mt19937 rng(7);
  const Field f = default_field();
  for (int trial = 0; trial < 5; ++trial) {
    Matrix p(8, 8);
    do {
      for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) p(i, j) = testing::random_scalar(rng, f);
    } while (!inverse(p));
    Algebra c = change_basis(kp, p);
    CHECK(check_algebra(c).ok());
    CHECK(center(c).dim() == center(kp).dim());
    CHECK(is_algebra_map(c, kp, p));
  }
}
