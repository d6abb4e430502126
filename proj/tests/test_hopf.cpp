#include "doctest.h"
#include "hopfkit/constructions.hpp"

using namespace hk;

namespace {

Vec kp_elem(std::initializer_list<std::pair<const char*, Scalar>> terms) {
  const HopfAlgebra& h = *kp();
  Vec v = zero_vec(8);
  for (const auto& [l, c] : terms) v[h.alg.index_of(l)] += c;
  return v;
}

}  // namespace

TEST_CASE("KP relations") {
  const HopfAlgebra& h = *kp();
  const Scalar half(1, 2);
  auto e = [&](const char* l) { return h.alg.basis(h.alg.index_of(l)); };
  CHECK(h.alg.product(e("z"), e("z")) == kp_elem({{"1", half}, {"x", half}, {"y", half}, {"xy", -half}}));
  CHECK(h.alg.product(e("y"), e("z")) == e("zx"));
  CHECK(h.alg.product(e("x"), e("z")) == e("zy"));
  CHECK(h.alg.product(e("x"), e("x")) == e("1"));
  CHECK(h.eps(e("z")) == Scalar(1));
  // Delta(z) = 1/2 ((1+y)z (x) z + (1-y)z (x) xz)
  Vec yz = h.alg.product(e("y"), e("z")), xz = h.alg.product(e("x"), e("z"));
  Vec expect = half * (kron(e("z") + yz, e("z")) + kron(e("z") - yz, xz));
  CHECK(h.delta(e("z")) == expect);
}

TEST_CASE("Hopf axioms on the built-in algebras") {
  for (const HopfAlgebra& h : {build_kp(), build_klein(), build_cyclic(2), build_cyclic(5)}) {
    CAPTURE(h.name);
    HopfReport r = check_hopf(h);
    CHECK(r.ok());
    CHECK(r.failures.empty());
    CHECK(check_antipode_properties(h).ok());
  }
}

TEST_CASE("mutated KP is rejected") {
  HopfAlgebra h = build_kp();
  // z^2 = 1
  for (size_t k = 0; k < 8; ++k) h.alg.m(4, 4, k) = k == 0 ? Scalar(1) : Scalar(0);
  HopfReport r = check_hopf(h);
  CHECK(!r.ok());
  CHECK(!r.failures.empty());
  CHECK(!r.delta_is_algebra_map);

  HopfAlgebra g = build_kp();
  g.coalg.d(4, 4, 4) = 0;
  HopfReport rg = check_hopf(g);
  CHECK(!rg.coassoc);
  CHECK(!rg.counit);

  HopfAlgebra s = build_kp();
  s.antipode = Matrix::identity(8);
  HopfReport rs = check_hopf(s);
  CHECK(rs.coassoc);
  CHECK(!rs.antipode_axiom);
}

TEST_CASE("grouplikes and antipode of KP") {
  const HopfAlgebra& h = *kp();
  for (size_t i = 0; i < 8; ++i) CHECK(is_grouplike(h, h.alg.basis(i)) == (i < 4));
  CHECK(!is_grouplike(h, kp_elem({{"x", Scalar(1)}, {"y", Scalar(1)}})));
  CHECK(h.antipode * h.antipode == Matrix::identity(8));
  CHECK(antipode_inverse(h) == h.antipode);
  HopfAlgebra bad = build_kp();
  bad.antipode = Matrix(8, 8);
  CHECK_THROWS_AS(antipode_inverse(bad), Error);
}

TEST_CASE("preimage of kK (x) KP under Delta") {
  const HopfAlgebra& h = *kp();
  Subspace k4 = Subspace::span(8, {unit_vec(8, 0), unit_vec(8, 1), unit_vec(8, 2), unit_vec(8, 3)});
  Subspace pre = preimage(h.coalg.delta_matrix(), tensor_subspace(k4, Subspace::full(8)));
  CHECK(pre == k4);
  // brute force over basis vectors and all sums of pairs
  Subspace target = tensor_subspace(k4, Subspace::full(8));
  for (size_t i = 0; i < 8; ++i) {
    CHECK(target.contains(h.delta(h.alg.basis(i))) == (i < 4));
    for (size_t j = 4; j < 8; ++j) CHECK(!target.contains(h.delta(h.alg.basis(i) + h.alg.basis(j))));
  }
  CHECK(is_left_coideal(h, k4));
  CHECK(is_subcoalgebra(h, k4));
  CHECK(!is_subcoalgebra(h, Subspace::span(8, {unit_vec(8, 0), unit_vec(8, 4)})));
}

TEST_CASE("coradical filtrations") {
  const HopfAlgebra& h = *kp();
  HopfFiltration f = coradical_filtration(h, Subspace::full(8));
  CHECK(f.levels.size() == 1);
  CHECK(check_filtration(h, f).ok());
  CHECK_THROWS_AS(coradical_filtration(h, Subspace::span(8, {unit_vec(8, 4)})), Error);

  auto h0 = std::make_shared<const HopfAlgebra>(build_cyclic(2));
  SmashResult sw = smash_product(sweedler_input(regular(h0)));
  const HopfAlgebra& s = *sw.hopf;
  CHECK(s.dim() == 4);
  Subspace c0 = Subspace::span(4, {s.alg.unit, unit_vec(4, 1)});
  HopfFiltration sf = coradical_filtration(s, c0);
  REQUIRE(sf.levels.size() == 2);
  CHECK(sf.levels[0].dim() == 2);
  CHECK(sf.levels[1].dim() == 4);
  CHECK(check_filtration(s, sf).ok());
  // the filtration is the one induced by the R-degree grading
  CHECK(sf.levels[0] == sw.hopf_grading.degrees[0]);
  CHECK(sf.levels[1] == sw.hopf_grading.degrees[0] + sw.hopf_grading.degrees[1]);

  GradedHopf gr = associated_graded_hopf(s, sf);
  CHECK(check_hopf(gr.hopf).ok());
  CHECK(gr.grading.degrees.size() == 2);
}

TEST_CASE("tensor helpers") {
  Matrix sw = swap_matrix(2, 3);
  CHECK(sw * kron(unit_vec(2, 1), unit_vec(3, 2)) == kron(unit_vec(3, 2), unit_vec(2, 1)));
  CHECK(swap_matrix(3, 2) * sw == Matrix::identity(6));
  const Algebra& a = kp()->alg;
  Vec x = kron(a.basis(4), a.basis(1)), y = kron(a.basis(4), a.basis(2));
  CHECK(tensor_product(a, a, x, y) == kron(a.product(a.basis(4), a.basis(4)), a.basis(3)));
}
