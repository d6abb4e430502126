#include <functional>

#include "doctest.h"
#include "hopfkit/constructions.hpp"

using namespace hk;

namespace {

Vec kp_vec(const char* label) { return kp()->alg.basis(kp()->alg.index_of(label)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("cocycles and twisted group algebras") {
  Cocycle psi = Cocycle::klein_sign();
  CHECK(psi.is_cocycle());
  CHECK(psi.is_normalized());
  ComoduleAlgebra t = build_twisted_group_algebra(psi);
  const Algebra& a = t.alg;
  CHECK(a.basis_product(1, 2) == unit_vec(4, 3));
  CHECK(a.basis_product(2, 1) == Scalar(-1) * unit_vec(4, 3));
  CHECK(a.basis_product(1, 1) == unit_vec(4, 0));
  CHECK(a.basis_product(2, 2) == unit_vec(4, 0));

  ComoduleAlgebra triv = build_twisted_group_algebra(Cocycle::trivial());
  CHECK(triv.alg.mult == catalog_entry("ga_K").alg.mult);
  CHECK(triv.coaction == catalog_entry("ga_K").coaction);

  Cocycle bad = Cocycle::trivial();
  bad.table[1][2] = Scalar(2);
  CHECK(kind_of([&] { build_twisted_group_algebra(bad); }) == ErrorKind::NotACocycle);

  Cocycle tw = psi.twisted_by({Scalar(1), Scalar(2), Scalar(-1, 3), Scalar(5)});
  CHECK(tw.is_cocycle());
  CHECK(tw.is_normalized());
  CHECK(check_comodule_algebra(build_twisted_group_algebra(tw)).ok());
}

TEST_CASE("generated coideal subalgebras") {
  HopfPtr h = kp();
  CHECK(coideal_generated(h, {}).dim() == 1);
  ComoduleAlgebra gx = coideal_generated(h, {kp_vec("x")});
  CHECK(gx.dim() == 2);
  CHECK(gx.alg.labels == std::vector<std::string>{"1", "x"});
  CHECK(coideal_generated(h, {kp_vec("x"), kp_vec("y")}).dim() == 4);
  CHECK(coideal_generated(h, {kp_vec("z")}).dim() == 8);

  const Scalar i = Scalar::imag_unit(default_field());
  for (const Scalar& gamma : {i, -i}) {
    ComoduleAlgebra s = coideal_generated(h, {kp_vec("z") + gamma * kp_vec("zx")});
    CHECK(s.dim() == 4);
    CHECK(check_comodule_algebra(s).ok());
  }
  // Delta(S) in H (x) S and S S in S for every output
  for (const auto& gens : std::vector<std::vector<Vec>>{{}, {kp_vec("xy")}, {kp_vec("z") + i * kp_vec("zx")}}) {
    Subspace s = coideal_span(h, gens);
    CHECK(is_left_coideal(*h, s));
    CHECK(is_subalgebra(h->alg, s));
    for (const Vec& g : gens) CHECK(s.contains(g));
  }
}

TEST_CASE("the algebra A^gamma_xy") {
  const Scalar i = Scalar::imag_unit(default_field());
  ComoduleAlgebra a = build_a_xy_gamma(i);
  CHECK(check_comodule_algebra(a).ok());
  const Algebra& m = a.alg;
  // e_xy v = gamma w, v^2 = 1 - gamma e_xy
  CHECK(m.basis_product(1, 2) == i * unit_vec(4, 3));
  CHECK(m.basis_product(2, 1) == i * unit_vec(4, 3));
  CHECK(m.basis_product(2, 2) == unit_vec(4, 0) - i * unit_vec(4, 1));
  CHECK(center(m).dim() == 4);

  CHECK(kind_of([] { build_a_xy_gamma(Scalar(1)); }) == ErrorKind::GammaNotPrimitiveFourthRoot);
  CHECK(kind_of([] { build_a_xy_gamma(Scalar(2)); }) == ErrorKind::GammaNotPrimitiveFourthRoot);

  // 1 -> 1, e_xy -> -e_xy, v -> -v, w -> -w is an isomorphism A^i -> A^-i
  ComoduleAlgebra b = build_a_xy_gamma(-i);
  Matrix f = Matrix::identity(4);
  for (size_t k = 1; k < 4; ++k) f(k, k) = -1;
  CHECK(is_algebra_map(a.alg, b.alg, f));
  CHECK(kron(Matrix::identity(8), f) * a.coaction == b.coaction * f);
  CHECK(!is_algebra_map(a.alg, b.alg, Matrix::identity(4)));
}

TEST_CASE("smash products") {
  auto h0 = std::make_shared<const HopfAlgebra>(build_cyclic(2));
  SmashResult hopf = smash_product(sweedler_input(regular(h0)));
  CHECK(check_hopf(*hopf.hopf).ok());
  CHECK(hopf.hopf->dim() == 4);
  // grouplikes are exactly 1 and g; v^2 = 0; gv = -vg
  const HopfAlgebra& s = *hopf.hopf;
  for (size_t k = 0; k < 4; ++k) CHECK(is_grouplike(s, s.alg.basis(k)) == (k < 2));
  CHECK(s.alg.basis_product(2, 2) == zero_vec(4));
  CHECK(s.alg.product(s.alg.basis(1), s.alg.basis(2)) == Scalar(-1) * s.alg.product(s.alg.basis(2), s.alg.basis(1)));
  CHECK(trace_radical(s.alg).dim() == 2);

  SmashResult toy = smash_product(sweedler_input(trivial_comodule_algebra(h0)));
  const ComoduleAlgebra& a = toy.algebra;
  CHECK(a.dim() == 2);
  CHECK(check_comodule_algebra(a).ok());
  // lambda(v) = v (x) 1 + g (x) v in the basis 1#1, 1#g, v#1, v#g of the bosonization
  Vec expect = kron(unit_vec(4, 2), unit_vec(2, 0)) + kron(unit_vec(4, 1), unit_vec(2, 1));
  CHECK(a.lambda(unit_vec(2, 1)) == expect);

  // trivial R returns A0
  ComoduleAlgebra a0 = regular(h0);
  SmashInput in;
  in.h0 = h0;
  in.a0 = a0;
  in.b = Algebra(1, {"1"});
  in.b.m(0, 0, 0) = 1;
  in.b.unit = unit_vec(1, 0);
  in.degree = {0};
  in.action = {Matrix::identity(1), Matrix::identity(1)};
  in.b_coaction = Matrix::from_cols({{Scalar(1), Scalar(0)}}, 2);
  in.b_comult = Matrix::identity(1);
  in.b_counit = {Scalar(1)};
  in.b_antipode = Matrix::identity(1);
  SmashResult same = smash_product(in);
  CHECK(same.algebra.alg.mult == a0.alg.mult);
  CHECK(same.algebra.coaction == a0.coaction);

  SmashInput bad = sweedler_input(a0);
  bad.action[1] = Matrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}}, 2);
  CHECK(kind_of([&] { smash_product(bad); }) == ErrorKind::NotModuleAlgebra);
}

TEST_CASE("bimodule V") {
  EquivariantModule v = build_bimodule_V("kpsi");
  CHECK(check_equivariant(v).ok());
  const Vec ey = unit_vec(4, 2);
  Vec eyey = v.acting.alg.product(ey, ey);
  CHECK(v.act(eyey) * unit_vec(2, 0) == unit_vec(2, 0));
  CHECK(v.action[1] * unit_vec(2, 1) == Scalar(-1) * unit_vec(2, 1));
  CHECK(v.action[2] * unit_vec(2, 0) == unit_vec(2, 1));

  EquivariantModule vx = build_bimodule_V("ga_x");
  CHECK(check_equivariant(vx).ok());
  CHECK(vx.acting.name == "ga_x");

  EquivariantModule broken = v;
  broken.action[2] = Matrix::identity(2);
  CHECK(!check_equivariant(broken).ok());
  CHECK_THROWS_AS(build_bimodule_V("nope"), Error);
}
