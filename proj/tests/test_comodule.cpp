#include "doctest.h"
#include "hopfkit/constructions.hpp"

using namespace hk;

namespace {

Vec kp_vec(const char* label) { return kp()->alg.basis(kp()->alg.index_of(label)); }

// lambda(v) = 1/2 [(z+zx) (x) v + (z-zx) (x) w]
Vec x_coaction_of_v(const Vec& v, const Vec& w) {
  const Scalar half(1, 2);
  return half * (kron(kp_vec("z") + kp_vec("zx"), v) + kron(kp_vec("z") - kp_vec("zx"), w));
}

}  // namespace

TEST_CASE("comodule X and catalog axioms") {
  CHECK(check_comodule(comodule_x()).ok());
  std::vector<ComoduleAlgebra> cat = catalog();
  REQUIRE(cat.size() == 8);
  const std::vector<std::string> names{"k", "ga_x", "ga_y", "ga_xy", "ga_K", "a_xy_i", "kp", "kpsi"};
  const std::vector<size_t> dims{1, 2, 2, 2, 4, 4, 8, 4};
  for (size_t i = 0; i < cat.size(); ++i) {
    CAPTURE(cat[i].name);
    CHECK(cat[i].name == names[i]);
    CHECK(cat[i].dim() == dims[i]);
    CHECK(check_comodule_algebra(cat[i]).ok());
    CHECK(coinvariants(cat[i]).dim() == 1);
  }
}

TEST_CASE("broken coactions are reported") {
  Comodule c = comodule_x();
  c.coaction(4 * 2 + 0, 0) = 0;
  ComoduleReport r = check_comodule(c);
  CHECK(!r.ok());
  CHECK(!r.failures.empty());

  ComoduleAlgebra a = build_a_xy_gamma_unchecked(Scalar(1));
  ComoduleAlgebraReport ar = check_comodule_algebra(a);
  CHECK(ar.coassoc);
  // e_xy (e_xy v) = -gamma^2 v forces gamma^2 = -1
  CHECK(!ar.algebra);
  CHECK(!ar.ok());
}

TEST_CASE("trivial coaction on M_2") {
  ComoduleAlgebra m;
  m.name = "m2";
  m.hopf = kp();
  m.alg = matrix_algebra(2);
  m.coaction = kron(Matrix::from_cols({kp()->alg.unit}, 8), Matrix::identity(4));
  CHECK(check_comodule_algebra(m).ok());
  CHECK(coinvariants(m).dim() == 4);
}

TEST_CASE("KP decomposition of the regular comodule algebra") {
  ComoduleAlgebra reg = regular(kp());
  KpDecomposition d = kp_decompose(reg);
  for (const char* g : {"1", "x", "y", "xy"}) {
    CHECK(d.parts.at(g) == Subspace::span(8, {kp_vec(g)}));
  }
  CHECK(d.a_k.dim() == 4);
  CHECK(d.a_2.dim() == 4);
  CHECK(d.v_2.dim() == 2);
  CHECK(d.w_2.dim() == 2);
  CHECK((d.v_2 + d.w_2) == d.a_2);
  // tau pairs V_2 with W_2 and reproduces the coaction of X
  for (const Vec& v : d.v_2.basis()) {
    Vec w = d.tau * v;
    CHECK(d.w_2.contains(w));
    CHECK(reg.lambda(v) == x_coaction_of_v(v, w));
  }
  CHECK(apply(d.tau, d.v_2) == d.w_2);
  CHECK(apply(d.tau, d.w_2) == d.v_2);
  for (const Vec& g : d.a_k.basis()) CHECK(is_zero(d.tau * g));

  MuDecomposition mu = mu_decompose(d);
  CHECK(mu.e_x == kp_vec("x"));
  CHECK(mu.e_y == kp_vec("y"));
  size_t total = 0;
  for (const auto& [sign, s] : mu.v_parts) total += s.dim();
  CHECK(total == 2);
  total = 0;
  for (const auto& [sign, s] : mu.w_parts) total += s.dim();
  CHECK(total == 2);
}

TEST_CASE("KP decomposition of small catalog entries") {
  KpDecomposition a = kp_decompose(catalog_entry("a_xy_i"));
  CHECK(a.parts.at("xy").dim() == 1);
  CHECK(a.parts.at("x").dim() == 0);
  CHECK(a.v_2.dim() == 1);
  CHECK(a.w_2.dim() == 1);
  CHECK_THROWS_AS(mu_decompose(a), Error);

  ComoduleAlgebra gk = catalog_entry("ga_K");
  KpDecomposition g = kp_decompose(gk);
  CHECK(g.a_2.dim() == 0);
  MuDecomposition mu = mu_decompose(g);
  for (const auto& [sign, s] : mu.v_parts) CHECK(s.dim() == 0);
  for (const auto& [sign, s] : mu.w_parts) CHECK(s.dim() == 0);

  auto h0 = std::make_shared<const HopfAlgebra>(build_cyclic(2));
  CHECK_THROWS_AS(kp_decompose(regular(h0)), Error);
  try {
    kp_decompose(regular(h0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOverKp);
  }
}

TEST_CASE("sub, sum and push forward") {
  ComoduleAlgebra reg = regular(kp());
  CHECK_THROWS_AS(sub_comodule_algebra(reg, Subspace::span(8, {kp_vec("1"), kp_vec("z")})), Error);

  ComoduleAlgebra gk = catalog_entry("ga_K");
  ComoduleAlgebra two = direct_sum(gk, gk);
  CHECK(two.dim() == 8);
  CHECK(check_comodule_algebra(two).ok());
  CHECK(coinvariants(two).dim() == 2);

  auto kk = std::make_shared<const HopfAlgebra>(build_klein());
  ComoduleAlgebra pushed = push_forward(regular(kk), kp(), klein_into_kp());
  CHECK(check_comodule_algebra(pushed).ok());
  CHECK(pushed.coaction == gk.coaction);
  CHECK(pushed.alg.mult == gk.alg.mult);

  Matrix p = Matrix::identity(4);
  p(1, 2) = 1;
  ComoduleAlgebra c = change_basis(gk, p);
  CHECK(check_comodule_algebra(c).ok());
}

TEST_CASE("Loewy grading over cosemisimple KP") {
  HopfFiltration f = coradical_filtration(*kp(), Subspace::full(8));
  for (const ComoduleAlgebra& a : catalog()) {
    CAPTURE(a.name);
    LoewyGrading g = loewy(a, f);
    REQUIRE(g.degrees.size() == 1);
    CHECK(g.degrees[0].dim() == a.dim());
    KappaResult k = kappa(a, g);
    CHECK(k.injective);
    CHECK(k.comodule_morphism);
    CHECK(k.algebra_morphism);
    CHECK(k.map == a.coaction);
  }
  ComoduleAlgebra reg = regular(kp());
  LoewyGrading g = loewy(reg, f);
  PhiResult phi = phi_embed(reg, g, Matrix::identity(8));
  CHECK(phi.injective);
  CHECK(phi.comodule_morphism);
  CHECK(phi.algebra_morphism);
  CHECK(phi.map == Matrix::identity(8));
  Matrix bad = Matrix::identity(8);
  bad(4, 4) = 2;
  CHECK_THROWS_AS(phi_embed(reg, g, bad), Error);
}

TEST_CASE("Loewy grading of a Sweedler-type smash product") {
  auto h0 = std::make_shared<const HopfAlgebra>(build_cyclic(2));
  SmashResult sw = smash_product(sweedler_input(trivial_comodule_algebra(h0)));
  const HopfAlgebra& h = *sw.hopf;
  HopfFiltration hf = coradical_filtration(h, sw.hopf_grading.degrees[0]);
  LoewyGrading g = loewy(sw.algebra, hf);
  REQUIRE(g.degrees.size() == 2);
  CHECK(g.degrees[0].dim() == 1);
  CHECK(g.degrees[1].dim() == 1);
  CHECK(g.degrees[0] == sw.grading.degrees[0]);
  CHECK(is_algebra_grading(sw.algebra.alg, g));

  ComoduleAlgebra gr = associated_graded(sw.algebra, g, hf);
  CHECK(check_comodule_algebra(gr).ok());
  KappaResult k = kappa(sw.algebra, g);
  CHECK(k.comodule_morphism);
  CHECK(k.injective);

  std::vector<Subspace> short_filt{Subspace::span(2, {unit_vec(2, 0)})};
  CHECK_THROWS_AS(grading_from_filtration(short_filt), Error);
}
