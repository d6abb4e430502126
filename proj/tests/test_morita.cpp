#include "doctest.h"

#include <memory>

#include "hopfkit/constructions.hpp"
#include "hopfkit/morita.hpp"

using namespace hk;

namespace {

Vec kp_vec(const char* label) { return kp()->alg.basis(kp()->alg.index_of(label)); }

bool rep_ok(const Algebra& a, const std::vector<Matrix>& rho) {
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      Matrix rhs(rho[0].rows(), rho[0].cols());
      for (size_t k = 0; k < a.dim; ++k)
        if (!a.m(i, j, k).is_zero()) rhs = rhs + rho[k] * a.m(i, j, k);
      if (rho[i] * rho[j] != rhs) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("End_B(V): one-dimensional over kpsi, a y-twisted group algebra over ga_x") {
  ComoduleAlgebra s = end_b(build_bimodule_V("kpsi"));
  CHECK(s.dim() == 1);
  CHECK(check_comodule_algebra(s).ok());

  EndAlgebra e = end_b_operators(build_bimodule_V("ga_x"));
  REQUIRE(e.algebra.dim() == 2);
  // the y-isotypic part is spanned by an involution up to scalar, F with lambda(F) = y (x) F
  const size_t y = kp()->alg.index_of("y");
  Subspace fy = image(e.algebra.slice(y));
  REQUIRE(fy.dim() == 1);
  const Vec fv = fy.basis()[0];
  CHECK(e.algebra.lambda(fv) == kron(kp()->alg.basis(y), fv));
  Matrix f(2, 2);
  for (size_t k = 0; k < 2; ++k) f = f + e.operators[k] * fv[k];
  Matrix f2 = f * f;
  CHECK(f2(0, 1).is_zero());
  CHECK(f2(0, 0) == f2(1, 1));
  CHECK(!f2(0, 0).is_zero());

  IsoSearch iso = colinear_iso_search(e.algebra, catalog_entry("ga_y"));
  CHECK(iso.iso.has_value());
  CHECK(!colinear_iso_search(e.algebra, catalog_entry("ga_x")).iso);
}

TEST_CASE("End_B(B) recovers B") {
  for (const char* name : {"ga_x", "ga_K", "kpsi"}) {
    ComoduleAlgebra b = catalog_entry(name);
    ComoduleAlgebra s = end_b(regular_module(b));
    CHECK(s.dim() == b.dim());
    IsoSearch iso = colinear_iso_search(s, b);
    CHECK_MESSAGE(iso.iso.has_value(), name);
  }
}

TEST_CASE("colinear isomorphism search") {
  IsoSearch none = colinear_iso_search(catalog_entry("ga_x"), catalog_entry("ga_y"));
  CHECK(!none.iso);
  CHECK(none.exhaustive);
  CHECK(!colinear_iso_search(catalog_entry("ga_x"), catalog_entry("ga_K")).iso);
  CHECK(colinear_iso_search(catalog_entry("ga_K"), catalog_entry("ga_K")).iso);
  // a generic ga_xy relabelling by the automorphism sending e_xy to -e_xy is not colinear
  ComoduleAlgebra gxy = catalog_entry("ga_xy");
  CHECK(colinear_iso_search(gxy, gxy).iso);

  HopfPtr h = kp();
  const Scalar i = Scalar::imag_unit(default_field());
  ComoduleAlgebra ci = coideal_generated(h, {kp_vec("z") + i * kp_vec("zx")});
  ComoduleAlgebra cmi = coideal_generated(h, {kp_vec("z") - i * kp_vec("zx")});
  // over Q(i) the candidates need a square root of (1+i)/2
  IsoSearch a = colinear_iso_search(catalog_entry("a_xy_i"), cmi);
  CHECK(!a.iso);
  CHECK(!a.exhaustive);
  REQUIRE(!a.needs_sqrt.empty());
  const Scalar d = a.needs_sqrt[0];
  CHECK(d == (Scalar(1) + i) / Scalar(2));
  const Field g = adjoin_sqrt(default_field(), d);
  const ComoduleAlgebra ag = catalog_entry("a_xy_i").coerce(g);
  IsoSearch ext = colinear_iso_search(ag, cmi.coerce(g));
  REQUIRE(ext.iso.has_value());
  CHECK(is_algebra_map(ag.alg, cmi.coerce(g).alg, *ext.iso));
  // z + i zx needs the other root
  IsoSearch other = colinear_iso_search(ag, ci.coerce(g));
  CHECK(!other.iso);
  REQUIRE(!other.needs_sqrt.empty());
  CHECK(other.needs_sqrt[0] == (Scalar(1) - i) / Scalar(2));
  ExtendedIsoSearch plus = colinear_iso_search_extending(catalog_entry("a_xy_i"), ci);
  REQUIRE(plus.search.iso.has_value());
  CHECK(plus.adjoined == std::vector<Scalar>{(Scalar(1) - i) / Scalar(2)});

  CHECK(colinear_iso_search(catalog_entry("a_xy_i"), build_a_xy_gamma(-i)).iso.has_value());
}

TEST_CASE("simple modules") {
  std::vector<SimpleModule> kpsi = simple_modules(catalog_entry("kpsi"));
  REQUIRE(kpsi.size() == 1);
  CHECK(kpsi[0].dim == 2);
  CHECK(rep_ok(catalog_entry("kpsi").alg, kpsi[0].action));

  std::vector<SimpleModule> gk = simple_modules(catalog_entry("ga_K"));
  CHECK(gk.size() == 4);
  for (const auto& s : gk) CHECK(s.dim == 1);

  CHECK(semisimple_type(kp()->alg) == std::vector<size_t>{1, 1, 1, 1, 2});
  CHECK(classically_morita_equivalent(catalog_entry("ga_x").alg, catalog_entry("ga_y").alg));
  CHECK(!classically_morita_equivalent(catalog_entry("ga_K").alg, catalog_entry("kpsi").alg));

  Algebra radical(2, {"1", "t"});
  radical.m(0, 0, 0) = 1;
  radical.m(0, 1, 1) = 1;
  radical.m(1, 0, 1) = 1;
  radical.unit = unit_vec(2, 0);
  CHECK_THROWS_AS(simple_modules(radical), Error);
}

TEST_CASE("A^i needs a square root to split") {
  ComoduleAlgebra a = catalog_entry("a_xy_i");
  bool needs = false;
  try {
    simple_modules(a);
  } catch (const Error& e) {
    needs = e.kind() == ErrorKind::NeedsFieldExtension;
  }
  CHECK(needs);
}

TEST_CASE("KP simple modules are representations") {
  const Field f = default_field();
  auto ms = kp_simple_modules(f);
  REQUIRE(ms.size() == 5);
  size_t total = 0;
  for (const auto& m : ms) {
    CHECK(rep_ok(kp()->alg.coerce(f), m.action));
    total += m.dim * m.dim;
  }
  CHECK(total == 8);
  for (size_t a = 0; a < ms.size(); ++a)
    for (size_t b = 0; b < ms.size(); ++b) CHECK(hom_dim(ms[a].action, ms[b].action) == (a == b ? 1u : 0u));
}

TEST_CASE("fusion fingerprints") {
  FusionFingerprint gx = fusion_fingerprint(catalog_entry("ga_x"));
  FusionFingerprint gy = fusion_fingerprint(catalog_entry("ga_y"));
  FusionFingerprint gxy = fusion_fingerprint(catalog_entry("ga_xy"));
  CHECK(gx.rows.size() == 5);
  CHECK(gx.cols.size() == 2);
  CHECK(!fingerprint_distinguishes(gx, gy).distinguished);
  Distinction d = fingerprint_distinguishes(gx, gxy);
  CHECK(d.distinguished);
  CHECK(!d.explanation.empty());
  CHECK(!fingerprint_distinguishes(gx, gx).distinguished);
  CHECK(fingerprint_distinguishes(gx, fusion_fingerprint(catalog_entry("ga_K"))).distinguished);
}

TEST_CASE("shifted regular modules over the Klein coideal") {
  auto klein = std::make_shared<const HopfAlgebra>(build_klein());
  const size_t x = klein->alg.index_of("x"), y = klein->alg.index_of("y");
  ComoduleAlgebra by = coideal_generated(klein, {klein->alg.basis(y)});
  ComoduleAlgebra bx = coideal_generated(klein, {klein->alg.basis(x)});
  REQUIRE(by.dim() == 2);
  for (size_t g = 0; g < 4; ++g) {
    EquivariantModule p = shifted_regular_module(by, klein->alg.basis(g));
    CHECK(check_equivariant(p).ok());
    ComoduleAlgebra s = end_b(p);
    CHECK(s.dim() == 2);
    CHECK(!colinear_iso_search(s, bx).iso);
  }
  CHECK_THROWS_AS(shifted_regular_module(by, klein->alg.basis(x) + klein->alg.basis(y)), Error);
}

TEST_CASE("free modules and direct sums") {
  ComoduleAlgebra b = catalog_entry("ga_K");
  EquivariantModule p = direct_sum(regular_module(b), regular_module(b));
  CHECK(check_equivariant(p).ok());
  auto basis = free_basis(p);
  REQUIRE(basis.has_value());
  CHECK(basis->size() == 2);
  CHECK(end_b(p).dim() == 16);
  auto vx = free_basis(build_bimodule_V("ga_x"));
  REQUIRE(vx.has_value());
  CHECK(vx->size() == 1);
  CHECK(free_basis(build_bimodule_V("kpsi")) == std::nullopt);
}

TEST_CASE("cosemisimplicity") {
  CHECK(is_cosemisimple(*kp()));
  CHECK(is_cosemisimple(build_klein()));
  auto h0 = std::make_shared<const HopfAlgebra>(build_cyclic(2));
  CHECK(!is_cosemisimple(*smash_product(sweedler_input(regular(h0))).hopf));
}

TEST_CASE("Loewy-graded End of the Sweedler algebra over itself") {
  auto h0 = std::make_shared<const HopfAlgebra>(build_cyclic(2));
  SmashResult sw = smash_product(sweedler_input(regular(h0)));
  HopfFiltration hf = coradical_filtration(*sw.hopf, sw.hopf_grading.degrees[0]);
  EquivariantModule p = regular_module(sw.algebra);
  GradedEnd g = loewy_graded_end(p, hf);
  CHECK(g.end.algebra.dim() == 4);
  CHECK(g.degree0_dim == 2);
  CHECK(g.end_b0_dim == 2);
  CHECK(g.matches_loewy);
  CHECK(g.degree0_restriction_iso);
  CHECK(g.hom_dims == std::vector<size_t>{2, 2});
  CHECK(colinear_iso_search(g.end.algebra, sw.algebra).iso.has_value());

  EquivariantModule bad = p;
  LoewyGrading shifted;
  shifted.degrees = {sw.grading.degrees.at(1), sw.grading.degrees.at(0)};
  bad.grading = shifted;
  bool caught = false;
  try {
    loewy_graded_end(bad, hf);
  } catch (const Error& e) {
    caught = e.kind() == ErrorKind::NotGeneratedInDegreeZero;
  }
  CHECK(caught);
}
