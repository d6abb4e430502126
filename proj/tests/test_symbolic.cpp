#include "doctest.h"

#include <set>

#include "hopfkit/constructions.hpp"
#include "hopfkit/morita.hpp"
#include "hopfkit/symbolic.hpp"

using namespace hk;

namespace {

MultiPoly sym(const char* s) { return MultiPoly::var(s); }
MultiPoly num(long c) { return MultiPoly(Scalar(c)); }

}  // namespace

TEST_CASE("generic table over the trivial kind") {
  GenericExtension g = generic_extension(ExtKind::Trivial, 1);
  REQUIRE(g.dim() == 3);
  CHECK(g.symbols == std::vector<std::string>{"alpha11"});
  CHECK(g.basis_product(g.v(0), g.v(0))[0] == sym("alpha11"));
  CHECK(g.basis_product(g.v(0), g.w(0))[0] == -sym("alpha11"));
  CHECK(g.basis_product(g.w(0), g.v(0))[0] == -sym("alpha11"));
  CHECK(g.basis_product(g.w(0), g.w(0))[0] == -sym("alpha11"));
  CHECK(g.basis_product(g.v(0), g.v(0))[g.v(0)].is_zero());
}

TEST_CASE("v1 v1 over ga_K and kpsi factors through (1 + b e_y)(1 + a e_x)") {
  GenericExtension k = generic_extension(ExtKind::GaK, 1, {{1, 1}});
  const auto kv = k.basis_product(k.v(0), k.v(0));
  for (size_t c = 0; c < 4; ++c) CHECK(kv[c] == sym("alpha11"));

  GenericExtension m = generic_extension(ExtKind::GaK, 1, {{-1, 1}});
  const auto mv = m.basis_product(m.v(0), m.v(0));
  // (1 + y)(1 - x) = 1 - x + y - xy
  CHECK(mv[1] == -sym("alpha11"));
  CHECK(mv[2] == sym("alpha11"));
  CHECK(mv[3] == -sym("alpha11"));

  // e_y e_x = -e_xy in kpsi
  GenericExtension p = generic_extension(ExtKind::Kpsi, 1, {{1, 1}});
  const auto pv = p.basis_product(p.v(0), p.v(0));
  CHECK(pv[0] == sym("alpha11"));
  CHECK(pv[3] == -sym("alpha11"));
}

TEST_CASE("sign validation") {
  CHECK_THROWS_AS(generic_extension(ExtKind::GaK, 2, {{1, 1}}), Error);
  CHECK_THROWS_AS(generic_extension(ExtKind::Trivial, 1, {{1, 1}}), Error);
  CHECK_THROWS_AS(generic_extension(ExtKind::GaX, 1, {{2, 1}}), Error);
  CHECK_THROWS_AS(parse_ext_kind("ga_z"), Error);
  for (ExtKind k : all_ext_kinds()) CHECK(parse_ext_kind(ext_kind_name(k)) == k);
}

TEST_CASE("the parametrized coaction is multiplicative") {
  for (ExtKind kind : all_ext_kinds())
    for (size_t n2 : {1u, 2u}) {
      std::vector<SignPair> s;
      if (kind_needs_signs(kind)) s = n2 == 1 ? std::vector<SignPair>{{1, 1}} : std::vector<SignPair>{{1, 1}, {-1, -1}};
      CHECK_MESSAGE(coaction_defects(generic_extension(kind, n2, s)).empty(), ext_kind_name(kind), " n2=", n2);
    }
}

TEST_CASE("n2 = 0 leaves A_K alone") {
  for (ExtKind kind : all_ext_kinds()) {
    GenericExtension g = generic_extension(kind, 0);
    CHECK(g.symbols.empty());
    CHECK(associativity_constraints(g).empty());
  }
}

TEST_CASE("action forms") {
  CHECK(action_forms(ExtKind::GaX, 1, {{1, 1}}).empty());
  CHECK(action_forms(ExtKind::GaK, 1, {{1, 1}}).empty());
  CHECK(action_forms(ExtKind::Kpsi, 2, {{1, 1}, {-1, -1}}).empty());
  CHECK(action_forms(ExtKind::GaXY, 1, {}).size() == 4);
  CHECK(action_forms(ExtKind::GaK, 2, {{1, 1}, {-1, -1}}).size() == 8);

  auto big = action_forms(ExtKind::GaK, 4, {{1, 1}, {1, 1}, {-1, -1}, {-1, -1}});
  CHECK(big.size() == 256);
  auto reps = form_orbit_representatives(big, 4);
  CHECK(reps.size() < big.size());
  CHECK(form_orbit_representatives(reps, 4).size() == reps.size());

  // without a form the constraint list is {1}
  GenericExtension none = generic_extension(ExtKind::GaX, 1, {{1, 1}});
  CHECK(!none.form);
  VanishingResult r = forces_vanishing(associativity_constraints(none), {});
  CHECK(r.contradiction);
}

TEST_CASE("forces_vanishing over the trivial kind") {
  GenericExtension g = generic_extension(ExtKind::Trivial, 1);
  const auto cons = associativity_constraints(g);
  VanishingResult r = forces_vanishing(cons, {sym("alpha11")});
  CHECK(r.forced);
  CHECK(!r.contradiction);
  REQUIRE(r.certificates.size() == 1);
  CHECK(verify_certificate(cons, r.certificates[0]));
}

TEST_CASE("null product over kpsi forces every constant to vanish") {
  // n2 = 2 admits no form, so the constraint list is already inconsistent
  GenericExtension g = generic_extension(ExtKind::Kpsi, 2, {{1, 1}, {-1, -1}});
  auto cons = associativity_constraints(g);
  for (const auto& p : product_vanishes(g, g.v(0), g.v(1))) cons.push_back(p);
  std::vector<MultiPoly> targets;
  for (const auto& s : g.symbols) targets.push_back(MultiPoly::var(s));
  VanishingResult r = forces_vanishing(cons, targets);
  CHECK(r.forced);
  for (const auto& c : r.certificates) CHECK(verify_certificate(cons, c));
}

TEST_CASE("dependent squares over ga_K with one class pair are contradictory") {
  const std::vector<SignPair> s{{1, 1}, {-1, 1}};
  GenericExtension g = generic_extension(ExtKind::GaK, 2, s);
  auto cons = associativity_constraints(g);
  const auto p = g.basis_product(g.v(0), g.v(0));
  const auto q = g.basis_product(g.v(1), g.v(0));
  for (long c : {1L, -1L, 2L})
    for (size_t k = 0; k < g.dim(); ++k) {
      auto h = cons;
      h.push_back(p[k] - num(c) * q[k]);
      CHECK(forces_vanishing(h, {}).contradiction);
    }
}

TEST_CASE("certificates and linearity") {
  const std::vector<MultiPoly> cons{sym("a") - sym("b"), sym("b") + num(2) * sym("c"), sym("c")};
  VanishingResult r = forces_vanishing(cons, {sym("a"), sym("b")});
  CHECK(r.forced);
  REQUIRE(r.certificates.size() == 2);
  for (const auto& c : r.certificates) CHECK(verify_certificate(cons, c));
  Certificate bad = r.certificates[0];
  bad.coeffs[0] = bad.coeffs[0] + Scalar(1);
  CHECK(!verify_certificate(cons, bad));

  VanishingResult partial = forces_vanishing({sym("a") - sym("b")}, {sym("a")});
  CHECK(!partial.forced);
  CHECK(partial.unforced.size() == 1);

  bool nonlinear = false;
  try {
    forces_vanishing({sym("a") * sym("b")}, {sym("a")});
  } catch (const Error& e) {
    nonlinear = e.kind() == ErrorKind::NonlinearResidue;
  }
  CHECK(nonlinear);
}

TEST_CASE("every replay passes") {
  const auto names = replay_names();
  CHECK(names.size() == 8);
  for (const auto& n : names) {
    ReplayReport r = replay_lemma(n);
    CHECK_MESSAGE(r.passed, n);
    CHECK(!r.cases.empty());
    for (const auto& c : r.cases)
      for (const auto& cert : c.result.certificates) CHECK(verify_certificate(c.constraints, cert));
  }
  CHECK_THROWS_AS(replay_lemma("no-such-replay"), Error);
}

TEST_CASE("the ga_K pair with alpha11 = 1 gives KP's constants") {
  ReplayReport r = replay_lemma("group-kp");
  size_t found = 0;
  for (const auto& c : r.cases)
    if (c.detail.find("isomorphic to KP") != std::string::npos) {
      ++found;
      CHECK(c.detail.find("alpha11=1 alpha12=-1 alpha21=-1 alpha22=-1") != std::string::npos);
    }
  CHECK(found == 2);
}

TEST_CASE("classification for n2 <= 1") {
  Classification cl = classify_n2_le_1();
  CHECK(cl.matches_expected);
  CHECK(cl.empty_cases.size() == 5);
  size_t base = 0;
  const SolutionFamily* gamma = nullptr;
  for (const auto& f : cl.families) {
    if (f.n2 == 0) ++base;
    if (f.n2 == 1) {
      CHECK(f.kind == ExtKind::GaXY);
      gamma = &f;
    }
    for (const auto& m : f.members) CHECK(check_comodule_algebra(m.algebra).ok());
  }
  CHECK(base == 6);
  REQUIRE(gamma != nullptr);
  REQUIRE(gamma->members.size() == 2);
  std::set<std::string> gammas;
  for (const auto& m : gamma->members) {
    CHECK(m.values.at("alpha11") == Scalar(1));
    // gamma sits in the action: e_xy v = gamma w
    const Algebra& a = m.algebra.alg;
    const Scalar gm = a.basis_product(a.index_of("xy"), a.index_of("v1"))[a.index_of("w1")];
    CHECK(gm * gm == Scalar(-1));
    CHECK(m.values.at("delta11") == -gm);
    gammas.insert(gm.str());
  }
  CHECK(gammas.size() == 2);
}

TEST_CASE("classified algebras match catalog entries one to one") {
  Classification cl = classify_n2_le_1();
  std::vector<ComoduleAlgebra> cat;
  for (auto& c : catalog())
    if (c.dim() <= 4) cat.push_back(c);
  std::set<std::string> hit;
  for (const auto& f : cl.families) {
    std::set<std::string> family_hits;
    for (const auto& m : f.members) {
      std::vector<std::string> matches;
      for (const auto& c : cat)
        if (c.dim() == m.algebra.dim() && colinear_iso_search(m.algebra, c).iso) matches.push_back(c.name);
      REQUIRE(matches.size() == 1);
      family_hits.insert(matches[0]);
    }
    CHECK(family_hits.size() == 1);
    CHECK(hit.insert(*family_hits.begin()).second);
  }
  CHECK(hit.size() == cat.size());
}

TEST_CASE("specialization gives honest algebras") {
  GenericExtension g = generic_extension(ExtKind::GaXY, 1);
  const Scalar i = Scalar::imag_unit(default_field());
  const Scalar gm = g.form->left.at(1)(1, 0);
  CHECK((gm == i || gm == -i));
  Assignment vals{{"alpha11", Scalar(1)}, {"delta11", -gm}};
  ComoduleAlgebra a = specialize(g, vals);
  CHECK(check_comodule_algebra(a).ok());
  vals["delta11"] = gm;
  CHECK(!check_comodule_algebra(specialize(g, vals)).ok());
}
