// hopfkit: command line front end.
// Exit codes: 0 ok, 1 a checked property failed, 2 usage error, 3 internal or unsupported.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hopfkit/constructions.hpp"
#include "hopfkit/io.hpp"
#include "hopfkit/suite.hpp"

using namespace hk;

namespace {

struct Globals {
  bool json = false;
  int field = 4;
  std::string adjoin;
  Field resolved;
};

Field make_field(const Globals& g) {
  Field f = cyclotomic_field(g.field);
  if (!g.adjoin.empty()) f = adjoin_sqrt(f, parse_scalar(g.adjoin, f));
  return f;
}

bool is_hopf_ref(const std::string& ref) {
  return ref == "builtin:kp" || ref == "builtin:klein4" || ref == "builtin:sweedler";
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_verify(const Globals& g, const std::string& ref, bool as_comodalg) {
  if (is_hopf_ref(ref) && !as_comodalg) {
    HopfReport r = check_hopf(load_hopf(ref, g.resolved));
    std::string text = ref + ": " + (r.ok() ? "Hopf algebra axioms hold" : "FAILED") + "\n";
    for (const auto& f : r.failures) text += "  " + f + "\n";
    emit(g, hopf_report_to_json(r), text);
    return r.ok() ? 0 : 1;
  }
  ComoduleAlgebraReport r = check_comodule_algebra(load_comodalg(ref, g.resolved));
  Json j{{"ok", r.ok()}, {"algebra", r.algebra}, {"coassociative", r.coassoc}, {"counit", r.counit},
         {"multiplicative", r.multiplicative}, {"unit", r.unit_preserved}, {"failures", r.failures}};
  std::string text = ref + ": " + (r.ok() ? "comodule algebra axioms hold" : "FAILED") + "\n";
  for (const auto& f : r.failures) text += "  " + f + "\n";
  emit(g, j, text);
  return r.ok() ? 0 : 1;
}

int cmd_check_exact(const Globals& g, const std::string& ref, const std::string& expect) {
  ComoduleAlgebra a = load_comodalg(ref, g.resolved);
  ExactnessVerdict v = am_exact(a);
  Json j = verdict_to_json(v);
  j = Json{{"input", ref}, {"verdict", j}};
  std::string text = ref + ": " + (v.am_exact ? "AM-exact" : "not AM-exact") + ", coinvariants dim " +
                     std::to_string(v.coinvariants_dim) + "\n";
  if (v.witness) text += "  witness: costable right ideal of dim " + std::to_string(v.witness->dim()) + "\n";
  emit(g, j, text);
  if (expect.empty()) return 0;
  return (expect == "exact") == v.am_exact ? 0 : 1;
}

int cmd_catalog(const Globals& g, const std::string& name) {
  if (!name.empty()) {
    ComoduleAlgebra a = catalog_entry(name).coerce(g.resolved);
    Json j = comodalg_to_json(a);
    emit(g, j, j.dump(2) + "\n");
    return 0;
  }
  Json list = Json::array();
  std::string text;
  for (const auto& a : catalog()) {
    std::string labels;
    for (const auto& l : a.alg.labels) labels += (labels.empty() ? "" : " ") + l;
    list.push_back(Json{{"name", a.name}, {"dim", a.dim()}, {"labels", a.alg.labels}});
    text += a.name + std::string(8 - std::min<size_t>(a.name.size(), 7), ' ') + "dim " + std::to_string(a.dim()) +
            "  [" + labels + "]\n";
  }
  emit(g, list, text);
  return 0;
}

// "V:kpsi" or "V:ga_x" is the bimodule V; any comodule algebra ref is its regular module.
EquivariantModule load_module(const Globals& g, const std::string& ref) {
  if (ref.rfind("V:", 0) == 0) return build_bimodule_V(ref.substr(2));
  return regular_module(load_comodalg(ref, g.resolved));
}

int cmd_endp(const Globals& g, const std::string& ref) {
  EquivariantModule p = load_module(g, ref);
  ComoduleAlgebra e = end_b(p, "End(" + ref + ")");
  Json matches = Json::array();
  std::string text = "End_B(P) for " + ref + ": dim " + std::to_string(e.dim()) + ", coinvariants dim " +
                     std::to_string(coinvariants(e).dim()) + "\n";
  if (e.hopf == kp() || is_kp(*e.hopf))
    for (const auto& c : catalog())
      if (c.dim() == e.dim() && colinear_iso_search(e, c.coerce(g.resolved)).iso) {
        matches.push_back(c.name);
        text += "  isomorphic to catalog:" + c.name + "\n";
      }
  Json j{{"input", ref}, {"end", comodalg_to_json(e)}, {"isomorphic_to", matches}};
  emit(g, j, text);
  return check_comodule_algebra(e).ok() ? 0 : 1;
}

int cmd_fingerprint(const Globals& g, const std::string& ra, const std::string& rb) {
  FusionFingerprint fa = fusion_fingerprint(load_comodalg(ra, g.resolved));
  FusionFingerprint fb = fusion_fingerprint(load_comodalg(rb, g.resolved));
  Distinction d = fingerprint_distinguishes(fa, fb);
  Json j{{"a", fingerprint_to_json(fa)}, {"b", fingerprint_to_json(fb)}, {"distinguished", d.distinguished},
         {"explanation", d.explanation}};
  emit(g, j, (d.distinguished ? "distinguished: " : "not distinguished: ") + d.explanation + "\n");
  return 0;
}

int cmd_classify(const Globals& g, const std::string& kind, std::optional<int> n2) {
  if (!kind.empty()) parse_ext_kind(kind);
  Classification c = classify_n2_le_1();
  Classification out;
  out.matches_expected = c.matches_expected;
  out.detail = c.detail;
  for (const auto& f : c.families)
    if ((kind.empty() || kind == ext_kind_name(f.kind)) && (!n2 || static_cast<size_t>(*n2) == f.n2)) out.families.push_back(f);
  for (const auto& e : c.empty_cases)
    if ((kind.empty() || e.rfind(kind + " ", 0) == 0) && (!n2 || e.ends_with("n2=" + std::to_string(*n2))))
      out.empty_cases.push_back(e);
  std::string text;
  for (const auto& f : out.families) {
    text += std::string(ext_kind_name(f.kind)) + " n2=" + std::to_string(f.n2) + ": " + f.description + "\n";
    for (const auto& m : f.members) {
      text += "  dim " + std::to_string(m.algebra.dim());
      for (const auto& [k, v] : m.values) text += "  " + k + "=" + v.str();
      text += "\n";
    }
  }
  for (const auto& e : out.empty_cases) text += e + ": no extension\n";
  if (text.empty()) text = "(no families)\n";
  emit(g, classification_to_json(out), text);
  return c.matches_expected ? 0 : 1;
}

int cmd_replay(const Globals& g, const std::string& name) {
  std::vector<std::string> names = name == "all" ? replay_names() : std::vector<std::string>{name};
  Json arr = Json::array();
  std::string text;
  bool ok = true;
  for (const auto& n : names) {
    ReplayReport r = replay_lemma(n);
    ok = ok && r.passed;
    arr.push_back(replay_to_json(r));
    text += (r.passed ? "PASS " : "FAIL ") + n + " (" + std::to_string(r.cases.size()) + " cases): " + r.claim + "\n";
  }
  emit(g, name == "all" ? arr : arr[0], text);
  return ok ? 0 : 1;
}

int cmd_suite(const Globals& g, int criterion, std::uint64_t seed) {
  Json arr = Json::array();
  std::string text;
  bool ok = true;
  for (int id = 1; id <= kCriteria; ++id) {
    if (criterion && id != criterion) continue;
    CriterionResult r = run_criterion(id, seed);
    ok = ok && r.passed;
    arr.push_back(criterion_to_json(r));
    text += std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + " " + r.name + ": " + r.summary() + "\n";
  }
  emit(g, arr, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional Hopf algebras, comodule algebras and their exactness"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--field", g.field, "Cyclotomic order n of the base field Q(zeta_n)")->check(CLI::Range(1, 64));
  app.add_option("--adjoin-sqrt", g.adjoin, "Adjoin the square root of this scalar literal");

  std::string ref, ref2, expect, kind, name = "all";
  bool as_comodalg = false;
  std::optional<int> n2;
  int criterion = 0;
  std::uint64_t seed = 1;

  auto* verify = app.add_subcommand("verify", "Check Hopf or comodule algebra axioms");
  verify->add_option("input", ref, "builtin:kp | builtin:klein4 | builtin:sweedler | catalog:NAME | FILE")->required();
  verify->add_flag("--comodule-algebra", as_comodalg, "Treat a builtin Hopf algebra as its regular comodule algebra");

  auto* exact = app.add_subcommand("check-exact", "Decide AM-exactness");
  exact->add_option("input", ref)->required();
  exact->add_option("--expect", expect, "Exit 1 unless the verdict matches")->check(CLI::IsMember({"exact", "not-exact"}));

  auto* cat = app.add_subcommand("catalog", "List the catalog, or dump one entry as comodalg.v1");
  cat->add_option("name", ref);

  auto* endp = app.add_subcommand("endp", "End_B(P) as an H-comodule algebra");
  endp->add_option("input", ref, "V:kpsi | V:ga_x | comodule algebra (its regular module)")->required();

  auto* fp = app.add_subcommand("fingerprint", "Compare fusion fingerprints");
  fp->add_option("a", ref)->required();
  fp->add_option("b", ref2)->required();

  auto* cls = app.add_subcommand("classify", "Extensions with n2 <= 1");
  cls->add_option("--kind", kind, "trivial | ga_x | ga_y | ga_xy | ga_K | kpsi");
  cls->add_option("--n2", n2)->check(CLI::Range(0, 1));

  auto* rep = app.add_subcommand("replay", "Replay a symbolic argument");
  rep->add_option("name", name, "Replay name or 'all'");

  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  suite->add_option("--criterion", criterion)->check(CLI::Range(1, kCriteria));
  suite->add_option("--seed", seed, "Seed for the random property inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    g.resolved = make_field(g);
    if (*verify) return cmd_verify(g, ref, as_comodalg);
    if (*exact) return cmd_check_exact(g, ref, expect);
    if (*cat) return cmd_catalog(g, ref);
    if (*endp) return cmd_endp(g, ref);
    if (*fp) return cmd_fingerprint(g, ref, ref2);
    if (*cls) return cmd_classify(g, kind, n2);
    if (*rep) return cmd_replay(g, name);
    if (*suite) return cmd_suite(g, criterion, seed);
  } catch (const NeedsExtension& e) {
    std::cerr << "error: " << e.what() << "; rerun with --adjoin-sqrt\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const ErrorKind k = e.kind();
    return k == ErrorKind::ParseError || k == ErrorKind::InvalidInput || k == ErrorKind::InvalidKind ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
