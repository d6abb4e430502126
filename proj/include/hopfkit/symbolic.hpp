#pragma once

// A = A_K (+) A_2 over KP with indeterminate structure constants on A_2 A_2.
// A_2 = span(v_1..v_n, w_1..w_n), each pair (v_i, w_i) a copy of X in the
// sign convention of build_a_xy_gamma. The grouplike units of A_K act on A_2
// through a concrete ActionForm; only the A_2 A_2 products carry symbols, so
// every associativity constraint is linear in them.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/comodule.hpp"
#include "hopfkit/poly.hpp"

namespace hk {

enum class ExtKind { Trivial, GaX, GaY, GaXY, GaK, Kpsi };

ExtKind parse_ext_kind(const std::string& s);
const char* ext_kind_name(ExtKind k);
std::vector<ExtKind> all_ext_kinds();

// (a, b): R_x v_i = a v_i and L_y v_i = b v_i. ga_x reads only a, ga_y only b.
using SignPair = std::pair<int, int>;
bool kind_needs_signs(ExtKind k);

// Left and right multiplication by A_K basis elements on A_2 (2n x 2n),
// keyed by the A_K basis index. Index 0 (the unit) is implicit.
struct ActionForm {
  std::map<size_t, Matrix> left, right;
  std::string label;
};

struct GenericExtension {
  ExtKind kind = ExtKind::Trivial;
  size_t n2 = 0;
  std::vector<SignPair> signs;
  size_t k_dim = 1;
  std::vector<std::string> labels;
  std::vector<std::string> symbols;
  std::vector<std::vector<MultiPoly>> table;  // table[i * dim + j] = coordinates of b_i b_j
  Matrix coaction;                            // (8 dim) x dim over KP
  std::optional<ActionForm> form;             // empty: A_K admits no action on A_2

  size_t dim() const { return k_dim + 2 * n2; }
  size_t v(size_t i) const { return k_dim + i; }
  size_t w(size_t i) const { return k_dim + n2 + i; }
  const std::vector<MultiPoly>& basis_product(size_t i, size_t j) const { return table[i * dim() + j]; }
  std::vector<MultiPoly> product(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) const;
  std::vector<MultiPoly> basis_vec(size_t i) const;
};

// Candidate actions that are colinear and associative wherever no symbol occurs.
std::vector<ActionForm> action_forms(ExtKind kind, size_t n2, const std::vector<SignPair>& signs);

// One form per orbit under v_i, w_i -> s_i v_i, s_i w_i with s_i in {1, -1, i, -i}.
// The rescaling sends alpha_ij to s_i s_j alpha_ij and keeps every hypothesis
// "v_i v_j = 0" and the conclusion A_2 A_2 = 0, so replays need only these.
std::vector<ActionForm> form_orbit_representatives(const std::vector<ActionForm>& forms, size_t n2);

// Uses `form` when given, else the first of action_forms (none: form stays empty).
GenericExtension generic_extension(ExtKind kind, size_t n2, const std::vector<SignPair>& signs = {},
                                   const std::optional<ActionForm>& form = std::nullopt);

// Coefficientwise (b_i b_j) b_k - b_i (b_j b_k), monic and deduplicated. Without an
// action form the list is {1}.
std::vector<MultiPoly> associativity_constraints(const GenericExtension& g);
// lambda(b_i b_j) - lambda(b_i) lambda(b_j); empty when the parametrization is multiplicative.
std::vector<MultiPoly> coaction_defects(const GenericExtension& g);
// Coordinates of b_i b_j, read as the hypothesis b_i b_j = 0.
std::vector<MultiPoly> product_vanishes(const GenericExtension& g, size_t i, size_t j);

struct Certificate {
  MultiPoly target;
  std::vector<Scalar> coeffs;  // sum_k coeffs[k] constraints[k] == target
};

struct VanishingResult {
  bool forced = false;         // every target lies in the span of the constraints
  bool contradiction = false;  // 1 lies in the span
  std::vector<Certificate> certificates;
  std::vector<MultiPoly> unforced;
};

// Constraints and targets must be of degree <= 1 (NonlinearResidue otherwise).
VanishingResult forces_vanishing(const std::vector<MultiPoly>& constraints, const std::vector<MultiPoly>& targets);
bool verify_certificate(const std::vector<MultiPoly>& constraints, const Certificate& c);

// Every unbound symbol is set to zero.
ComoduleAlgebra specialize(const GenericExtension& g, const Assignment& values, const Field& f = default_field());

struct ReplayCase {
  std::string description;
  bool passed = false;
  std::string detail;
  VanishingResult result;
  std::vector<MultiPoly> constraints;  // what the certificates in `result` combine
};

struct ReplayReport {
  std::string name;
  std::string claim;
  bool passed = false;
  std::vector<ReplayCase> cases;
};

std::vector<std::string> replay_names();
ReplayReport replay_lemma(const std::string& name);

struct FamilyMember {
  std::vector<SignPair> signs;
  std::string form;
  Assignment values;
  ComoduleAlgebra algebra;
};

struct SolutionFamily {
  ExtKind kind = ExtKind::Trivial;
  size_t n2 = 0;
  std::string description;
  std::vector<FamilyMember> members;
};

struct Classification {
  std::vector<SolutionFamily> families;
  std::vector<std::string> empty_cases;  // kind/n2 pairs with no solution
  bool matches_expected = false;
  std::string detail;
};

Classification classify_n2_le_1();

}  // namespace hk
