#pragma once

// Equivariant endomorphism algebras End_B(P), colinear isomorphism search,
// simple modules and fusion fingerprints.

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/equivariant.hpp"

namespace hk {

// First field found among the structure constants, or Q(i).
Field field_of(const ComoduleAlgebra& a);

// S = End_B(P) with its basis of operators on P (operators[0] = id).
struct EndAlgebra {
  ComoduleAlgebra algebra;
  std::vector<Matrix> operators;
};

EndAlgebra end_b_operators(const EquivariantModule& p, const std::string& name = "");
ComoduleAlgebra end_b(const EquivariantModule& p, const std::string& name = "");

// P = B with lambda_P = (g (x) 1) lambda_B for a grouplike g.
EquivariantModule shifted_regular_module(const ComoduleAlgebra& b, const Vec& g);
EquivariantModule direct_sum(const EquivariantModule& p, const EquivariantModule& q);

// A basis m_1..m_r of P with P = (+) m_k B, when the greedy search finds one.
std::optional<std::vector<Vec>> free_basis(const EquivariantModule& p);

// Colinear maps A -> B, flattened row-major (dim B x dim A).
Subspace colinear_maps(const Comodule& a, const Comodule& b);
bool is_cosemisimple(const HopfAlgebra& h);

struct IsoSearch {
  std::optional<Matrix> iso;  // dim b x dim a
  std::string reason;
  bool exhaustive = true;  // false: "none" is not a proof
  std::vector<Scalar> needs_sqrt;  // square roots the search could not take
};

IsoSearch colinear_iso_search(const ComoduleAlgebra& a, const ComoduleAlgebra& b);

// Retries over field(sqrt d) for the first reported d, up to `max_roots` times.
struct ExtendedIsoSearch {
  IsoSearch search;
  Field field;
  std::vector<Scalar> adjoined;
};
ExtendedIsoSearch colinear_iso_search_extending(const ComoduleAlgebra& a, const ComoduleAlgebra& b, size_t max_roots = 1);

// Left modules: action[i] is the matrix of the basis element i.
struct SimpleModule {
  std::string label;
  size_t dim = 0;
  std::vector<Matrix> action;
};

size_t hom_dim(const std::vector<Matrix>& from, const std::vector<Matrix>& to);
std::vector<SimpleModule> simple_modules(const Algebra& a);
std::vector<SimpleModule> simple_modules(const ComoduleAlgebra& a);
// Sorted dimensions of the simple modules.
std::vector<size_t> semisimple_type(const Algebra& a);
// Split semisimple algebras are Morita equivalent iff they have equally many simples.
bool classically_morita_equivalent(const Algebra& a, const Algebra& b);

// k_zeta (z -> zeta, x, y -> zeta^2) for zeta = 1, i, -1, -i, then W.
std::vector<SimpleModule> kp_simple_modules(const Field& f);

struct FusionFingerprint {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<size_t> row_dims, col_dims;
  std::vector<std::vector<std::vector<std::string>>> cells;  // sorted label multisets
};

FusionFingerprint fusion_fingerprint(const ComoduleAlgebra& a);

struct Distinction {
  bool distinguished = false;
  std::string explanation;
};

// Necessary condition only: not distinguished does not mean equivalent.
Distinction fingerprint_distinguishes(const FusionFingerprint& a, const FusionFingerprint& b);

struct GradedEnd {
  EndAlgebra end;
  LoewyGrading grading;
  size_t degree0_dim = 0;
  size_t end_b0_dim = 0;
  bool matches_loewy = false;
  bool degree0_restriction_iso = false;  // T -> T|P(0) is an isomorphism S(0) -> End_{B(0)}(P(0))
  std::vector<size_t> hom_dims;  // dim Hom_{B(0)}(P(0), P(n))
};

// P graded by p.grading (or by its Loewy filtration when absent).
GradedEnd loewy_graded_end(const EquivariantModule& p, const HopfFiltration& hf);

}  // namespace hk
