#pragma once

// Left comodules and comodule algebras over a HopfAlgebra.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hk {

struct Comodule {
  HopfPtr hopf;
  size_t dim = 0;
  std::vector<std::string> labels;
  Matrix coaction;  // (dimH * dim) x dim, column i = lambda(a_i)

  Vec lambda(const Vec& v) const { return coaction * v; }
  // (b_h^* (x) 1) lambda as a dim x dim matrix
  Matrix slice(size_t h) const;
  Matrix slice(const Vec& functional) const;
};

struct ComoduleAlgebra {
  std::string name;
  Algebra alg;
  HopfPtr hopf;
  Matrix coaction;

  size_t dim() const { return alg.dim; }
  Vec lambda(const Vec& v) const { return coaction * v; }
  Comodule comodule() const { return Comodule{hopf, alg.dim, alg.labels, coaction}; }
  Matrix slice(size_t h) const { return comodule().slice(h); }
  ComoduleAlgebra coerce(const Field& f) const;
};

struct ComoduleReport {
  bool coassoc = true;
  bool counit = true;
  std::vector<std::string> failures;
  bool ok() const { return coassoc && counit; }
};

struct ComoduleAlgebraReport {
  bool algebra = true;
  bool coassoc = true;
  bool counit = true;
  bool multiplicative = true;
  bool unit_preserved = true;
  std::vector<std::string> failures;
  bool ok() const { return algebra && coassoc && counit && multiplicative && unit_preserved; }
};

ComoduleReport check_comodule(const Comodule& c);
ComoduleAlgebraReport check_comodule_algebra(const ComoduleAlgebra& a);

Subspace coinvariants(const ComoduleAlgebra& a);
Subspace coinvariants(const Comodule& c);
// lambda^{-1}(C (x) A)
Subspace isotypic_part(const Comodule& a, const Subspace& c);
Subspace isotypic_part(const ComoduleAlgebra& a, const Subspace& c);
bool is_subcomodule(const Comodule& a, const Subspace& s);

// Restrict a comodule algebra to a subalgebra that is also a subcomodule.
ComoduleAlgebra sub_comodule_algebra(const ComoduleAlgebra& a, const Subspace& s, std::string name = "",
                                     std::vector<std::string> labels = {});
// Re-express along an invertible change of basis (columns = new basis).
ComoduleAlgebra change_basis(const ComoduleAlgebra& a, const Matrix& basis, std::vector<std::string> labels = {});
// Direct sum with the diagonal coaction.
ComoduleAlgebra direct_sum(const ComoduleAlgebra& a, const ComoduleAlgebra& b, std::string name = "");
// A comodule algebra over H' pushed forward along a Hopf map f: H' -> H.
ComoduleAlgebra push_forward(const ComoduleAlgebra& a, HopfPtr target, const Matrix& f);

// ---------------------------------------------------------------------------
// Decomposition over the built-in Kac-Paljutkin algebra.

bool is_kp(const HopfAlgebra& h);

struct KpDecomposition {
  std::map<std::string, Subspace> parts;  // A_g for g in {1, x, y, xy}
  Subspace a_k, a_2, v_2, w_2;
  Matrix tau;  // A -> A, zero on A_K, swaps V_2 and W_2 (paired bases)
  const ComoduleAlgebra* source = nullptr;
};

KpDecomposition kp_decompose(const ComoduleAlgebra& a);

using SignPair = std::pair<int, int>;  // (a, b) with R_x = a, L_y = b
struct MuDecomposition {
  std::map<SignPair, Subspace> v_parts;
  std::map<SignPair, Subspace> w_parts;
  Vec e_x, e_y;  // normalized grouplike-graded units (e^2 = 1)
};

MuDecomposition mu_decompose(const KpDecomposition& d);

// ---------------------------------------------------------------------------
// Loewy filtrations and gradings.

struct LoewyGrading {
  std::vector<Subspace> degrees;  // A(0), A(1), ...
  Matrix projection(size_t n) const;  // A -> A(n) in canonical coordinates (dim A(n) x dim A)
  // basis adapted to the grading, degree 0 first
  Matrix adapted_basis() const;
  std::vector<size_t> degree_of_adapted() const;
};

std::vector<Subspace> loewy_filtration(const ComoduleAlgebra& a, const HopfFiltration& filt);
LoewyGrading loewy(const ComoduleAlgebra& a, const HopfFiltration& filt);
// Grading from an increasing exhaustive filtration via pivot complements.
LoewyGrading grading_from_filtration(const std::vector<Subspace>& filt);
bool is_algebra_grading(const Algebra& a, const LoewyGrading& g);

struct GradedHopf {
  HopfAlgebra hopf;  // in the adapted basis of the grading
  LoewyGrading grading;
};
GradedHopf associated_graded_hopf(const HopfAlgebra& h, const HopfFiltration& filt);
// Associated graded comodule algebra over gr H (both in adapted bases).
ComoduleAlgebra associated_graded(const ComoduleAlgebra& a, const LoewyGrading& grading, const HopfFiltration& hfilt,
                                  HopfPtr gr_hopf = nullptr);

struct KappaResult {
  Matrix map;  // (dimH * dim A(0)) x dim A
  bool injective = false;
  bool algebra_morphism = false;
  bool comodule_morphism = false;
  Subspace kernel;
};
KappaResult kappa(const ComoduleAlgebra& a, const LoewyGrading& grading);

struct PhiResult {
  Matrix map;  // dimH x dim A
  bool injective = false;
  bool comodule_morphism = false;
  bool algebra_morphism = false;
  Subspace image;
};
// witness: dimH x dim A(0) matrix (coordinates of A(0) in its canonical basis)
PhiResult phi_embed(const ComoduleAlgebra& a, const LoewyGrading& grading, const Matrix& witness);

}  // namespace hk
