#pragma once

// Coalgebras and Hopf algebras by structure constants.

#include <memory>
#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hk {

struct Coalgebra {
  size_t dim = 0;
  std::vector<Scalar> comult;  // Delta(e_i) = sum d[(i*dim + j)*dim + k] e_j (x) e_k
  Vec counit;

  Coalgebra() = default;
  explicit Coalgebra(size_t n) : dim(n), comult(n * n * n), counit(n) {}

  Scalar& d(size_t i, size_t j, size_t k) { return comult[(i * dim + j) * dim + k]; }
  const Scalar& d(size_t i, size_t j, size_t k) const { return comult[(i * dim + j) * dim + k]; }
  void set_delta(size_t i, const Vec& flat);  // flat has length dim^2
  Matrix delta_matrix() const;                // dim^2 x dim
  Matrix counit_row() const;                  // 1 x dim
};

struct HopfAlgebra {
  std::string name;
  Algebra alg;
  Coalgebra coalg;
  Matrix antipode;  // column i is S(e_i)

  size_t dim() const { return alg.dim; }
  Vec delta(const Vec& v) const { return coalg.delta_matrix() * v; }
  Scalar eps(const Vec& v) const;
  HopfAlgebra coerce(const Field& f) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Product in A (x) B of two flattened tensors.
Vec tensor_product(const Algebra& a, const Algebra& b, const Vec& x, const Vec& y);
// span of u (x) v for u in x, v in y
Subspace tensor_subspace(const Subspace& x, const Subspace& y);
// Linear map swapping tensor factors of dims (m, n) -> (n, m).
Matrix swap_matrix(size_t m, size_t n);

struct HopfReport {
  bool associative = true;
  bool unital = true;
  bool coassoc = true;
  bool counit = true;
  bool delta_is_algebra_map = true;
  bool eps_is_algebra_map = true;
  bool antipode_axiom = true;
  std::vector<std::string> failures;
  bool ok() const {
    return associative && unital && coassoc && counit && delta_is_algebra_map && eps_is_algebra_map &&
           antipode_axiom;
  }
};

HopfReport check_hopf(const HopfAlgebra& h);

// eps o S = eps, S(1) = 1, Delta o S = (S (x) S) o swap o Delta
struct AntipodeProperties {
  bool counit_preserved = true;
  bool unit_fixed = true;
  bool anti_coalgebra = true;
  bool ok() const { return counit_preserved && unit_fixed && anti_coalgebra; }
};
AntipodeProperties check_antipode_properties(const HopfAlgebra& h);

bool is_grouplike(const HopfAlgebra& h, const Vec& g);
Matrix antipode_inverse(const HopfAlgebra& h);

// Delta^{-1}(X (x) H + H (x) Y)
Subspace wedge(const HopfAlgebra& h, const Subspace& x, const Subspace& y);
bool is_subcoalgebra(const HopfAlgebra& h, const Subspace& c);
bool is_left_coideal(const HopfAlgebra& h, const Subspace& c);  // Delta(c) in H (x) c

struct HopfFiltration {
  std::vector<Subspace> levels;  // H_0 in H_1 in ... ; last level equals H when exhaustive
  const Subspace& at(size_t n) const { return levels[n < levels.size() ? n : levels.size() - 1]; }
};

HopfFiltration coradical_filtration(const HopfAlgebra& h, const Subspace& c0);

struct FiltrationReport {
  bool increasing = true;
  bool exhaustive = true;
  bool coalgebra_filtration = true;  // Delta(H_n) in sum_i H_i (x) H_{n-i}
  bool algebra_filtration = true;    // H_i H_j in H_{i+j}
  bool ok() const { return increasing && exhaustive && coalgebra_filtration && algebra_filtration; }
};
FiltrationReport check_filtration(const HopfAlgebra& h, const HopfFiltration& f);

}  // namespace hk
