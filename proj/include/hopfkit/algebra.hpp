#pragma once

// Finite-dimensional associative unital algebras by structure constants.

#include <array>
#include <string>
#include <vector>

#include "hopfkit/linalg.hpp"

namespace hk {

struct Algebra {
  size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Scalar> mult;  // e_i e_j = sum_k mult[(i*dim + j)*dim + k] e_k
  Vec unit;

  Algebra() = default;
  Algebra(size_t n, std::vector<std::string> names);

  Scalar& m(size_t i, size_t j, size_t k) { return mult[(i * dim + j) * dim + k]; }
  const Scalar& m(size_t i, size_t j, size_t k) const { return mult[(i * dim + j) * dim + k]; }
  void set_product(size_t i, size_t j, const Vec& v);

  Vec basis_product(size_t i, size_t j) const;
  Vec product(const Vec& a, const Vec& b) const;
  Vec basis(size_t i) const { return unit_vec(dim, i); }
  size_t index_of(const std::string& label) const;
  // the multiplication map A (x) A -> A as a dim x dim^2 matrix
  Matrix mult_map() const;

  Algebra coerce(const Field& f) const;
};

struct AlgebraReport {
  bool associative = true;
  bool unital = true;
  std::vector<std::array<size_t, 3>> failing_triples;
  std::vector<size_t> unit_failures;
  bool ok() const { return associative && unital; }
};

AlgebraReport check_algebra(const Algebra& a);

enum class Side { Left, Right };
Matrix mult_operator(const Algebra& a, Side side, const Vec& elem);

// Span of all products of the generators together with the identity, as a
// subspace of the flattened n^2-dimensional operator space.
Subspace generated_operator_algebra(const std::vector<Matrix>& ops);
Subspace generated_operator_algebra(size_t n, const std::vector<Matrix>& ops);

// {x : Tr(L_x L_y) = 0 for all y}
Subspace trace_radical(const Algebra& a);
Algebra direct_sum(const Algebra& a, const Algebra& b);
Subspace center(const Algebra& a);

// span{xy : x in X, y in Y}
Subspace product_space(const Algebra& a, const Subspace& x, const Subspace& y);
bool is_subalgebra(const Algebra& a, const Subspace& s);
// Structure constants of a subalgebra in the canonical basis of s.
Algebra sub_algebra(const Algebra& a, const Subspace& s, std::vector<std::string> labels = {});
// f is b.dim x a.dim; checks f(xy) = f(x)f(y) on basis pairs and f(1) = 1.
bool is_algebra_map(const Algebra& a, const Algebra& b, const Matrix& f);
// Transport structure constants along an invertible change of basis:
// columns of `basis` are the new basis vectors written in the old basis.
Algebra change_basis(const Algebra& a, const Matrix& basis, std::vector<std::string> labels = {});

}  // namespace hk
