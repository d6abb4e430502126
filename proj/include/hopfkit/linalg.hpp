#pragma once

// Dense exact linear algebra. Vectors are columns; a Matrix acts on the left.
// Tensor indices are flattened left factor major: (i1, i2) -> i1 * dim2 + i2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/field.hpp"

namespace hk {

using Vec = std::vector<Scalar>;

Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
Vec kron(const Vec& a, const Vec& b);
Vec coerce(const Vec& v, const Field& f);
std::string vec_str(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
  static Matrix from_cols(const std::vector<Vec>& cols, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  void set_row(size_t i, const Vec& v);
  void set_col(size_t j, const Vec& v);
  std::vector<Vec> row_list() const;
  std::vector<Vec> col_list() const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  // flatten row-major into a vector of length rows*cols
  Vec flatten() const { return data_; }
  static Matrix unflatten(const Vec& v, size_t rows, size_t cols);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix coerce(const Field& f) const;
  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;               // full RREF, same shape as input
  std::vector<size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
size_t rank(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);
std::optional<Matrix> inverse(const Matrix& m);

// Canonical subspace: basis rows in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : ambient_(ambient) {}

  static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(size_t ambient);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const& { return rows_; }
  std::vector<Vec> basis() && { return std::move(rows_); }
  const std::vector<size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const;  // dim x ambient
  Matrix basis_columns() const; // ambient x dim

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  Vec reduce(const Vec& v) const;       // remainder, zero at every pivot column
  Vec coordinates(const Vec& v) const;  // coefficients in basis(); requires contains(v)
  Matrix annihilator() const;           // rows cut out the subspace
  // Complement spanned by standard basis vectors at non-pivot columns.
  Subspace pivot_complement() const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Incremental insertion keeping the canonical form; returns true when the
  // dimension grew.
  bool insert(const Vec& v);

  std::string str() const;

 private:
  size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace preimage(const Matrix& map, const Subspace& target);
Subspace apply(const Matrix& map, const Subspace& x);

// Smallest subspace containing the seeds and invariant under every operator.
Subspace spin(size_t ambient, const std::vector<Vec>& seeds, const std::vector<Matrix>& ops);
Subspace spin(const Subspace& start, const std::vector<Matrix>& ops);

// Matrix of the restriction of `op` to an invariant subspace, in the
// coordinates of the canonical basis.
Matrix restrict_to(const Matrix& op, const Subspace& s);

}  // namespace hk
