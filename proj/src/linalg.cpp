#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <deque>

namespace hk {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector sum");
  Vec out = a;
  for (size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector difference");
  Vec out = a;
  for (size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) out[i] -= b[i];
  return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec out(v.size());
  if (c.is_zero()) return out;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = c * v[i];
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Vec coerce(const Vec& v, const Field& f) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.coerce(f));
  return out;
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, size_t rows) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Matrix Matrix::unflatten(const Vec& v, size_t rows, size_t cols) {
  require(v.size() == rows * cols, "unflatten");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Vec Matrix::row(size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::col(size_t j) const {
  Vec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
  require(v.size() == cols_, "set_row");
  std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

void Matrix::set_col(size_t j, const Vec& v) {
  require(v.size() == rows_, "set_col");
  for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vec> Matrix::col_list() const {
  std::vector<Vec> out;
  for (size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "matrix product");
  Matrix out(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  require(cols_ == v.size(), "matrix-vector product");
  Vec out(rows_);
  for (size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) out[i] += a * v[k];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix out(rows_, cols_);
  if (c.is_zero()) return out;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!data_[i].is_zero()) out.data_[i] = data_[i] * c;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

Matrix Matrix::coerce(const Field& f) const {
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].coerce(f);
  return out;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (size_t i = 0; i < rows_; ++i) s += (i ? ", " : "") + vec_str(row(i));
  return s + "]";
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "hstack");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "vstack");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i) out.set_row(i, a.row(i));
  for (size_t i = 0; i < b.rows(); ++i) out.set_row(a.rows() + i, b.row(i));
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& r = e.reduced;
  size_t row = 0;
  for (size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    size_t piv = row;
    while (piv < r.rows() && r(piv, c).is_zero()) ++piv;
    if (piv == r.rows()) continue;
    if (piv != row) {
      Vec tmp = r.row(piv);
      r.set_row(piv, r.row(row));
      r.set_row(row, tmp);
    }
    Scalar inv = r(row, c).inv();
    for (size_t j = c; j < r.cols(); ++j)
      if (!r(row, j).is_zero()) r(row, j) *= inv;
    for (size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c).is_zero()) continue;
      Scalar fac = r(i, c);
      for (size_t j = c; j < r.cols(); ++j)
        if (!r(row, j).is_zero()) r(i, j) -= fac * r(row, j);
    }
    e.pivots.push_back(c);
    ++row;
  }
  return e;
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  require(m.rows() == rhs.size(), "solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  Echelon e = rref(aug);
  Vec x(m.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.is_square(), "inverse of non-square matrix");
  const size_t n = m.rows();
  Echelon e = rref(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(size_t ambient) {
  Subspace s(ambient);
  for (size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vec(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(rows_, ambient_); }
Matrix Subspace::basis_columns() const { return Matrix::from_cols(rows_, ambient_); }

Vec Subspace::reduce(const Vec& v) const {
  require(v.size() == ambient_, "subspace reduce");
  Vec out = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (c.is_zero()) continue;
    const Vec& r = rows_[i];
    for (size_t j = pivots_[i]; j < ambient_; ++j)
      if (!r[j].is_zero()) out[j] -= c * r[j];
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  require(o.ambient_ == ambient_, "subspace containment");
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw Error(ErrorKind::DimensionMismatch, "vector not in subspace");
  Vec c(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Matrix Subspace::annihilator() const {
  Subspace k = kernel(basis_matrix());
  return k.basis_matrix();
}

Subspace Subspace::pivot_complement() const {
  Subspace s(ambient_);
  size_t p = 0;
  for (size_t j = 0; j < ambient_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    s.rows_.push_back(unit_vec(ambient_, j));
    s.pivots_.push_back(j);
  }
  return s;
}

bool Subspace::insert(const Vec& v) {
  Vec w = reduce(v);
  size_t q = 0;
  while (q < ambient_ && w[q].is_zero()) ++q;
  if (q == ambient_) return false;
  Scalar inv = w[q].inv();
  for (size_t j = q; j < ambient_; ++j)
    if (!w[j].is_zero()) w[j] *= inv;
  for (auto& r : rows_) {
    const Scalar c = r[q];
    if (c.is_zero()) continue;
    for (size_t j = q; j < ambient_; ++j)
      if (!w[j].is_zero()) r[j] -= c * w[j];
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), q);
  size_t pos = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, q);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
  require(o.ambient_ == ambient_, "subspace sum");
  Subspace s = *this;
  for (const auto& r : o.rows_) s.insert(r);
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  require(o.ambient_ == ambient_, "subspace intersection");
  return kernel(vstack(annihilator(), o.annihilator()));
}

bool Subspace::operator==(const Subspace& o) const {
  if (ambient_ != o.ambient_ || pivots_ != o.pivots_) return false;
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < ambient_; ++j)
      if (rows_[i][j] != o.rows_[i][j]) return false;
  return true;
}

std::string Subspace::str() const {
  std::string s = "span{";
  for (size_t i = 0; i < rows_.size(); ++i) s += (i ? ", " : "") + vec_str(rows_[i]);
  return s + "}";
}

Subspace kernel(const Matrix& m) {
  Echelon e = rref(m);
  const size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Scalar(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const Matrix& m) { return Subspace::span(m.rows(), m.col_list()); }

Subspace preimage(const Matrix& map, const Subspace& target) {
  require(map.rows() == target.ambient(), "preimage codomain");
  Matrix ann = target.annihilator();
  if (ann.rows() == 0) return Subspace::full(map.cols());
  return kernel(ann * map);
}

Subspace apply(const Matrix& map, const Subspace& x) {
  require(map.cols() == x.ambient(), "apply map to subspace");
  std::vector<Vec> imgs;
  for (const auto& b : x.basis()) imgs.push_back(map * b);
  return Subspace::span(map.rows(), imgs);
}

Subspace spin(const Subspace& start, const std::vector<Matrix>& ops) {
  for (const auto& op : ops) require(op.rows() == start.ambient() && op.cols() == start.ambient(), "spin operator");
  Subspace s = start;
  std::deque<Vec> work(start.basis().begin(), start.basis().end());
  while (!work.empty() && s.dim() < s.ambient()) {
    Vec v = std::move(work.front());
    work.pop_front();
    for (const auto& op : ops) {
      Vec w = op * v;
      if (s.insert(w)) work.push_back(std::move(w));
    }
  }
  return s;
}

Subspace spin(size_t ambient, const std::vector<Vec>& seeds, const std::vector<Matrix>& ops) {
  return spin(Subspace::span(ambient, seeds), ops);
}

Matrix restrict_to(const Matrix& op, const Subspace& s) {
  require(op.rows() == s.ambient() && op.cols() == s.ambient(), "restrict operator");
  Matrix out(s.dim(), s.dim());
  for (size_t j = 0; j < s.dim(); ++j) out.set_col(j, s.coordinates(op * s.basis()[j]));
  return out;
}

}  // namespace hk
