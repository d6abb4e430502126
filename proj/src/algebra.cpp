#include "hopfkit/algebra.hpp"

namespace hk {

Algebra::Algebra(size_t n, std::vector<std::string> names)
    : dim(n), labels(std::move(names)), mult(n * n * n), unit(n) {
  if (labels.empty())
    for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  if (labels.size() != n) throw Error(ErrorKind::DimensionMismatch, "label count");
}

void Algebra::set_product(size_t i, size_t j, const Vec& v) {
  if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "product vector");
  for (size_t k = 0; k < dim; ++k) m(i, j, k) = v[k];
}

Vec Algebra::basis_product(size_t i, size_t j) const {
  return Vec(mult.begin() + static_cast<std::ptrdiff_t>((i * dim + j) * dim),
             mult.begin() + static_cast<std::ptrdiff_t>((i * dim + j + 1) * dim));
}

Vec Algebra::product(const Vec& a, const Vec& b) const {
  if (a.size() != dim || b.size() != dim) throw Error(ErrorKind::DimensionMismatch, "algebra product");
  Vec out(dim);
  for (size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (size_t k = 0; k < dim; ++k)
        if (!m(i, j, k).is_zero()) out[k] += c * m(i, j, k);
    }
  }
  return out;
}

size_t Algebra::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw Error(ErrorKind::InvalidInput, "no basis element named " + label);
}

Matrix Algebra::mult_map() const {
  Matrix out(dim, dim * dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) out(k, i * dim + j) = m(i, j, k);
  return out;
}

Algebra Algebra::coerce(const Field& f) const {
  Algebra a = *this;
  for (auto& x : a.mult) x = x.coerce(f);
  a.unit = hk::coerce(unit, f);
  return a;
}

AlgebraReport check_algebra(const Algebra& a) {
  AlgebraReport r;
  const size_t n = a.dim;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec ij = a.basis_product(i, j);
      for (size_t k = 0; k < n; ++k) {
        Vec left = a.product(ij, a.basis(k));
        Vec right = a.product(a.basis(i), a.basis_product(j, k));
        if (left != right) {
          r.associative = false;
          r.failing_triples.push_back({i, j, k});
        }
      }
    }
  for (size_t i = 0; i < n; ++i) {
    Vec e = a.basis(i);
    if (a.product(a.unit, e) != e || a.product(e, a.unit) != e) {
      r.unital = false;
      r.unit_failures.push_back(i);
    }
  }
  return r;
}

Matrix mult_operator(const Algebra& a, Side side, const Vec& elem) {
  if (elem.size() != a.dim) throw Error(ErrorKind::DimensionMismatch, "mult_operator element");
  Matrix out(a.dim, a.dim);
  for (size_t j = 0; j < a.dim; ++j) {
    Vec e = a.basis(j);
    out.set_col(j, side == Side::Left ? a.product(elem, e) : a.product(e, elem));
  }
  return out;
}

Subspace generated_operator_algebra(size_t n, const std::vector<Matrix>& ops) {
  for (const auto& g : ops)
    if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::DimensionMismatch, "operator size");
  Subspace span(n * n);
  std::vector<Matrix> work{Matrix::identity(n)};
  span.insert(work.front().flatten());
  for (size_t w = 0; w < work.size() && span.dim() < n * n; ++w) {
    for (const auto& g : ops) {
      Matrix p = work[w] * g;
      if (span.insert(p.flatten())) work.push_back(std::move(p));
    }
  }
  return span;
}

Subspace generated_operator_algebra(const std::vector<Matrix>& ops) {
  if (ops.empty()) throw Error(ErrorKind::DimensionMismatch, "no operators given");
  return generated_operator_algebra(ops.front().rows(), ops);
}

Subspace trace_radical(const Algebra& a) {
  if (!check_algebra(a).ok()) throw Error(ErrorKind::NotAnAlgebra, "trace_radical needs an associative unital algebra");
  const size_t n = a.dim;
  std::vector<Matrix> L;
  for (size_t i = 0; i < n; ++i) L.push_back(mult_operator(a, Side::Left, a.basis(i)));
  Matrix gram(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      Scalar t;
      for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
          if (!L[i](p, q).is_zero() && !L[j](q, p).is_zero()) t += L[i](p, q) * L[j](q, p);
      gram(i, j) = t;
      gram(j, i) = t;
    }
  return kernel(gram);
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels) labels.push_back(l + "_1");
  for (const auto& l : b.labels) labels.push_back(l + "_2");
  Algebra s(a.dim + b.dim, labels);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (size_t k = 0; k < a.dim; ++k) s.m(i, j, k) = a.m(i, j, k);
  const size_t o = a.dim;
  for (size_t i = 0; i < b.dim; ++i)
    for (size_t j = 0; j < b.dim; ++j)
      for (size_t k = 0; k < b.dim; ++k) s.m(o + i, o + j, o + k) = b.m(i, j, k);
  for (size_t i = 0; i < a.dim; ++i) s.unit[i] = a.unit[i];
  for (size_t i = 0; i < b.dim; ++i) s.unit[o + i] = b.unit[i];
  // field compatibility of the two halves
  if (!a.unit.empty() && !b.unit.empty()) (void)(a.unit[0] + b.unit[0]);
  return s;
}

Subspace center(const Algebra& a) {
  const size_t n = a.dim;
  // x central iff x e_j - e_j x = 0 for every j
  Matrix eqs(n * n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) eqs(j * n + k, i) = a.m(i, j, k) - a.m(j, i, k);
  return kernel(eqs);
}

Subspace product_space(const Algebra& a, const Subspace& x, const Subspace& y) {
  Subspace out(a.dim);
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) out.insert(a.product(u, v));
  return out;
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  return s.contains(a.unit) && s.contains(product_space(a, s, s));
}

Algebra sub_algebra(const Algebra& a, const Subspace& s, std::vector<std::string> labels) {
  if (!is_subalgebra(a, s)) throw Error(ErrorKind::NotAnAlgebra, "subspace is not a subalgebra");
  const size_t d = s.dim();
  Algebra out(d, std::move(labels));
  const auto& b = s.basis();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) out.set_product(i, j, s.coordinates(a.product(b[i], b[j])));
  out.unit = s.coordinates(a.unit);
  return out;
}

bool is_algebra_map(const Algebra& a, const Algebra& b, const Matrix& f) {
  if (f.rows() != b.dim || f.cols() != a.dim) throw Error(ErrorKind::DimensionMismatch, "algebra map shape");
  if (f * a.unit != b.unit) return false;
  std::vector<Vec> img = f.col_list();
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      if (f * a.basis_product(i, j) != b.product(img[i], img[j])) return false;
  return true;
}

Algebra change_basis(const Algebra& a, const Matrix& basis, std::vector<std::string> labels) {
  auto inv = inverse(basis);
  if (!inv) throw Error(ErrorKind::DimensionMismatch, "change of basis is singular");
  Algebra out(a.dim, std::move(labels));
  std::vector<Vec> cols = basis.col_list();
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) out.set_product(i, j, *inv * a.product(cols[i], cols[j]));
  out.unit = *inv * a.unit;
  return out;
}

}  // namespace hk
