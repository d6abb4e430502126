#include "hopfkit/hopf.hpp"

namespace hk {

void Coalgebra::set_delta(size_t i, const Vec& flat) {
  if (flat.size() != dim * dim) throw Error(ErrorKind::DimensionMismatch, "comultiplication vector");
  for (size_t j = 0; j < dim; ++j)
    for (size_t k = 0; k < dim; ++k) d(i, j, k) = flat[j * dim + k];
}

Matrix Coalgebra::delta_matrix() const {
  Matrix out(dim * dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) out(j * dim + k, i) = d(i, j, k);
  return out;
}

Matrix Coalgebra::counit_row() const { return Matrix::from_rows({counit}, dim); }

Scalar HopfAlgebra::eps(const Vec& v) const {
  Scalar s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero() && !coalg.counit[i].is_zero()) s += v[i] * coalg.counit[i];
  return s;
}

HopfAlgebra HopfAlgebra::coerce(const Field& f) const {
  HopfAlgebra h = *this;
  h.alg = alg.coerce(f);
  for (auto& x : h.coalg.comult) x = x.coerce(f);
  h.coalg.counit = hk::coerce(coalg.counit, f);
  h.antipode = antipode.coerce(f);
  return h;
}

Vec tensor_product(const Algebra& a, const Algebra& b, const Vec& x, const Vec& y) {
  const size_t n = a.dim, m = b.dim;
  if (x.size() != n * m || y.size() != n * m) throw Error(ErrorKind::DimensionMismatch, "tensor product");
  Vec out(n * m);
  for (size_t p = 0; p < n * m; ++p) {
    if (x[p].is_zero()) continue;
    const size_t i1 = p / m, i2 = p % m;
    for (size_t q = 0; q < n * m; ++q) {
      if (y[q].is_zero()) continue;
      const size_t j1 = q / m, j2 = q % m;
      Scalar c = x[p] * y[q];
      for (size_t k1 = 0; k1 < n; ++k1) {
        const Scalar& u = a.m(i1, j1, k1);
        if (u.is_zero()) continue;
        Scalar cu = c * u;
        for (size_t k2 = 0; k2 < m; ++k2) {
          const Scalar& w = b.m(i2, j2, k2);
          if (!w.is_zero()) out[k1 * m + k2] += cu * w;
        }
      }
    }
  }
  return out;
}

Subspace tensor_subspace(const Subspace& x, const Subspace& y) {
  Subspace out(x.ambient() * y.ambient());
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) out.insert(kron(u, v));
  return out;
}

Matrix swap_matrix(size_t m, size_t n) {
  Matrix s(n * m, m * n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) s(j * m + i, i * n + j) = Scalar(1);
  return s;
}

HopfReport check_hopf(const HopfAlgebra& h) {
  HopfReport r;
  const size_t n = h.dim();
  const Algebra& a = h.alg;
  AlgebraReport ar = check_algebra(a);
  r.associative = ar.associative;
  r.unital = ar.unital;
  for (const auto& t : ar.failing_triples)
    r.failures.push_back("associativity at (" + a.labels[t[0]] + "," + a.labels[t[1]] + "," + a.labels[t[2]] + ")");
  for (size_t i : ar.unit_failures) r.failures.push_back("unit at " + a.labels[i]);

  const Matrix D = h.coalg.delta_matrix();
  const Matrix I = Matrix::identity(n);
  const Matrix E = h.coalg.counit_row();
  Matrix lhs = kron(D, I) * D, rhs = kron(I, D) * D;
  Matrix el = kron(E, I) * D, er = kron(I, E) * D;
  for (size_t i = 0; i < n; ++i) {
    if (lhs.col(i) != rhs.col(i)) {
      r.coassoc = false;
      r.failures.push_back("coassociativity at " + a.labels[i]);
    }
    if (el.col(i) != I.col(i) || er.col(i) != I.col(i)) {
      r.counit = false;
      r.failures.push_back("counit at " + a.labels[i]);
    }
  }

  std::vector<Vec> dcols = D.col_list();
  if (D * a.unit != kron(a.unit, a.unit)) {
    r.delta_is_algebra_map = false;
    r.failures.push_back("Delta(1) != 1 (x) 1");
  }
  if (h.eps(a.unit) != Scalar(1)) {
    r.eps_is_algebra_map = false;
    r.failures.push_back("eps(1) != 1");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec prod = a.basis_product(i, j);
      if (D * prod != tensor_product(a, a, dcols[i], dcols[j])) {
        r.delta_is_algebra_map = false;
        r.failures.push_back("Delta not multiplicative at (" + a.labels[i] + "," + a.labels[j] + ")");
      }
      if (h.eps(prod) != h.coalg.counit[i] * h.coalg.counit[j]) {
        r.eps_is_algebra_map = false;
        r.failures.push_back("eps not multiplicative at (" + a.labels[i] + "," + a.labels[j] + ")");
      }
    }

  const Matrix M = a.mult_map();
  const Matrix& S = h.antipode;
  if (S.rows() != n || S.cols() != n) throw Error(ErrorKind::DimensionMismatch, "antipode shape");
  Matrix left = M * kron(S, I) * D, right = M * kron(I, S) * D;
  for (size_t i = 0; i < n; ++i) {
    Vec target = h.coalg.counit[i] * a.unit;
    if (left.col(i) != target || right.col(i) != target) {
      r.antipode_axiom = false;
      r.failures.push_back("antipode axiom at " + a.labels[i]);
    }
  }
  return r;
}

AntipodeProperties check_antipode_properties(const HopfAlgebra& h) {
  AntipodeProperties p;
  const size_t n = h.dim();
  const Matrix& S = h.antipode;
  const Matrix D = h.coalg.delta_matrix();
  for (size_t i = 0; i < n; ++i)
    if (h.eps(S.col(i)) != h.coalg.counit[i]) p.counit_preserved = false;
  p.unit_fixed = S * h.alg.unit == h.alg.unit;
  p.anti_coalgebra = D * S == kron(S, S) * swap_matrix(n, n) * D;
  return p;
}

bool is_grouplike(const HopfAlgebra& h, const Vec& g) {
  if (g.size() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "grouplike candidate");
  return h.eps(g) == Scalar(1) && h.delta(g) == kron(g, g);
}

Matrix antipode_inverse(const HopfAlgebra& h) {
  auto inv = inverse(h.antipode);
  if (!inv) throw Error(ErrorKind::SingularAntipode, "antipode is not invertible");
  return *inv;
}

Subspace wedge(const HopfAlgebra& h, const Subspace& x, const Subspace& y) {
  const size_t n = h.dim();
  Subspace full = Subspace::full(n);
  Subspace target = tensor_subspace(x, full) + tensor_subspace(full, y);
  return preimage(h.coalg.delta_matrix(), target);
}

bool is_subcoalgebra(const HopfAlgebra& h, const Subspace& c) {
  Subspace cc = tensor_subspace(c, c);
  Matrix D = h.coalg.delta_matrix();
  for (const auto& b : c.basis())
    if (!cc.contains(D * b)) return false;
  return true;
}

bool is_left_coideal(const HopfAlgebra& h, const Subspace& c) {
  Subspace hc = tensor_subspace(Subspace::full(h.dim()), c);
  Matrix D = h.coalg.delta_matrix();
  for (const auto& b : c.basis())
    if (!hc.contains(D * b)) return false;
  return true;
}

HopfFiltration coradical_filtration(const HopfAlgebra& h, const Subspace& c0) {
  if (!is_subcoalgebra(h, c0)) throw Error(ErrorKind::NotASubcoalgebra, "C_0 is not a subcoalgebra");
  HopfFiltration f;
  f.levels.push_back(c0);
  for (;;) {
    Subspace next = wedge(h, c0, f.levels.back());
    if (next.dim() == f.levels.back().dim()) break;
    f.levels.push_back(next);
  }
  return f;
}

FiltrationReport check_filtration(const HopfAlgebra& h, const HopfFiltration& f) {
  FiltrationReport r;
  const size_t n = h.dim();
  const size_t L = f.levels.size();
  for (size_t k = 1; k < L; ++k)
    if (!f.levels[k].contains(f.levels[k - 1])) r.increasing = false;
  r.exhaustive = L > 0 && f.levels.back().dim() == n;
  Matrix D = h.coalg.delta_matrix();
  for (size_t k = 0; k < L; ++k) {
    Subspace target(n * n);
    for (size_t i = 0; i <= k; ++i) target = target + tensor_subspace(f.at(i), f.at(k - i));
    for (const auto& b : f.levels[k].basis())
      if (!target.contains(D * b)) r.coalgebra_filtration = false;
  }
  for (size_t i = 0; i < L; ++i)
    for (size_t j = 0; j < L; ++j)
      if (!f.at(i + j).contains(product_space(h.alg, f.levels[i], f.levels[j]))) r.algebra_filtration = false;
  return r;
}

}  // namespace hk
