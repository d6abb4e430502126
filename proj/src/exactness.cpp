#include "hopfkit/exactness.hpp"

namespace hk {

const char* method_name(SimplicityMethod m) { return m == SimplicityMethod::Burnside ? "burnside" : "witness"; }

std::vector<Matrix> costable_operators(const ComoduleAlgebra& a) {
  const size_t n = a.dim();
  const Matrix zero(n, n);
  std::vector<Matrix> ops;
  for (size_t i = 0; i < n; ++i) {
    Matrix r = mult_operator(a.alg, Side::Right, a.alg.basis(i));
    if (r != zero) ops.push_back(std::move(r));
  }
  Comodule c = a.comodule();
  for (size_t h = 0; h < a.hopf->dim(); ++h) {
    Matrix s = c.slice(h);
    if (s != zero) ops.push_back(std::move(s));
  }
  return ops;
}

bool is_costable_right_ideal(const ComoduleAlgebra& a, const Subspace& j) {
  for (const Matrix& op : costable_operators(a))
    for (const Vec& b : j.basis())
      if (!j.contains(op * b)) return false;
  return true;
}

namespace {

std::optional<Subspace> proper_spin(const Vec& seed, const std::vector<Matrix>& ops, size_t n) {
  if (is_zero(seed)) return std::nullopt;
  Subspace s = spin(n, {seed}, ops);
  if (s.dim() > 0 && s.dim() < n) return s;
  return std::nullopt;
}

// Invariant subspaces of the operator algebra E: spins of unit vectors, of kernel
// vectors of elements of E, and of eigenvectors for eigenvalues read off the diagonal.
std::optional<Subspace> find_witness(const std::vector<Matrix>& ops, const Subspace& e, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (auto s = proper_spin(unit_vec(n, i), ops, n)) return s;
  std::vector<Matrix> elems;
  for (const Vec& v : e.basis()) elems.push_back(Matrix::unflatten(v, n, n));
  const Matrix I = Matrix::identity(n);
  for (const Matrix& m : elems) {
    std::vector<Scalar> candidates{Scalar()};
    for (size_t i = 0; i < n; ++i) {
      bool seen = false;
      for (const auto& c : candidates) seen |= c == m(i, i);
      if (!seen) candidates.push_back(m(i, i));
    }
    for (const Scalar& c : candidates) {
      Subspace k = kernel(m - I * c);
      if (k.dim() == 0 || k.dim() == n) continue;
      for (const Vec& v : k.basis())
        if (auto s = proper_spin(v, ops, n)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace

SimplicityResult is_right_h_simple(const ComoduleAlgebra& a) {
  SimplicityResult r;
  const size_t n = a.dim();
  std::vector<Matrix> ops = costable_operators(a);
  Subspace e = generated_operator_algebra(n, ops);
  r.operator_algebra_dim = e.dim();
  if (e.dim() == n * n) {
    r.simple = true;
    return r;
  }
  if (auto w = find_witness(ops, e, n)) {
    if (is_costable_right_ideal(a, *w)) {
      r.witness = std::move(w);
      r.method = SimplicityMethod::Witness;
    }
  }
  return r;
}

ExactnessVerdict am_exact(const ComoduleAlgebra& a) {
  ExactnessVerdict v;
  SimplicityResult s = is_right_h_simple(a);
  v.right_h_simple = s.simple;
  v.method = s.method;
  v.witness = std::move(s.witness);
  v.operator_algebra_dim = s.operator_algebra_dim;
  v.coinvariants_dim = coinvariants(a).dim();
  v.am_exact = v.right_h_simple && v.coinvariants_dim == 1;
  return v;
}

}  // namespace hk
