#include "hopfkit/equivariant.hpp"

namespace hk {

Matrix EquivariantModule::act(const Vec& b) const {
  Matrix out(dim(), dim());
  for (size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) out = out + action.at(i) * b[i];
  return out;
}

EquivariantReport check_equivariant(const EquivariantModule& p) {
  EquivariantReport r;
  const ComoduleAlgebra& b = p.acting;
  const size_t n = p.dim(), m = b.dim();
  if (p.action.size() != m) throw Error(ErrorKind::DimensionMismatch, "one action matrix per basis element of B");
  for (const auto& a : p.action)
    if (a.rows() != n || a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "action matrix shape");
  if (!p.comodule.hopf || !b.hopf || p.comodule.hopf->dim() != b.hopf->dim())
    throw Error(ErrorKind::DimensionMismatch, "module and algebra over different Hopf algebras");

  ComoduleReport cr = check_comodule(p.comodule);
  r.comodule = cr.ok();
  r.failures.insert(r.failures.end(), cr.failures.begin(), cr.failures.end());

  if (p.act(b.alg.unit) != Matrix::identity(n)) {
    r.right_module = false;
    r.failures.push_back("unit does not act as the identity");
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (p.act(b.alg.basis_product(i, j)) != p.action[j] * p.action[i]) {
        r.right_module = false;
        r.failures.push_back("(p.b_i).b_j != p.(b_i b_j) at (" + b.alg.labels[i] + "," + b.alg.labels[j] + ")");
      }

  const HopfAlgebra& h = *b.hopf;
  const size_t nh = h.dim();
  for (size_t q = 0; q < n; ++q) {
    Vec lp = p.comodule.lambda(unit_vec(n, q));
    for (size_t i = 0; i < m; ++i) {
      Vec lb = b.coaction.col(i);
      Vec rhs(nh * n);
      for (size_t h1 = 0; h1 < nh; ++h1)
        for (size_t k = 0; k < n; ++k) {
          const Scalar& c1 = lp[h1 * n + k];
          if (c1.is_zero()) continue;
          for (size_t h2 = 0; h2 < nh; ++h2)
            for (size_t l = 0; l < m; ++l) {
              const Scalar& c2 = lb[h2 * m + l];
              if (c2.is_zero()) continue;
              Vec hh = h.alg.basis_product(h1, h2);
              Vec pb = p.action[l].col(k);
              Scalar c = c1 * c2;
              for (size_t s = 0; s < nh; ++s) {
                if (hh[s].is_zero()) continue;
                for (size_t t = 0; t < n; ++t)
                  if (!pb[t].is_zero()) rhs[s * n + t] += c * hh[s] * pb[t];
              }
            }
        }
      if (p.comodule.lambda(p.action[i].col(q)) != rhs) {
        r.compatible = false;
        r.failures.push_back("lambda(p.b) != lambda(p)lambda(b) at (" + std::to_string(q) + "," + b.alg.labels[i] + ")");
      }
    }
  }
  return r;
}

EquivariantModule regular_module(const ComoduleAlgebra& b) {
  EquivariantModule p;
  p.comodule = b.comodule();
  p.acting = b;
  for (size_t i = 0; i < b.dim(); ++i) p.action.push_back(mult_operator(b.alg, Side::Right, b.alg.basis(i)));
  return p;
}

}  // namespace hk
