#include "hopfkit/comodule.hpp"

#include <set>

#include "hopfkit/constructions.hpp"

namespace hk {

namespace {

size_t hdim(const HopfPtr& h) {
  if (!h) throw Error(ErrorKind::InvalidInput, "comodule without a Hopf algebra");
  return h->dim();
}

std::vector<std::string> labels_for(const std::vector<std::string>& old, const Subspace& s) {
  std::vector<std::string> out;
  for (size_t i = 0; i < s.dim(); ++i) {
    const Vec& b = s.basis()[i];
    size_t nz = 0, where = 0;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) {
        ++nz;
        where = j;
      }
    if (nz == 1 && b[where] == Scalar(1) && where < old.size())
      out.push_back(old[where]);
    else
      out.push_back("b" + std::to_string(i));
  }
  return out;
}

}  // namespace

Matrix Comodule::slice(size_t h) const {
  Matrix out(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) out(j, i) = coaction(h * dim + j, i);
  return out;
}

Matrix Comodule::slice(const Vec& functional) const {
  Matrix out(dim, dim);
  for (size_t h = 0; h < functional.size(); ++h)
    if (!functional[h].is_zero()) out = out + slice(h) * functional[h];
  return out;
}

ComoduleAlgebra ComoduleAlgebra::coerce(const Field& f) const {
  ComoduleAlgebra c = *this;
  c.alg = alg.coerce(f);
  c.coaction = coaction.coerce(f);
  if (hopf) c.hopf = std::make_shared<HopfAlgebra>(hopf->coerce(f));
  return c;
}

ComoduleReport check_comodule(const Comodule& c) {
  ComoduleReport r;
  const size_t nh = hdim(c.hopf), n = c.dim;
  if (c.coaction.rows() != nh * n || c.coaction.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "coaction shape");
  const Matrix D = c.hopf->coalg.delta_matrix();
  const Matrix In = Matrix::identity(n), Ih = Matrix::identity(nh);
  Matrix lhs = kron(D, In) * c.coaction;
  Matrix rhs = kron(Ih, c.coaction) * c.coaction;
  Matrix cu = kron(c.hopf->coalg.counit_row(), In) * c.coaction;
  for (size_t i = 0; i < n; ++i) {
    const std::string name = i < c.labels.size() ? c.labels[i] : std::to_string(i);
    if (lhs.col(i) != rhs.col(i)) {
      r.coassoc = false;
      r.failures.push_back("coassociativity at " + name);
    }
    if (cu.col(i) != In.col(i)) {
      r.counit = false;
      r.failures.push_back("counit at " + name);
    }
  }
  return r;
}

ComoduleAlgebraReport check_comodule_algebra(const ComoduleAlgebra& a) {
  ComoduleAlgebraReport r;
  AlgebraReport ar = check_algebra(a.alg);
  r.algebra = ar.ok();
  if (!ar.ok()) r.failures.push_back("underlying algebra fails associativity/unit checks");
  ComoduleReport cr = check_comodule(a.comodule());
  r.coassoc = cr.coassoc;
  r.counit = cr.counit;
  r.failures.insert(r.failures.end(), cr.failures.begin(), cr.failures.end());
  const HopfAlgebra& h = *a.hopf;
  const size_t n = a.dim();
  if (a.lambda(a.alg.unit) != kron(h.alg.unit, a.alg.unit)) {
    r.unit_preserved = false;
    r.failures.push_back("lambda(1) != 1 (x) 1");
  }
  std::vector<Vec> cols = a.coaction.col_list();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (a.lambda(a.alg.basis_product(i, j)) != tensor_product(h.alg, a.alg, cols[i], cols[j])) {
        r.multiplicative = false;
        r.failures.push_back("lambda not multiplicative at (" + a.alg.labels[i] + "," + a.alg.labels[j] + ")");
      }
    }
  return r;
}

Subspace coinvariants(const Comodule& c) {
  const size_t nh = hdim(c.hopf);
  Matrix one = Matrix::from_cols({c.hopf->alg.unit}, nh);
  return kernel(c.coaction - kron(one, Matrix::identity(c.dim)));
}

Subspace coinvariants(const ComoduleAlgebra& a) { return coinvariants(a.comodule()); }

Subspace isotypic_part(const Comodule& a, const Subspace& c) {
  return preimage(a.coaction, tensor_subspace(c, Subspace::full(a.dim)));
}

Subspace isotypic_part(const ComoduleAlgebra& a, const Subspace& c) { return isotypic_part(a.comodule(), c); }

bool is_subcomodule(const Comodule& a, const Subspace& s) {
  Subspace target = tensor_subspace(Subspace::full(hdim(a.hopf)), s);
  for (const auto& b : s.basis())
    if (!target.contains(a.lambda(b))) return false;
  return true;
}

ComoduleAlgebra sub_comodule_algebra(const ComoduleAlgebra& a, const Subspace& s, std::string name,
                                     std::vector<std::string> labels) {
  if (!is_subcomodule(a.comodule(), s)) throw Error(ErrorKind::InvalidInput, "subspace is not a subcomodule");
  if (labels.empty()) labels = labels_for(a.alg.labels, s);
  ComoduleAlgebra out;
  out.name = name;
  out.hopf = a.hopf;
  out.alg = sub_algebra(a.alg, s, labels);
  const size_t nh = hdim(a.hopf), n = a.dim(), d = s.dim();
  out.coaction = Matrix(nh * d, d);
  for (size_t i = 0; i < d; ++i) {
    Vec l = a.lambda(s.basis()[i]);
    for (size_t h = 0; h < nh; ++h) {
      Vec part(l.begin() + static_cast<std::ptrdiff_t>(h * n), l.begin() + static_cast<std::ptrdiff_t>((h + 1) * n));
      if (hk::is_zero(part)) continue;
      Vec c = s.coordinates(part);
      for (size_t j = 0; j < d; ++j) out.coaction(h * d + j, i) = c[j];
    }
  }
  return out;
}

ComoduleAlgebra change_basis(const ComoduleAlgebra& a, const Matrix& basis, std::vector<std::string> labels) {
  ComoduleAlgebra out;
  out.name = a.name;
  out.hopf = a.hopf;
  out.alg = change_basis(a.alg, basis, std::move(labels));
  auto inv = inverse(basis);
  out.coaction = kron(Matrix::identity(hdim(a.hopf)), *inv) * a.coaction * basis;
  return out;
}

ComoduleAlgebra direct_sum(const ComoduleAlgebra& a, const ComoduleAlgebra& b, std::string name) {
  if (!a.hopf || !b.hopf || a.hopf->dim() != b.hopf->dim())
    throw Error(ErrorKind::DimensionMismatch, "direct sum over different Hopf algebras");
  ComoduleAlgebra out;
  out.name = name.empty() ? a.name + "+" + b.name : name;
  out.hopf = a.hopf;
  out.alg = direct_sum(a.alg, b.alg);
  const size_t nh = a.hopf->dim(), n = a.dim(), m = b.dim(), t = n + m;
  out.coaction = Matrix(nh * t, t);
  for (size_t h = 0; h < nh; ++h) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) out.coaction(h * t + j, i) = a.coaction(h * n + j, i);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) out.coaction(h * t + n + j, n + i) = b.coaction(h * m + j, i);
  }
  return out;
}

ComoduleAlgebra push_forward(const ComoduleAlgebra& a, HopfPtr target, const Matrix& f) {
  if (f.rows() != hdim(target) || f.cols() != hdim(a.hopf)) throw Error(ErrorKind::DimensionMismatch, "Hopf map shape");
  ComoduleAlgebra out = a;
  out.hopf = std::move(target);
  out.coaction = kron(f, Matrix::identity(a.dim())) * a.coaction;
  return out;
}

// ---------------------------------------------------------------------------

bool is_kp(const HopfAlgebra& h) {
  if (h.dim() != 8) return false;
  HopfAlgebra kp = build_kp();
  for (size_t i = 0; i < h.alg.mult.size(); ++i)
    if (h.alg.mult[i] != kp.alg.mult[i] || h.coalg.comult[i] != kp.coalg.comult[i]) return false;
  return h.coalg.counit == kp.coalg.counit && h.alg.unit == kp.alg.unit && h.antipode == kp.antipode;
}

KpDecomposition kp_decompose(const ComoduleAlgebra& a) {
  if (!a.hopf || !is_kp(*a.hopf)) throw Error(ErrorKind::NotOverKp, "comodule algebra is not over builtin:kp");
  KpDecomposition d;
  d.source = &a;
  const char* names[4] = {"1", "x", "y", "xy"};
  for (size_t g = 0; g < 4; ++g) d.parts[names[g]] = isotypic_part(a, Subspace::span(8, {unit_vec(8, g)}));
  d.a_k = isotypic_part(a, Subspace::span(8, {unit_vec(8, 0), unit_vec(8, 1), unit_vec(8, 2), unit_vec(8, 3)}));
  d.a_2 = isotypic_part(a, Subspace::span(8, {unit_vec(8, 4), unit_vec(8, 5), unit_vec(8, 6), unit_vec(8, 7)}));
  Comodule c = a.comodule();
  // basis order 1,x,y,xy,z,zx,zy,zxy; xz = zy and xyz = zxy
  Matrix sz = c.slice(4), szx = c.slice(5), szy = c.slice(6), szxy = c.slice(7);
  d.v_2 = d.a_2.intersect(kernel(szy));
  d.w_2 = d.a_2.intersect(kernel(sz));
  const size_t n = a.dim();
  if (d.a_k.dim() + d.v_2.dim() + d.w_2.dim() != n)
    throw Error(ErrorKind::InvalidInput, "A_K + V_2 + W_2 does not exhaust A");
  std::vector<Vec> cols = d.a_k.basis();
  cols.insert(cols.end(), d.v_2.basis().begin(), d.v_2.basis().end());
  cols.insert(cols.end(), d.w_2.basis().begin(), d.w_2.basis().end());
  Matrix B = Matrix::from_cols(cols, n);
  auto Binv = inverse(B);
  if (!Binv) throw Error(ErrorKind::InvalidInput, "A_K + V_2 + W_2 is not direct");
  Matrix pv(n, n), pw(n, n);
  const size_t k = d.a_k.dim(), nv = d.v_2.dim();
  for (size_t i = k; i < k + nv; ++i) pv(i, i) = 1;
  for (size_t i = k + nv; i < n; ++i) pw(i, i) = 1;
  Matrix proj_v = B * pv * *Binv, proj_w = B * pw * *Binv;
  // lambda(v) = 1/2 [z (x) (v + w) + zx (x) (v - w)],  lambda(w) = 1/2 [zy (x) (v + w) + zxy (x) (w - v)]
  d.tau = (sz - szx) * proj_v + (szy - szxy) * proj_w;
  return d;
}

MuDecomposition mu_decompose(const KpDecomposition& d) {
  const ComoduleAlgebra& a = *d.source;
  const size_t n = a.dim();
  auto unit_for = [&](const std::string& g) {
    const Subspace& part = d.parts.at(g);
    if (part.dim() != 1) throw Error(ErrorKind::MissingGrouplikeUnits, "A_" + g + " is not one dimensional");
    Vec u = part.basis()[0];
    Vec sq = a.alg.product(u, u);
    Subspace ones = Subspace::span(n, {a.alg.unit});
    if (!ones.contains(sq) || hk::is_zero(sq))
      throw Error(ErrorKind::MissingGrouplikeUnits, "e_" + g + " does not square to a nonzero scalar");
    Scalar c = ones.coordinates(sq)[0] / ones.coordinates(a.alg.unit)[0];
    auto r = try_sqrt(c);
    if (!r) throw NeedsExtension(c.str(), "normalizing e_" + g);
    return r->inv() * u;
  };
  MuDecomposition out;
  out.e_x = unit_for("x");
  out.e_y = unit_for("y");
  Matrix rx = mult_operator(a.alg, Side::Right, out.e_x);
  Matrix ly = mult_operator(a.alg, Side::Left, out.e_y);
  Matrix I = Matrix::identity(n);
  for (const Subspace* s : {&d.v_2, &d.w_2}) {
    if (s->dim() == 0) continue;
    if (!s->contains(apply(rx, *s)) || !s->contains(apply(ly, *s)))
      throw Error(ErrorKind::MissingGrouplikeUnits, "R_x or L_y does not preserve the 2-dimensional part");
    Matrix r = restrict_to(rx, *s), l = restrict_to(ly, *s);
    Matrix id = Matrix::identity(s->dim());
    if (r * r != id || l * l != id || commutator(r, l) != Matrix(s->dim(), s->dim()))
      throw Error(ErrorKind::MissingGrouplikeUnits, "R_x, L_y are not commuting involutions");
  }
  for (int sa : {1, -1})
    for (int sb : {1, -1}) {
      Subspace common = kernel(rx - I * Scalar(sa)).intersect(kernel(ly - I * Scalar(sb)));
      out.v_parts[{sa, sb}] = d.v_2.intersect(common);
      out.w_parts[{sa, sb}] = d.w_2.intersect(common);
    }
  return out;
}

// ---------------------------------------------------------------------------

Matrix LoewyGrading::adapted_basis() const {
  std::vector<Vec> cols;
  size_t n = degrees.empty() ? 0 : degrees.front().ambient();
  for (const auto& d : degrees) cols.insert(cols.end(), d.basis().begin(), d.basis().end());
  return Matrix::from_cols(cols, n);
}

std::vector<size_t> LoewyGrading::degree_of_adapted() const {
  std::vector<size_t> out;
  for (size_t k = 0; k < degrees.size(); ++k)
    for (size_t i = 0; i < degrees[k].dim(); ++i) out.push_back(k);
  return out;
}

Matrix LoewyGrading::projection(size_t deg) const {
  Matrix B = adapted_basis();
  auto inv = inverse(B);
  if (!inv) throw Error(ErrorKind::FiltrationNotExhaustive, "grading does not decompose the space");
  size_t off = 0;
  for (size_t k = 0; k < deg && k < degrees.size(); ++k) off += degrees[k].dim();
  const size_t d = deg < degrees.size() ? degrees[deg].dim() : 0;
  Matrix out(d, B.rows());
  for (size_t i = 0; i < d; ++i) out.set_row(i, inv->row(off + i));
  return out;
}

std::vector<Subspace> loewy_filtration(const ComoduleAlgebra& a, const HopfFiltration& filt) {
  std::vector<Subspace> out;
  for (const auto& level : filt.levels) out.push_back(isotypic_part(a, level));
  return out;
}

LoewyGrading grading_from_filtration(const std::vector<Subspace>& filt) {
  LoewyGrading g;
  if (filt.empty()) return g;
  const size_t n = filt.front().ambient();
  if (filt.back().dim() != n) throw Error(ErrorKind::FiltrationNotExhaustive, "filtration does not reach the whole space");
  g.degrees.push_back(filt.front());
  for (size_t k = 1; k < filt.size(); ++k) {
    std::set<size_t> prev(filt[k - 1].pivots().begin(), filt[k - 1].pivots().end());
    Subspace part(n);
    for (size_t r = 0; r < filt[k].dim(); ++r)
      if (!prev.count(filt[k].pivots()[r])) part.insert(filt[k].basis()[r]);
    g.degrees.push_back(part);
  }
  while (g.degrees.size() > 1 && g.degrees.back().dim() == 0) g.degrees.pop_back();
  return g;
}

LoewyGrading loewy(const ComoduleAlgebra& a, const HopfFiltration& filt) {
  std::vector<Subspace> f = loewy_filtration(a, filt);
  if (f.empty() || f.back().dim() != a.dim())
    throw Error(ErrorKind::FiltrationNotExhaustive, "Loewy filtration does not exhaust A");
  return grading_from_filtration(f);
}

bool is_algebra_grading(const Algebra& a, const LoewyGrading& g) {
  for (size_t i = 0; i < g.degrees.size(); ++i)
    for (size_t j = 0; j < g.degrees.size(); ++j) {
      Subspace p = product_space(a, g.degrees[i], g.degrees[j]);
      if (i + j >= g.degrees.size()) {
        if (p.dim() != 0) return false;
      } else if (!g.degrees[i + j].contains(p)) {
        return false;
      }
    }
  return true;
}

namespace {

std::vector<std::string> adapted_labels(const std::vector<std::string>& old, const Matrix& B) {
  std::vector<std::string> out;
  for (size_t j = 0; j < B.cols(); ++j) {
    size_t nz = 0, where = 0;
    for (size_t i = 0; i < B.rows(); ++i)
      if (!B(i, j).is_zero()) {
        ++nz;
        where = i;
      }
    out.push_back(nz == 1 && B(where, j) == Scalar(1) ? old[where] : "g" + std::to_string(j));
  }
  return out;
}

}  // namespace

GradedHopf associated_graded_hopf(const HopfAlgebra& h, const HopfFiltration& filt) {
  GradedHopf out;
  out.grading = grading_from_filtration(filt.levels);
  const Matrix B = out.grading.adapted_basis();
  const Matrix Bi = *inverse(B);
  const std::vector<size_t> deg = out.grading.degree_of_adapted();
  const size_t n = h.dim();
  HopfAlgebra& g = out.hopf;
  g.name = "gr(" + h.name + ")";
  g.alg = Algebra(n, adapted_labels(h.alg.labels, B));
  std::vector<Vec> cols = B.col_list();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec c = Bi * h.alg.product(cols[i], cols[j]);
      for (size_t k = 0; k < n; ++k)
        if (deg[k] != deg[i] + deg[j]) c[k] = Scalar();
      g.alg.set_product(i, j, c);
    }
  g.alg.unit = Bi * h.alg.unit;
  g.coalg = Coalgebra(n);
  const Matrix BB = kron(Bi, Bi);
  const Matrix D = h.coalg.delta_matrix();
  for (size_t i = 0; i < n; ++i) {
    Vec c = BB * (D * cols[i]);
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q)
        if (deg[p] + deg[q] != deg[i]) c[p * n + q] = Scalar();
    g.coalg.set_delta(i, c);
    g.coalg.counit[i] = deg[i] == 0 ? h.eps(cols[i]) : Scalar();
  }
  g.antipode = Matrix(n, n);
  for (size_t i = 0; i < n; ++i) {
    Vec c = Bi * (h.antipode * cols[i]);
    for (size_t k = 0; k < n; ++k)
      if (deg[k] != deg[i]) c[k] = Scalar();
    g.antipode.set_col(i, c);
  }
  return out;
}

ComoduleAlgebra associated_graded(const ComoduleAlgebra& a, const LoewyGrading& grading, const HopfFiltration& hfilt,
                                  HopfPtr gr_hopf) {
  LoewyGrading hg = grading_from_filtration(hfilt.levels);
  if (!gr_hopf) gr_hopf = std::make_shared<HopfAlgebra>(associated_graded_hopf(*a.hopf, hfilt).hopf);
  const Matrix BA = grading.adapted_basis(), BH = hg.adapted_basis();
  auto BAi = inverse(BA), BHi = inverse(BH);
  if (!BAi || !BHi) throw Error(ErrorKind::FiltrationNotExhaustive, "grading is not a decomposition");
  const std::vector<size_t> da = grading.degree_of_adapted(), dh = hg.degree_of_adapted();
  const size_t n = a.dim(), nh = a.hopf->dim();
  ComoduleAlgebra out;
  out.name = "gr(" + a.name + ")";
  out.hopf = gr_hopf;
  out.alg = Algebra(n, adapted_labels(a.alg.labels, BA));
  std::vector<Vec> cols = BA.col_list();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec c = *BAi * a.alg.product(cols[i], cols[j]);
      for (size_t k = 0; k < n; ++k)
        if (da[k] != da[i] + da[j]) c[k] = Scalar();
      out.alg.set_product(i, j, c);
    }
  out.alg.unit = *BAi * a.alg.unit;
  const Matrix T = kron(*BHi, *BAi);
  out.coaction = Matrix(nh * n, n);
  for (size_t i = 0; i < n; ++i) {
    Vec c = T * a.lambda(cols[i]);
    for (size_t p = 0; p < nh; ++p)
      for (size_t q = 0; q < n; ++q)
        if (dh[p] + da[q] != da[i]) c[p * n + q] = Scalar();
    out.coaction.set_col(i, c);
  }
  return out;
}

KappaResult kappa(const ComoduleAlgebra& a, const LoewyGrading& grading) {
  KappaResult r;
  const HopfAlgebra& h = *a.hopf;
  const size_t nh = h.dim(), n = a.dim();
  const Subspace& a0 = grading.degrees.at(0);
  const size_t d0 = a0.dim();
  Matrix p0 = grading.projection(0);
  r.map = kron(Matrix::identity(nh), p0) * a.coaction;
  r.kernel = kernel(r.map);
  r.injective = r.kernel.dim() == 0;
  // comodule map into H (x) A(0) with coaction Delta (x) 1
  r.comodule_morphism = kron(h.coalg.delta_matrix(), Matrix::identity(d0)) * r.map ==
                        kron(Matrix::identity(nh), r.map) * a.coaction;
  if (is_subalgebra(a.alg, a0)) {
    Algebra alg0 = sub_algebra(a.alg, a0);
    std::vector<Vec> img = r.map.col_list();
    bool ok = r.map * a.alg.unit == kron(h.alg.unit, alg0.unit);
    for (size_t i = 0; ok && i < n; ++i)
      for (size_t j = 0; ok && j < n; ++j)
        ok = r.map * a.alg.basis_product(i, j) == tensor_product(h.alg, alg0, img[i], img[j]);
    r.algebra_morphism = ok;
  }
  return r;
}

PhiResult phi_embed(const ComoduleAlgebra& a, const LoewyGrading& grading, const Matrix& witness) {
  const HopfAlgebra& h = *a.hopf;
  const size_t nh = h.dim(), n = a.dim();
  const Subspace& a0 = grading.degrees.at(0);
  const size_t d0 = a0.dim();
  if (witness.rows() != nh || witness.cols() != d0) throw Error(ErrorKind::BadWitness, "witness shape");
  if (rank(witness) != d0) throw Error(ErrorKind::BadWitness, "witness is not injective");
  if (!is_subcomodule(a.comodule(), a0)) throw Error(ErrorKind::BadWitness, "A(0) is not a subcomodule");
  const Matrix D = h.coalg.delta_matrix();
  Matrix p0 = grading.projection(0);
  for (size_t j = 0; j < d0; ++j) {
    Vec lam0 = kron(Matrix::identity(nh), p0) * a.lambda(a0.basis()[j]);
    if (D * witness.col(j) != kron(Matrix::identity(nh), witness) * lam0)
      throw Error(ErrorKind::BadWitness, "witness is not a comodule map");
  }
  PhiResult r;
  Matrix eps0 = h.coalg.counit_row() * witness * p0;  // 1 x n
  r.map = kron(Matrix::identity(nh), eps0) * a.coaction;
  r.injective = rank(r.map) == n;
  r.comodule_morphism = D * r.map == kron(Matrix::identity(nh), r.map) * a.coaction;
  bool alg = r.map * a.alg.unit == h.alg.unit;
  std::vector<Vec> img = r.map.col_list();
  for (size_t i = 0; alg && i < n; ++i)
    for (size_t j = 0; alg && j < n; ++j) alg = r.map * a.alg.basis_product(i, j) == h.alg.product(img[i], img[j]);
  r.algebra_morphism = alg;
  r.image = image(r.map);
  return r;
}

}  // namespace hk
