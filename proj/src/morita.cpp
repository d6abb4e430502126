#include "hopfkit/morita.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "hopfkit/poly.hpp"

namespace hk {

namespace {

Matrix block(const Matrix& m, size_t r0, size_t c0, size_t rows, size_t cols) {
  Matrix out(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

// Matrix of the element v under a representation given on basis elements.
Matrix rep_of(const std::vector<Matrix>& rho, const Vec& v) {
  Matrix out(rho.front().rows(), rho.front().cols());
  for (size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out = out + rho[k] * v[k];
  return out;
}

// X (d2 x d1) with to[a] X = X from[a] for all a.
Subspace hom_space(const std::vector<Matrix>& from, const std::vector<Matrix>& to) {
  const size_t d1 = from.front().rows(), d2 = to.front().rows();
  const size_t unknowns = d2 * d1;
  std::vector<Vec> rows;
  for (size_t a = 0; a < from.size(); ++a) {
    const Matrix& f = from[a];
    const Matrix& t = to[a];
    for (size_t r = 0; r < d2; ++r)
      for (size_t c = 0; c < d1; ++c) {
        Vec row = zero_vec(unknowns);
        for (size_t k = 0; k < d2; ++k)
          if (!t(r, k).is_zero()) row[k * d1 + c] += t(r, k);
        for (size_t k = 0; k < d1; ++k)
          if (!f(k, c).is_zero()) row[r * d1 + k] -= f(k, c);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return Subspace::full(unknowns);
  return kernel(Matrix::from_rows(rows, unknowns));
}

Field field_of_scalars(const std::vector<Scalar>& v) {
  for (const Scalar& s : v)
    if (s.field()) return s.field();
  return nullptr;
}

Field field_of_matrix(const Matrix& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).field()) return m(i, j).field();
  return nullptr;
}

}  // namespace

size_t hom_dim(const std::vector<Matrix>& from, const std::vector<Matrix>& to) { return hom_space(from, to).dim(); }

Field field_of(const ComoduleAlgebra& a) {
  if (Field f = field_of_scalars(a.alg.mult)) return f;
  if (Field f = field_of_matrix(a.coaction)) return f;
  return default_field();
}

// ---- End_B(P) ----

EndAlgebra end_b_operators(const EquivariantModule& p, const std::string& name) {
  EquivariantReport rep = check_equivariant(p);
  if (!rep.ok())
    throw Error(ErrorKind::InvalidInput, "not an equivariant module: " + (rep.failures.empty() ? "" : rep.failures[0]));
  const size_t n = p.dim();
  Subspace comm = hom_space(p.action, p.action);
  EndAlgebra out;
  out.operators.push_back(Matrix::identity(n));
  Subspace acc = Subspace::span(n * n, {out.operators[0].flatten()});
  for (const Vec& v : comm.basis())
    if (acc.insert(v)) out.operators.push_back(Matrix::unflatten(v, n, n));
  const size_t s = out.operators.size();
  std::vector<Vec> flat;
  for (const Matrix& t : out.operators) flat.push_back(t.flatten());
  const Matrix cols = Matrix::from_cols(flat, n * n);
  auto coords = [&](const Matrix& t) { return solve(cols, t.flatten()); };

  std::vector<std::string> labels{"1"};
  for (size_t k = 1; k < s; ++k) labels.push_back("T" + std::to_string(k));
  Algebra alg(s, labels);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      auto c = coords(out.operators[i] * out.operators[j]);
      if (!c) throw Error(ErrorKind::InvalidInput, "commutant not closed under composition");
      alg.set_product(i, j, *c);
    }
  alg.unit = unit_vec(s, 0);

  const HopfAlgebra& h = *p.comodule.hopf;
  const size_t dh = h.dim();
  const Matrix sinv = antipode_inverse(h);
  std::vector<Matrix> slices;
  for (size_t k = 0; k < dh; ++k) slices.push_back(p.comodule.slice(k));
  // e_h' S^-1(e_h)
  std::vector<std::vector<Vec>> prod(dh, std::vector<Vec>(dh));
  for (size_t a = 0; a < dh; ++a)
    for (size_t b = 0; b < dh; ++b) prod[a][b] = h.alg.product(h.alg.basis(a), sinv * h.alg.basis(b));

  Matrix coaction(dh * s, s);
  for (size_t j = 0; j < s; ++j) {
    std::vector<Matrix> r(dh, Matrix(n, n));
    for (size_t b = 0; b < dh; ++b) {
      if (slices[b].is_zero()) continue;
      Matrix tb = out.operators[j] * slices[b];
      for (size_t a = 0; a < dh; ++a) {
        if (slices[a].is_zero()) continue;
        Matrix m = slices[a] * tb;
        if (m.is_zero()) continue;
        for (size_t k = 0; k < dh; ++k)
          if (!prod[a][b][k].is_zero()) r[k] = r[k] + m * prod[a][b][k];
      }
    }
    for (size_t k = 0; k < dh; ++k) {
      auto c = coords(r[k]);
      if (!c) throw Error(ErrorKind::CoactionUnsolvable, "component " + h.alg.labels[k] + " of lambda(" + labels[j] + ") leaves End_B(P)");
      for (size_t i = 0; i < s; ++i) coaction(k * s + i, j) = (*c)[i];
    }
  }
  out.algebra.name = name.empty() ? "End_B(P)" : name;
  out.algebra.alg = std::move(alg);
  out.algebra.hopf = p.comodule.hopf;
  out.algebra.coaction = std::move(coaction);
  ComoduleAlgebraReport cr = check_comodule_algebra(out.algebra);
  if (!cr.ok()) throw Error(ErrorKind::CoactionUnsolvable, "End_B(P) fails: " + (cr.failures.empty() ? "" : cr.failures[0]));
  return out;
}

ComoduleAlgebra end_b(const EquivariantModule& p, const std::string& name) { return end_b_operators(p, name).algebra; }

EquivariantModule shifted_regular_module(const ComoduleAlgebra& b, const Vec& g) {
  if (!is_grouplike(*b.hopf, g)) throw Error(ErrorKind::InvalidInput, "shift must be grouplike");
  EquivariantModule p = regular_module(b);
  Matrix lg = mult_operator(b.hopf->alg, Side::Left, g);
  p.comodule.coaction = kron(lg, Matrix::identity(b.dim())) * p.comodule.coaction;
  return p;
}

EquivariantModule direct_sum(const EquivariantModule& p, const EquivariantModule& q) {
  if (p.acting.alg.mult != q.acting.alg.mult || p.acting.coaction != q.acting.coaction)
    throw Error(ErrorKind::InvalidInput, "direct sum needs a common acting algebra");
  const size_t n1 = p.dim(), n2 = q.dim(), n = n1 + n2, dh = p.comodule.hopf->dim();
  EquivariantModule out;
  out.acting = p.acting;
  out.comodule.hopf = p.comodule.hopf;
  out.comodule.dim = n;
  out.comodule.labels = p.comodule.labels;
  for (const auto& l : q.comodule.labels) out.comodule.labels.push_back(l + "'");
  out.comodule.coaction = Matrix(dh * n, n);
  for (size_t h = 0; h < dh; ++h) {
    for (size_t r = 0; r < n1; ++r)
      for (size_t c = 0; c < n1; ++c) out.comodule.coaction(h * n + r, c) = p.comodule.coaction(h * n1 + r, c);
    for (size_t r = 0; r < n2; ++r)
      for (size_t c = 0; c < n2; ++c) out.comodule.coaction(h * n + n1 + r, n1 + c) = q.comodule.coaction(h * n2 + r, c);
  }
  for (size_t i = 0; i < p.action.size(); ++i) {
    Matrix m(n, n);
    for (size_t r = 0; r < n1; ++r)
      for (size_t c = 0; c < n1; ++c) m(r, c) = p.action[i](r, c);
    for (size_t r = 0; r < n2; ++r)
      for (size_t c = 0; c < n2; ++c) m(n1 + r, n1 + c) = q.action[i](r, c);
    out.action.push_back(std::move(m));
  }
  if (p.grading && q.grading) {
    LoewyGrading g;
    const size_t levels = std::max(p.grading->degrees.size(), q.grading->degrees.size());
    for (size_t d = 0; d < levels; ++d) {
      Subspace s(n);
      if (d < p.grading->degrees.size())
        for (const Vec& v : p.grading->degrees[d].basis()) {
          Vec w = zero_vec(n);
          std::copy(v.begin(), v.end(), w.begin());
          s.insert(w);
        }
      if (d < q.grading->degrees.size())
        for (const Vec& v : q.grading->degrees[d].basis()) {
          Vec w = zero_vec(n);
          std::copy(v.begin(), v.end(), w.begin() + n1);
          s.insert(w);
        }
      g.degrees.push_back(std::move(s));
    }
    out.grading = std::move(g);
  }
  return out;
}

std::optional<std::vector<Vec>> free_basis(const EquivariantModule& p) {
  const size_t n = p.dim(), m = p.acting.dim();
  if (m == 0 || n % m != 0) return std::nullopt;
  std::vector<Vec> gens;
  Subspace acc(n);
  std::vector<Vec> candidates;
  for (size_t i = 0; i < n; ++i) candidates.push_back(unit_vec(n, i));
  for (size_t i = 0; i + 1 < n; ++i) candidates.push_back(unit_vec(n, i) + unit_vec(n, i + 1));
  for (const Vec& u : candidates) {
    if (acc.dim() == n) break;
    std::vector<Vec> orbit;
    for (const Matrix& a : p.action) orbit.push_back(a * u);
    Subspace ub = Subspace::span(n, orbit);
    if (ub.dim() != m || (acc + ub).dim() != acc.dim() + m) continue;
    acc = acc + ub;
    gens.push_back(u);
  }
  if (acc.dim() != n) return std::nullopt;
  return gens;
}

// ---- colinear isomorphisms ----

Subspace colinear_maps(const Comodule& a, const Comodule& b) {
  const size_t na = a.dim, nb = b.dim, dh = a.hopf->dim();
  const size_t unknowns = nb * na;
  std::vector<Vec> rows;
  for (size_t h = 0; h < dh; ++h)
    for (size_t r = 0; r < nb; ++r)
      for (size_t c = 0; c < na; ++c) {
        // (Lambda_B F - (1 (x) F) Lambda_A)_{(h, r), c}
        Vec row = zero_vec(unknowns);
        for (size_t k = 0; k < nb; ++k) {
          const Scalar& l = b.coaction(h * nb + r, k);
          if (!l.is_zero()) row[k * na + c] += l;
        }
        for (size_t j = 0; j < na; ++j) {
          const Scalar& l = a.coaction(h * na + j, c);
          if (!l.is_zero()) row[r * na + j] -= l;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  if (rows.empty()) return Subspace::full(unknowns);
  return kernel(Matrix::from_rows(rows, unknowns));
}

bool is_cosemisimple(const HopfAlgebra& h) {
  const size_t n = h.dim();
  Algebra dual(n, h.alg.labels);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) dual.m(i, j, k) = h.coalg.d(k, i, j);
  dual.unit = h.coalg.counit;
  return trace_radical(dual).dim() == 0;
}

namespace {

std::string var_name(size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "t%03zu", k);
  return buf;
}

bool same_hopf(const HopfPtr& a, const HopfPtr& b) {
  if (a == b) return true;
  return a->dim() == b->dim() && a->alg.mult == b->alg.mult && a->coalg.comult == b->coalg.comult;
}

}  // namespace

ExtendedIsoSearch colinear_iso_search_extending(const ComoduleAlgebra& a, const ComoduleAlgebra& b, size_t max_roots) {
  ExtendedIsoSearch out;
  out.field = field_of(a);
  ComoduleAlgebra x = a.coerce(out.field), y = b.coerce(out.field);
  out.search = colinear_iso_search(x, y);
  while (!out.search.iso && !out.search.needs_sqrt.empty() && out.adjoined.size() < max_roots && !out.field->extended) {
    const Scalar d = out.search.needs_sqrt[0];
    out.field = adjoin_sqrt(out.field, d);
    out.adjoined.push_back(d);
    out.search = colinear_iso_search(a.coerce(out.field), b.coerce(out.field));
  }
  return out;
}

IsoSearch colinear_iso_search(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
  if (!same_hopf(a.hopf, b.hopf)) throw Error(ErrorKind::InvalidInput, "different Hopf algebras");
  IsoSearch out;
  const size_t n = a.dim();
  if (b.dim() != n) {
    out.reason = "dimensions differ";
    return out;
  }
  if (n > 8) throw Error(ErrorKind::UnsupportedDimension, "isomorphism search supports dimension <= 8");
  const Comodule ca = a.comodule(), cb = b.comodule();
  Subspace maps = colinear_maps(ca, cb);
  if (is_cosemisimple(*a.hopf)) {
    const size_t ab = maps.dim(), aa = colinear_maps(ca, ca).dim(), bb = colinear_maps(cb, cb).dim();
    if (!(ab == aa && ab == bb)) {
      out.reason = "not isomorphic as comodules (dim Hom: " + std::to_string(aa) + ", " + std::to_string(ab) + ", " +
                   std::to_string(bb) + ")";
      return out;
    }
  }
  const size_t r = maps.dim();
  if (r == 0) {
    out.reason = "no nonzero colinear map";
    return out;
  }
  std::vector<Matrix> basis;
  for (const Vec& v : maps.basis()) basis.push_back(Matrix::unflatten(v, n, n));
  // F = sum_k t_k basis[k], entrywise polynomials
  std::vector<MultiPoly> f(n * n);
  for (size_t k = 0; k < r; ++k) {
    MultiPoly t = MultiPoly::var(var_name(k));
    const Vec flat = basis[k].flatten();
    for (size_t e = 0; e < n * n; ++e) {
      const Scalar& c = flat[e];
      if (!c.is_zero()) f[e] += t * MultiPoly(c);
    }
  }
  auto apply_f = [&](const Vec& v) {
    std::vector<MultiPoly> out_v(n);
    for (size_t row = 0; row < n; ++row)
      for (size_t c = 0; c < n; ++c)
        if (!v[c].is_zero()) out_v[row] += f[row * n + c] * MultiPoly(v[c]);
    return out_v;
  };
  std::vector<MultiPoly> eqs;
  {
    std::vector<MultiPoly> fu = apply_f(a.alg.unit);
    for (size_t row = 0; row < n; ++row) eqs.push_back(fu[row] - MultiPoly(b.alg.unit[row]));
  }
  std::vector<std::vector<MultiPoly>> cols(n);
  for (size_t i = 0; i < n; ++i) cols[i] = apply_f(a.alg.basis(i));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<MultiPoly> lhs = apply_f(a.alg.basis_product(i, j));
      // F(a_i) F(a_j) in B
      std::vector<MultiPoly> rhs(n);
      for (size_t p = 0; p < n; ++p) {
        if (cols[i][p].is_zero()) continue;
        for (size_t q = 0; q < n; ++q) {
          if (cols[j][q].is_zero()) continue;
          MultiPoly pq = cols[i][p] * cols[j][q];
          for (size_t k = 0; k < n; ++k)
            if (!b.alg.m(p, q, k).is_zero()) rhs[k] += pq * MultiPoly(b.alg.m(p, q, k));
        }
      }
      for (size_t k = 0; k < n; ++k) {
        MultiPoly e = lhs[k] - rhs[k];
        if (!e.is_zero()) eqs.push_back(std::move(e));
      }
    }
  Field fld = field_of(a);
  SolveResult sol = solve_polynomial_system(std::move(eqs), fld);
  out.exhaustive = sol.complete;
  const std::vector<std::vector<long>> trials{{1}, {2}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {-1}, {1, -1}, {2, 3, 5}, {5, 3, 2}};
  for (const PolySolution& s : sol.solutions) {
    for (const auto& pattern : trials) {
      Assignment free;
      for (size_t k = 0; k < s.free.size(); ++k) free[s.free[k]] = Scalar(pattern[k % pattern.size()] + static_cast<long>(k / pattern.size()));
      Assignment at = s.at(free);
      Matrix m(n, n);
      for (size_t k = 0; k < r; ++k) {
        auto it = at.find(var_name(k));
        const Scalar t = it == at.end() ? Scalar() : it->second;
        if (!t.is_zero()) m = m + basis[k] * t;
      }
      if (rank(m) != n) continue;
      if (!is_algebra_map(a.alg, b.alg, m)) continue;
      out.iso = m;
      out.reason = "isomorphism found";
      return out;
    }
    if (!s.free.empty()) out.exhaustive = false;
  }
  out.needs_sqrt = sol.needs_sqrt;
  if (out.exhaustive) {
    out.reason = "no colinear algebra isomorphism";
  } else if (!out.needs_sqrt.empty()) {
    out.reason = "none over " + describe_field(fld) + "; candidates need sqrt(" + out.needs_sqrt[0].str() + ")";
  } else {
    out.reason = "none found (search not exhaustive)";
  }
  return out;
}

// ---- simple modules ----

namespace {

std::vector<Scalar> minimal_polynomial(const Matrix& m) {
  const size_t n = m.rows();
  std::vector<Vec> powers{Matrix::identity(n).flatten()};
  Matrix cur = Matrix::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    cur = cur * m;
    Vec v = cur.flatten();
    auto c = solve(Matrix::from_cols(powers, n * n), v);
    if (c) {
      std::vector<Scalar> poly;
      for (const Scalar& x : *c) poly.push_back(-x);
      poly.push_back(Scalar(1));
      return poly;
    }
    powers.push_back(std::move(v));
  }
  throw Error(ErrorKind::InvalidInput, "minimal polynomial not found");
}

std::optional<Subspace> proper_submodule(const std::vector<Matrix>& ops, size_t d, const Field& f, std::string& need) {
  auto try_seed = [&](const Vec& v) -> std::optional<Subspace> {
    if (is_zero(v)) return std::nullopt;
    Subspace s = spin(d, {v}, ops);
    if (s.dim() < d) return s;
    return std::nullopt;
  };
  for (size_t i = 0; i < d; ++i)
    if (auto s = try_seed(unit_vec(d, i))) return s;
  Subspace e = generated_operator_algebra(d, ops);
  if (e.dim() == d * d) return std::nullopt;
  std::vector<Matrix> elems;
  for (const Vec& v : e.basis()) elems.push_back(Matrix::unflatten(v, d, d));
  for (const Vec& v : hom_space(ops, ops).basis()) elems.push_back(Matrix::unflatten(v, d, d));
  const Matrix id = Matrix::identity(d);
  for (const Matrix& m : elems) {
    RootSplit rs = split_roots(minimal_polynomial(m), f);
    for (const Scalar& c : rs.roots) {
      Subspace k = kernel(m - id * c);
      if (k.dim() == d) continue;
      for (const Vec& v : k.basis())
        if (auto s = try_seed(v)) return s;
    }
    if (need.empty() && rs.residual.size() == 3) {
      const auto& c = rs.residual;
      need = ((c[1] * c[1] - Scalar(4) * c[0] * c[2]) / (Scalar(4) * c[2] * c[2])).str();
    }
  }
  return std::nullopt;
}

void composition_factors(const std::vector<Matrix>& ops, size_t d, const Field& f, std::vector<std::vector<Matrix>>& out) {
  if (d == 0) return;
  std::string need;
  auto sub = proper_submodule(ops, d, f, need);
  if (!sub) {
    if (generated_operator_algebra(d, ops).dim() == d * d) {
      out.push_back(ops);
      return;
    }
    if (!need.empty()) throw NeedsExtension(need, "module of dimension " + std::to_string(d) + " does not split");
    throw NeedsExtension("?", "module of dimension " + std::to_string(d) + " is not absolutely simple");
  }
  const size_t u = sub->dim();
  std::vector<Vec> cols = sub->basis();
  for (const Vec& v : sub->pivot_complement().basis()) cols.push_back(v);
  const Matrix p = Matrix::from_cols(cols, d);
  const Matrix pinv = *inverse(p);
  std::vector<Matrix> lower, upper;
  for (const Matrix& op : ops) {
    Matrix t = pinv * op * p;
    lower.push_back(block(t, 0, 0, u, u));
    upper.push_back(block(t, u, u, d - u, d - u));
  }
  composition_factors(lower, u, f, out);
  composition_factors(upper, d - u, f, out);
}

std::string one_dim_label(const Algebra& a, const std::vector<Matrix>& rho) {
  std::string s = "k(";
  bool first = true;
  for (size_t i = 0; i < a.dim; ++i) {
    if (a.basis(i) == a.unit) continue;
    if (!first) s += ",";
    first = false;
    s += rho[i](0, 0).str();
  }
  return s + ")";
}

}  // namespace

std::vector<SimpleModule> simple_modules(const Algebra& a) {
  if (trace_radical(a).dim() != 0) throw Error(ErrorKind::NotSemisimple, "algebra has a nonzero radical");
  Field f = field_of_scalars(a.mult);
  if (!f) f = default_field();
  std::vector<Matrix> ops;
  for (size_t i = 0; i < a.dim; ++i) ops.push_back(mult_operator(a, Side::Left, a.basis(i)));
  std::vector<std::vector<Matrix>> factors;
  composition_factors(ops, a.dim, f, factors);
  std::vector<SimpleModule> out;
  for (auto& rho : factors) {
    bool seen = false;
    for (const SimpleModule& s : out)
      if (s.dim == rho.front().rows() && hom_dim(s.action, rho) > 0) seen = true;
    if (seen) continue;
    SimpleModule s;
    s.dim = rho.front().rows();
    s.action = std::move(rho);
    out.push_back(std::move(s));
  }
  size_t total = 0;
  for (const SimpleModule& s : out) total += s.dim * s.dim;
  if (total != a.dim) throw Error(ErrorKind::InvalidInput, "simple modules do not account for the algebra");
  std::map<size_t, size_t> count;
  for (SimpleModule& s : out) {
    if (s.dim == 1)
      s.label = one_dim_label(a, s.action);
    else
      s.label = "S" + std::to_string(s.dim) + std::string(count[s.dim]++, '\'');
  }
  std::sort(out.begin(), out.end(), [](const SimpleModule& x, const SimpleModule& y) {
    return x.dim != y.dim ? x.dim < y.dim : x.label < y.label;
  });
  return out;
}

std::vector<SimpleModule> simple_modules(const ComoduleAlgebra& a) {
  Algebra alg = a.alg;
  Field f = field_of(a);
  if (!field_of_scalars(alg.mult)) alg = alg.coerce(f);
  return simple_modules(alg);
}

std::vector<size_t> semisimple_type(const Algebra& a) {
  std::vector<size_t> dims;
  for (const SimpleModule& s : simple_modules(a)) dims.push_back(s.dim);
  return dims;
}

bool classically_morita_equivalent(const Algebra& a, const Algebra& b) {
  return simple_modules(a).size() == simple_modules(b).size();
}

std::vector<SimpleModule> kp_simple_modules(const Field& f) {
  const Scalar i = Scalar::imag_unit(f);
  std::vector<SimpleModule> out;
  auto extend = [](const Matrix& x, const Matrix& y, const Matrix& z) {
    std::vector<Matrix> rho;
    const size_t d = x.rows();
    for (size_t k = 0; k < 8; ++k) {
      Matrix m = Matrix::identity(d);
      if (k & 4) m = m * z;
      if (k & 1) m = m * x;
      if (k & 2) m = m * y;
      rho.push_back(std::move(m));
    }
    return rho;
  };
  const std::vector<std::pair<std::string, Scalar>> zetas{{"k_1", Scalar(1)}, {"k_i", i}, {"k_-1", Scalar(-1)}, {"k_-i", -i}};
  for (const auto& [label, zeta] : zetas) {
    Matrix x(1, 1), z(1, 1);
    x(0, 0) = zeta * zeta;
    z(0, 0) = zeta;
    out.push_back({label, 1, extend(x, x, z)});
  }
  Matrix x = Matrix::identity(2), y = Matrix::identity(2), z(2, 2);
  x(1, 1) = -1;
  y(0, 0) = -1;
  z(0, 1) = 1;
  z(1, 0) = 1;
  out.push_back({"W", 2, extend(x.coerce(f), y.coerce(f), z.coerce(f))});
  return out;
}

FusionFingerprint fusion_fingerprint(const ComoduleAlgebra& a) {
  if (!is_kp(*a.hopf))
    throw Error(ErrorKind::NotOverKp, "fusion fingerprints are defined over KP");
  const Field f = field_of(a);
  const std::vector<SimpleModule> hs = kp_simple_modules(f);
  const std::vector<SimpleModule> as = simple_modules(a);
  FusionFingerprint fp;
  for (const SimpleModule& s : hs) {
    fp.rows.push_back(s.label);
    fp.row_dims.push_back(s.dim);
  }
  for (const SimpleModule& s : as) {
    fp.cols.push_back(s.label);
    fp.col_dims.push_back(s.dim);
  }
  const size_t n = a.dim(), dh = 8;
  for (const SimpleModule& x : hs) {
    std::vector<std::vector<std::string>> row;
    for (const SimpleModule& m : as) {
      std::vector<Matrix> rho;
      for (size_t e = 0; e < n; ++e) {
        Matrix t(x.dim * m.dim, x.dim * m.dim);
        Vec lam = a.lambda(a.alg.basis(e));
        for (size_t h = 0; h < dh; ++h) {
          Vec part(lam.begin() + h * n, lam.begin() + (h + 1) * n);
          if (is_zero(part)) continue;
          t = t + kron(x.action[h], rep_of(m.action, part));
        }
        rho.push_back(std::move(t));
      }
      std::vector<std::string> cell;
      size_t total = 0;
      for (const SimpleModule& s : as) {
        size_t mult = hom_dim(s.action, rho);
        for (size_t k = 0; k < mult; ++k) cell.push_back(s.label);
        total += mult * s.dim;
      }
      if (total != x.dim * m.dim) throw Error(ErrorKind::InvalidInput, "fusion cell does not decompose into simples");
      std::sort(cell.begin(), cell.end());
      row.push_back(std::move(cell));
    }
    fp.cells.push_back(std::move(row));
  }
  return fp;
}

Distinction fingerprint_distinguishes(const FusionFingerprint& a, const FusionFingerprint& b) {
  Distinction d;
  if (a.rows != b.rows) throw Error(ErrorKind::InvalidInput, "fingerprints over different Hopf simples");
  const size_t n = a.cols.size();
  if (n != b.cols.size()) {
    d.distinguished = true;
    d.explanation = "different numbers of simple modules (" + std::to_string(n) + " vs " + std::to_string(b.cols.size()) + ")";
    return d;
  }
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  size_t tried = 0;
  do {
    ++tried;
    bool ok = true;
    std::map<std::string, std::string> rename;
    for (size_t c = 0; c < n && ok; ++c) {
      ok = a.col_dims[c] == b.col_dims[perm[c]];
      rename[a.cols[c]] = b.cols[perm[c]];
    }
    for (size_t r = 0; r < a.rows.size() && ok; ++r)
      for (size_t c = 0; c < n && ok; ++c) {
        std::vector<std::string> mapped;
        for (const auto& l : a.cells[r][c]) mapped.push_back(rename.at(l));
        std::sort(mapped.begin(), mapped.end());
        ok = mapped == b.cells[r][perm[c]];
      }
    if (ok) {
      d.explanation = "labels match under";
      for (size_t c = 0; c < n; ++c) d.explanation += " " + a.cols[c] + "->" + b.cols[perm[c]];
      return d;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  d.distinguished = true;
  // Name the first H-simple whose number of fixed A-simples differs.
  for (size_t r = 0; r < a.rows.size(); ++r) {
    size_t fa = 0, fb = 0;
    for (size_t c = 0; c < n; ++c) {
      fa += a.cells[r][c] == std::vector<std::string>{a.cols[c]};
      fb += b.cells[r][c] == std::vector<std::string>{b.cols[c]};
    }
    if (fa != fb) {
      d.explanation = a.rows[r] + " fixes " + std::to_string(fa) + " of " + std::to_string(n) + " simples vs " +
                      std::to_string(fb) + "; ";
      break;
    }
  }
  d.explanation += "no bijection of simple labels intertwines the tables (" + std::to_string(tried) + " checked)";
  return d;
}

// ---- Loewy-graded End ----

GradedEnd loewy_graded_end(const EquivariantModule& p, const HopfFiltration& hf) {
  const size_t n = p.dim();
  LoewyGrading pg;
  if (p.grading) {
    pg = *p.grading;
  } else {
    std::vector<Subspace> filt;
    for (const Subspace& level : hf.levels)
      filt.push_back(preimage(p.comodule.coaction, tensor_subspace(level, Subspace::full(n))));
    pg = grading_from_filtration(filt);
  }
  const Subspace& p0 = pg.degrees.at(0);
  if (spin(p0, p.action).dim() != n) throw Error(ErrorKind::NotGeneratedInDegreeZero, "P(0) B is a proper submodule");
  LoewyGrading bg = loewy(p.acting, hf);
  const Subspace& b0 = bg.degrees.at(0);
  if (trace_radical(sub_algebra(p.acting.alg, b0)).dim() != 0)
    throw Error(ErrorKind::NotSemisimple, "B(0) is not semisimple");

  GradedEnd out;
  out.end = end_b_operators(p);
  const size_t s = out.end.operators.size();
  // S(k) = {T : T(P(0)) in P(k)}, as coordinates in the operator basis
  for (size_t k = 0; k < pg.degrees.size(); ++k) {
    Matrix ann = pg.degrees[k].annihilator();
    std::vector<Vec> rows;
    for (const Vec& u : p0.basis())
      for (size_t r = 0; r < ann.rows(); ++r) {
        Vec row = zero_vec(s);
        for (size_t j = 0; j < s; ++j) {
          Vec tu = out.end.operators[j] * u;
          Scalar c;
          for (size_t q = 0; q < n; ++q) c += ann(r, q) * tu[q];
          row[j] = c;
        }
        rows.push_back(std::move(row));
      }
    out.grading.degrees.push_back(rows.empty() ? Subspace::full(s) : kernel(Matrix::from_rows(rows, s)));
  }
  Subspace total(s);
  size_t dims = 0;
  for (const Subspace& d : out.grading.degrees) {
    total = total + d;
    dims += d.dim();
  }
  if (total.dim() != s || dims != s) throw Error(ErrorKind::InvalidInput, "transported grading is not a direct sum decomposition");
  while (out.grading.degrees.size() > 1 && out.grading.degrees.back().dim() == 0) out.grading.degrees.pop_back();

  std::vector<Subspace> lf = loewy_filtration(out.end.algebra, hf);
  out.matches_loewy = true;
  Subspace partial(s);
  for (size_t k = 0; k < std::max(lf.size(), out.grading.degrees.size()); ++k) {
    if (k < out.grading.degrees.size()) partial = partial + out.grading.degrees[k];
    const Subspace& level = k < lf.size() ? lf[k] : lf.back();
    if (!(partial == level)) out.matches_loewy = false;
  }
  out.degree0_dim = out.grading.degrees[0].dim();
  std::vector<Matrix> b0_on_p0;
  for (const Vec& b : b0.basis()) b0_on_p0.push_back(restrict_to(p.act(b), p0));
  out.end_b0_dim = hom_dim(b0_on_p0, b0_on_p0);
  // T -> T|P(0) on S(0): injective, lands in the commutant of B(0), and the dimensions agree
  {
    const Subspace& s0 = out.grading.degrees[0];
    std::vector<Vec> restricted;
    bool commute = true;
    for (const Vec& c : s0.basis()) {
      Matrix t(n, n);
      for (size_t j = 0; j < s; ++j)
        if (!c[j].is_zero()) t = t + out.end.operators[j] * c[j];
      Matrix r = restrict_to(t, p0);
      for (const Matrix& b : b0_on_p0) commute = commute && r * b == b * r;
      restricted.push_back(r.flatten());
    }
    out.degree0_restriction_iso = commute && Subspace::span(p0.dim() * p0.dim(), restricted).dim() == s0.dim() &&
                                  s0.dim() == out.end_b0_dim;
  }
  for (const Subspace& pk : pg.degrees) {
    // Hom_{B(0)}(P(0), P(k)) inside Hom(P(0), P)
    std::vector<Matrix> on_p;
    for (const Vec& b : b0.basis()) on_p.push_back(p.act(b));
    Subspace h = hom_space(b0_on_p0, on_p);
    Matrix ann = pk.annihilator();
    std::vector<Vec> rows;
    const size_t d0 = p0.dim();
    for (size_t r = 0; r < ann.rows(); ++r)
      for (size_t c = 0; c < d0; ++c) {
        Vec row = zero_vec(h.dim());
        for (size_t j = 0; j < h.dim(); ++j) {
          Matrix x = Matrix::unflatten(h.basis()[j], n, d0);
          Scalar v;
          for (size_t q = 0; q < n; ++q) v += ann(r, q) * x(q, c);
          row[j] = v;
        }
        rows.push_back(std::move(row));
      }
    out.hom_dims.push_back(rows.empty() ? h.dim() : kernel(Matrix::from_rows(rows, h.dim())).dim());
  }
  return out;
}

}  // namespace hk
