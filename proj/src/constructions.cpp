#include "hopfkit/constructions.hpp"

#include <algorithm>

namespace hk {

namespace {

size_t swap_xy(size_t g) { return ((g & 1) << 1) | ((g >> 1) & 1); }

void require_valid(const ComoduleAlgebra& a) {
  ComoduleAlgebraReport r = check_comodule_algebra(a);
  if (!r.ok()) {
    std::string msg = a.name + " failed its axioms";
    if (!r.failures.empty()) msg += ": " + r.failures.front();
    throw Error(ErrorKind::InvalidInput, msg);
  }
}

}  // namespace

HopfAlgebra build_kp() {
  HopfAlgebra h;
  h.name = "kp";
  h.alg = Algebra(8, {"1", "x", "y", "xy", "z", "zx", "zy", "zxy"});
  const Scalar half(1, 2);
  // z^2 = 1/2 (1 + x + y - xy)
  const Scalar zz[4] = {half, half, half, -half};
  for (size_t g = 0; g < 4; ++g)
    for (size_t k = 0; k < 4; ++k) {
      h.alg.m(g, k, g ^ k) = 1;
      h.alg.m(g, 4 + k, 4 + (swap_xy(g) ^ k)) = 1;  // g z = z sigma(g)
      h.alg.m(4 + g, k, 4 + (g ^ k)) = 1;
      const size_t t = swap_xy(g) ^ k;
      for (size_t u = 0; u < 4; ++u) h.alg.m(4 + g, 4 + k, u ^ t) = zz[u];
    }
  h.alg.unit = unit_vec(8, 0);

  h.coalg = Coalgebra(8);
  for (size_t g = 0; g < 4; ++g) {
    h.coalg.d(g, g, g) = 1;
    // Delta(z) = 1/2 (z (x) z + zx (x) z + z (x) zy - zx (x) zy), Delta(zg) = Delta(z)(g (x) g)
    const size_t a[4] = {0, 1, 0, 1}, b[4] = {0, 0, 2, 2};
    const Scalar c[4] = {half, half, half, -half};
    for (size_t t = 0; t < 4; ++t) h.coalg.d(4 + g, 4 + (a[t] ^ g), 4 + (b[t] ^ g)) = c[t];
  }
  for (size_t i = 0; i < 8; ++i) h.coalg.counit[i] = 1;

  h.antipode = Matrix(8, 8);
  for (size_t g = 0; g < 4; ++g) {
    h.antipode(g, g) = 1;
    h.antipode(4 + swap_xy(g), 4 + g) = 1;
  }
  return h;
}

HopfPtr kp() {
  static const HopfPtr instance = std::make_shared<const HopfAlgebra>(build_kp());
  return instance;
}

HopfAlgebra build_klein() {
  HopfAlgebra h;
  h.name = "kK";
  h.alg = Algebra(4, {"1", "x", "y", "xy"});
  h.coalg = Coalgebra(4);
  h.antipode = Matrix::identity(4);
  for (size_t g = 0; g < 4; ++g) {
    for (size_t k = 0; k < 4; ++k) h.alg.m(g, k, g ^ k) = 1;
    h.coalg.d(g, g, g) = 1;
    h.coalg.counit[g] = 1;
  }
  h.alg.unit = unit_vec(4, 0);
  return h;
}

Matrix klein_into_kp() {
  Matrix f(8, 4);
  for (size_t g = 0; g < 4; ++g) f(g, g) = 1;
  return f;
}

HopfAlgebra build_cyclic(size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic group of order 0");
  std::vector<std::string> labels{"1"};
  for (size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  HopfAlgebra h;
  h.name = "kZ" + std::to_string(n);
  h.alg = Algebra(n, labels);
  h.coalg = Coalgebra(n);
  h.antipode = Matrix(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) h.alg.m(i, j, (i + j) % n) = 1;
    h.coalg.d(i, i, i) = 1;
    h.coalg.counit[i] = 1;
    h.antipode((n - i) % n, i) = 1;
  }
  h.alg.unit = unit_vec(n, 0);
  return h;
}

ComoduleAlgebra regular(const HopfPtr& h, std::string name) {
  return ComoduleAlgebra{name.empty() ? h->name : name, h->alg, h, h->coalg.delta_matrix()};
}

ComoduleAlgebra trivial_comodule_algebra(const HopfPtr& h) {
  ComoduleAlgebra a;
  a.name = "k";
  a.hopf = h;
  a.alg = Algebra(1, {"1"});
  a.alg.m(0, 0, 0) = 1;
  a.alg.unit = unit_vec(1, 0);
  a.coaction = Matrix::from_cols({h->alg.unit}, h->dim());
  return a;
}

// ---------------------------------------------------------------------------

bool Cocycle::is_normalized() const {
  for (size_t g = 0; g < 4; ++g)
    if (table[0][g] != Scalar(1) || table[g][0] != Scalar(1)) return false;
  return true;
}

bool Cocycle::is_cocycle() const {
  for (size_t g = 0; g < 4; ++g)
    for (size_t h = 0; h < 4; ++h) {
      if (table[g][h].is_zero()) return false;
      for (size_t k = 0; k < 4; ++k)
        if (table[g][h] * table[g ^ h][k] != table[h][k] * table[g][h ^ k]) return false;
    }
  return true;
}

Cocycle Cocycle::trivial() {
  Cocycle c;
  for (auto& row : c.table) row.fill(Scalar(1));
  return c;
}

Cocycle Cocycle::klein_sign() {
  Cocycle c;
  for (size_t g = 0; g < 4; ++g)
    for (size_t h = 0; h < 4; ++h) {
      const bool j = (g >> 1) & 1, k = h & 1;
      c.table[g][h] = (j && k) ? Scalar(-1) : Scalar(1);
    }
  return c;
}

Cocycle Cocycle::twisted_by(const std::array<Scalar, 4>& c) const {
  if (c[0] != Scalar(1)) throw Error(ErrorKind::InvalidInput, "coboundary twist needs c(1) = 1");
  Cocycle out;
  for (size_t g = 0; g < 4; ++g)
    for (size_t h = 0; h < 4; ++h) out.table[g][h] = table[g][h] * c[g] * c[h] / c[g ^ h];
  return out;
}

ComoduleAlgebra build_twisted_group_algebra(const Cocycle& psi, std::string name) {
  if (!psi.is_normalized() || !psi.is_cocycle()) throw Error(ErrorKind::NotACocycle, "psi is not a normalized 2-cocycle");
  ComoduleAlgebra a;
  a.name = name.empty() ? "kK_psi" : name;
  a.hopf = kp();
  a.alg = Algebra(4, {"e_1", "e_x", "e_y", "e_xy"});
  for (size_t g = 0; g < 4; ++g)
    for (size_t h = 0; h < 4; ++h) a.alg.m(g, h, g ^ h) = psi(g, h);
  a.alg.unit = unit_vec(4, 0);
  a.coaction = Matrix(32, 4);
  for (size_t g = 0; g < 4; ++g) a.coaction(g * 4 + g, g) = 1;
  require_valid(a);
  return a;
}

Algebra matrix_algebra(size_t n) {
  std::vector<std::string> labels;
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = 1; j <= n; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
  Algebra a(n * n, labels);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < n; ++l) a.m(i * n + j, j * n + l, i * n + l) = 1;
  for (size_t i = 0; i < n; ++i) a.unit[i * n + i] = 1;
  return a;
}

Matrix kpsi_to_m2() {
  return Matrix::from_cols({{Scalar(1), Scalar(0), Scalar(0), Scalar(1)},
                            {Scalar(1), Scalar(0), Scalar(0), Scalar(-1)},
                            {Scalar(0), Scalar(1), Scalar(1), Scalar(0)},
                            {Scalar(0), Scalar(1), Scalar(-1), Scalar(0)}},
                           4);
}

// ---------------------------------------------------------------------------

Subspace coideal_span(const HopfPtr& h, const std::vector<Vec>& gens) {
  const size_t n = h->dim();
  std::vector<Matrix> slices;
  for (size_t b = 0; b < n; ++b) {
    Matrix s(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) s(j, i) = h->coalg.d(i, b, j);
    if (s != Matrix(n, n)) slices.push_back(std::move(s));
  }
  std::vector<Vec> seeds{h->alg.unit};
  seeds.insert(seeds.end(), gens.begin(), gens.end());
  Subspace s = Subspace::span(n, seeds);
  for (;;) {
    std::vector<Matrix> ops = slices;
    for (const auto& b : s.basis()) {
      ops.push_back(mult_operator(h->alg, Side::Left, b));
      ops.push_back(mult_operator(h->alg, Side::Right, b));
    }
    Subspace next = spin(s, ops);
    if (next.dim() == s.dim()) break;
    s = next;
  }
  return s;
}

ComoduleAlgebra coideal_generated(const HopfPtr& h, const std::vector<Vec>& gens, std::string name) {
  return sub_comodule_algebra(regular(h), coideal_span(h, gens), name.empty() ? "coideal" : name);
}

ComoduleAlgebra group_coideal(const std::vector<std::string>& labels, std::string name) {
  HopfPtr h = kp();
  std::vector<Vec> gens;
  for (const auto& l : labels) gens.push_back(unit_vec(8, h->alg.index_of(l)));
  return coideal_generated(h, gens, std::move(name));
}

ComoduleAlgebra build_a_xy_gamma_unchecked(const Scalar& gamma) {
  ComoduleAlgebra a;
  a.name = "a_xy(" + gamma.str() + ")";
  a.hopf = kp();
  Algebra& m = a.alg;
  m = Algebra(4, {"1", "e_xy", "v", "w"});
  const Scalar one(1), zero;
  for (size_t i = 0; i < 4; ++i) {
    m.m(0, i, i) = one;
    m.m(i, 0, i) = one;
  }
  m.m(1, 1, 0) = one;
  m.set_product(1, 2, {zero, zero, zero, gamma});
  m.set_product(2, 1, {zero, zero, zero, gamma});
  m.set_product(1, 3, {zero, zero, -gamma, zero});
  m.set_product(3, 1, {zero, zero, -gamma, zero});
  m.set_product(2, 2, {one, -gamma, zero, zero});
  m.set_product(2, 3, {-one, -gamma, zero, zero});
  m.set_product(3, 2, {-one, -gamma, zero, zero});
  m.set_product(3, 3, {-one, gamma, zero, zero});
  m.unit = unit_vec(4, 0);

  const Scalar half(1, 2);
  a.coaction = Matrix(32, 4);
  a.coaction(0, 0) = 1;
  a.coaction(3 * 4 + 1, 1) = 1;
  // X in the basis (v, -w): the table above is multiplicative for this sign only.
  // lambda(v) = 1/2 [(z + zx) (x) v - (z - zx) (x) w]
  a.coaction(4 * 4 + 2, 2) = half;
  a.coaction(5 * 4 + 2, 2) = half;
  a.coaction(4 * 4 + 3, 2) = -half;
  a.coaction(5 * 4 + 3, 2) = half;
  // lambda(w) = 1/2 [-(zy - zxy) (x) v + (zy + zxy) (x) w]
  a.coaction(6 * 4 + 2, 3) = -half;
  a.coaction(7 * 4 + 2, 3) = half;
  a.coaction(6 * 4 + 3, 3) = half;
  a.coaction(7 * 4 + 3, 3) = half;
  return a;
}

ComoduleAlgebra build_a_xy_gamma(const Scalar& gamma) {
  if (gamma * gamma != Scalar(-1))
    throw Error(ErrorKind::GammaNotPrimitiveFourthRoot, "gamma = " + gamma.str() + " does not satisfy gamma^2 = -1");
  ComoduleAlgebra a = build_a_xy_gamma_unchecked(gamma);
  require_valid(a);
  return a;
}

// ---------------------------------------------------------------------------

namespace {

// (t # a)(s # b) = t (a_(-1) . s) # a_(0) b
Algebra smash_algebra(const SmashInput& in, const ComoduleAlgebra& a0) {
  const Algebra& r = in.b;
  const size_t nr = r.dim, na = a0.dim(), m = in.h0->dim();
  std::vector<std::string> labels;
  for (size_t t = 0; t < nr; ++t)
    for (size_t a = 0; a < na; ++a) labels.push_back(r.labels[t] + "#" + a0.alg.labels[a]);
  Algebra out(nr * na, labels);
  for (size_t t = 0; t < nr; ++t)
    for (size_t a = 0; a < na; ++a) {
      const Vec la = a0.coaction.col(a);
      for (size_t s = 0; s < nr; ++s)
        for (size_t b = 0; b < na; ++b) {
          Vec prod(nr * na);
          for (size_t h = 0; h < m; ++h)
            for (size_t a1 = 0; a1 < na; ++a1) {
              const Scalar& c = la[h * na + a1];
              if (c.is_zero()) continue;
              Vec ts = r.product(r.basis(t), in.action[h].col(s));
              Vec ab = a0.alg.basis_product(a1, b);
              prod = prod + c * kron(ts, ab);
            }
          out.set_product(t * na + a, s * na + b, prod);
        }
    }
  out.unit = kron(r.unit, a0.alg.unit);
  return out;
}

// lambda(t # a) = t^(1) # (t^(2))_(-1) a_(-1) (x) (t^(2))_(0) # a_(0)
Matrix smash_coaction(const SmashInput& in, const ComoduleAlgebra& a0) {
  const Algebra& r = in.b;
  const HopfAlgebra& h0 = *in.h0;
  const size_t nr = r.dim, na = a0.dim(), m = h0.dim();
  const size_t nh = nr * m, n = nr * na;
  Matrix out(nh * n, n);
  for (size_t t = 0; t < nr; ++t)
    for (size_t a = 0; a < na; ++a) {
      const size_t col = t * na + a;
      for (size_t t1 = 0; t1 < nr; ++t1)
        for (size_t t2 = 0; t2 < nr; ++t2) {
          const Scalar& c1 = in.b_comult(t1 * nr + t2, t);
          if (c1.is_zero()) continue;
          for (size_t g = 0; g < m; ++g)
            for (size_t t3 = 0; t3 < nr; ++t3) {
              const Scalar& c2 = in.b_coaction(g * nr + t3, t2);
              if (c2.is_zero()) continue;
              for (size_t k = 0; k < m; ++k)
                for (size_t a1 = 0; a1 < na; ++a1) {
                  const Scalar& c3 = a0.coaction(k * na + a1, a);
                  if (c3.is_zero()) continue;
                  Vec gk = h0.alg.basis_product(g, k);
                  for (size_t hh = 0; hh < m; ++hh)
                    if (!gk[hh].is_zero())
                      out((t1 * m + hh) * n + t3 * na + a1, col) += c1 * c2 * c3 * gk[hh];
                }
            }
        }
    }
  return out;
}

void check_smash_input(const SmashInput& in) {
  if (!in.h0) throw Error(ErrorKind::InvalidInput, "smash input without H0");
  const HopfAlgebra& h0 = *in.h0;
  const size_t m = h0.dim(), nr = in.b.dim;
  if (in.action.size() != m || in.degree.size() != nr || in.b_counit.size() != nr ||
      in.b_comult.rows() != nr * nr || in.b_comult.cols() != nr || in.b_coaction.rows() != m * nr ||
      in.b_antipode.rows() != nr || in.a0.dim() == 0 || !in.a0.hopf || in.a0.hopf->dim() != m)
    throw Error(ErrorKind::DimensionMismatch, "smash input shapes");
  const Matrix I = Matrix::identity(nr);
  if (!check_algebra(in.b).ok()) throw Error(ErrorKind::NotModuleAlgebra, "R is not an algebra");
  Matrix act_unit(nr, nr);
  for (size_t h = 0; h < m; ++h) act_unit = act_unit + in.action[h] * h0.alg.unit[h];
  if (act_unit != I) throw Error(ErrorKind::NotModuleAlgebra, "1 does not act as the identity");
  for (size_t g = 0; g < m; ++g)
    for (size_t k = 0; k < m; ++k) {
      Vec gk = h0.alg.basis_product(g, k);
      Matrix lhs(nr, nr);
      for (size_t h = 0; h < m; ++h) lhs = lhs + in.action[h] * gk[h];
      if (lhs != in.action[g] * in.action[k]) throw Error(ErrorKind::NotModuleAlgebra, "action is not a module");
    }
  for (size_t h = 0; h < m; ++h) {
    if (in.action[h] * in.b.unit != h0.coalg.counit[h] * in.b.unit)
      throw Error(ErrorKind::NotModuleAlgebra, "h . 1 != eps(h) 1");
    for (size_t s = 0; s < nr; ++s)
      for (size_t t = 0; t < nr; ++t) {
        Vec rhs(nr);
        for (size_t h1 = 0; h1 < m; ++h1)
          for (size_t h2 = 0; h2 < m; ++h2) {
            const Scalar& c = h0.coalg.d(h, h1, h2);
            if (!c.is_zero())
              rhs = rhs + c * in.b.product(in.action[h1].col(s), in.action[h2].col(t));
          }
        if (in.action[h] * in.b.basis_product(s, t) != rhs)
          throw Error(ErrorKind::NotModuleAlgebra, "h . (st) != (h1 . s)(h2 . t)");
      }
  }
  ComoduleAlgebra rc{"R", in.b, in.h0, in.b_coaction};
  if (!check_comodule_algebra(rc).ok()) throw Error(ErrorKind::NotModuleAlgebra, "R is not an H0-comodule algebra");
}

LoewyGrading degree_grading(const std::vector<size_t>& degree, size_t inner) {
  size_t top = 0;
  for (size_t d : degree) top = std::max(top, d);
  const size_t n = degree.size() * inner;
  LoewyGrading g;
  for (size_t k = 0; k <= top; ++k) {
    Subspace s(n);
    for (size_t t = 0; t < degree.size(); ++t)
      if (degree[t] == k)
        for (size_t a = 0; a < inner; ++a) s.insert(unit_vec(n, t * inner + a));
    g.degrees.push_back(s);
  }
  return g;
}

}  // namespace

SmashResult smash_product(const SmashInput& in) {
  check_smash_input(in);
  const HopfAlgebra& h0 = *in.h0;
  const size_t m = h0.dim(), nr = in.b.dim;
  ComoduleAlgebra reg = regular(in.h0);

  auto h = std::make_shared<HopfAlgebra>();
  h->name = "R#" + h0.name;
  h->alg = smash_algebra(in, reg);
  const size_t nh = nr * m;
  Matrix delta = smash_coaction(in, reg);
  h->coalg = Coalgebra(nh);
  for (size_t i = 0; i < nh; ++i) h->coalg.set_delta(i, delta.col(i));
  for (size_t t = 0; t < nr; ++t)
    for (size_t g = 0; g < m; ++g) h->coalg.counit[t * m + g] = in.b_counit[t] * h0.coalg.counit[g];
  // S(t # g) = (1 # S0(t_(-1) g)) (S_R(t_(0)) # 1)
  h->antipode = Matrix(nh, nh);
  for (size_t t = 0; t < nr; ++t)
    for (size_t g = 0; g < m; ++g) {
      Vec s(nh);
      for (size_t k = 0; k < m; ++k)
        for (size_t t0 = 0; t0 < nr; ++t0) {
          const Scalar& c = in.b_coaction(k * nr + t0, t);
          if (c.is_zero()) continue;
          Vec left = kron(in.b.unit, h0.antipode * h0.alg.basis_product(k, g));
          Vec right = kron(in.b_antipode.col(t0), h0.alg.unit);
          s = s + c * h->alg.product(left, right);
        }
      h->antipode.set_col(t * m + g, s);
    }
  HopfReport hr = check_hopf(*h);
  if (!hr.ok())
    throw Error(ErrorKind::InvalidInput, "bosonization fails Hopf axioms: " + hr.failures.front());

  SmashResult out;
  out.hopf = h;
  out.algebra.name = "R#" + in.a0.name;
  out.algebra.hopf = h;
  out.algebra.alg = smash_algebra(in, in.a0);
  out.algebra.coaction = smash_coaction(in, in.a0);
  require_valid(out.algebra);
  out.grading = degree_grading(in.degree, in.a0.dim());
  out.hopf_grading = degree_grading(in.degree, m);
  return out;
}

SmashInput sweedler_input(const ComoduleAlgebra& a0) {
  if (!a0.hopf || a0.hopf->dim() != 2) throw Error(ErrorKind::DimensionMismatch, "Sweedler data needs A0 over k[Z/2]");
  SmashInput in;
  in.h0 = a0.hopf;
  in.a0 = a0;
  in.b = Algebra(2, {"1", "v"});
  in.b.m(0, 0, 0) = 1;
  in.b.m(0, 1, 1) = 1;
  in.b.m(1, 0, 1) = 1;
  in.b.unit = unit_vec(2, 0);
  in.degree = {0, 1};
  in.action = {Matrix::identity(2), Matrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}}, 2)};
  in.b_coaction = Matrix(4, 2);
  in.b_coaction(0, 0) = 1;
  in.b_coaction(1 * 2 + 1, 1) = 1;
  in.b_comult = Matrix(4, 2);
  in.b_comult(0, 0) = 1;
  in.b_comult(1 * 2 + 0, 1) = 1;
  in.b_comult(0 * 2 + 1, 1) = 1;
  in.b_counit = {Scalar(1), Scalar(0)};
  in.b_antipode = Matrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}}, 2);
  return in;
}

// ---------------------------------------------------------------------------

std::vector<ComoduleAlgebra> catalog() {
  std::vector<ComoduleAlgebra> out;
  out.push_back(coideal_generated(kp(), {}, "k"));
  out.push_back(group_coideal({"x"}, "ga_x"));
  out.push_back(group_coideal({"y"}, "ga_y"));
  out.push_back(group_coideal({"xy"}, "ga_xy"));
  out.push_back(group_coideal({"x", "y"}, "ga_K"));
  ComoduleAlgebra a = build_a_xy_gamma(Scalar::imag_unit(default_field()));
  a.name = "a_xy_i";
  out.push_back(a);
  out.push_back(regular(kp(), "kp"));
  out.push_back(build_twisted_group_algebra(Cocycle::klein_sign(), "kpsi"));
  return out;
}

ComoduleAlgebra catalog_entry(const std::string& name) {
  for (auto& a : catalog())
    if (a.name == name) return a;
  throw Error(ErrorKind::InvalidInput, "no catalog entry " + name);
}

Comodule comodule_x() {
  Comodule c;
  c.hopf = kp();
  c.dim = 2;
  c.labels = {"v", "w"};
  c.coaction = Matrix(16, 2);
  const Scalar half(1, 2);
  c.coaction(4 * 2 + 0, 0) = half;
  c.coaction(5 * 2 + 0, 0) = half;
  c.coaction(4 * 2 + 1, 0) = half;
  c.coaction(5 * 2 + 1, 0) = -half;
  c.coaction(6 * 2 + 0, 1) = half;
  c.coaction(7 * 2 + 0, 1) = -half;
  c.coaction(6 * 2 + 1, 1) = half;
  c.coaction(7 * 2 + 1, 1) = half;
  return c;
}

EquivariantModule build_bimodule_V(const std::string& target) {
  EquivariantModule p;
  p.comodule = comodule_x();
  const Matrix ex = Matrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}}, 2);
  const Matrix ey = Matrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}, 2);
  if (target == "kpsi") {
    p.acting = build_twisted_group_algebra(Cocycle::klein_sign(), "kpsi");
    // v.e_xy = (v.e_x).e_y
    p.action = {Matrix::identity(2), ex, ey, ey * ex};
  } else if (target == "ga_x") {
    p.acting = group_coideal({"x"}, "ga_x");
    p.action = {Matrix::identity(2), ex};
  } else {
    throw Error(ErrorKind::InvalidInput, "build_bimodule_V target must be kpsi or ga_x");
  }
  EquivariantReport r = check_equivariant(p);
  if (!r.ok()) throw Error(ErrorKind::InvalidInput, "V fails equivariance: " + r.failures.front());
  return p;
}

}  // namespace hk
