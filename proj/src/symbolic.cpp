#include "hopfkit/symbolic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "hopfkit/constructions.hpp"
#include "hopfkit/exactness.hpp"
#include "hopfkit/morita.hpp"

namespace hk {

ExtKind parse_ext_kind(const std::string& s) {
  if (s == "trivial" || s == "k") return ExtKind::Trivial;
  if (s == "ga_x") return ExtKind::GaX;
  if (s == "ga_y") return ExtKind::GaY;
  if (s == "ga_xy") return ExtKind::GaXY;
  if (s == "ga_K") return ExtKind::GaK;
  if (s == "kpsi") return ExtKind::Kpsi;
  throw Error(ErrorKind::InvalidKind, "unknown kind '" + s + "'");
}

const char* ext_kind_name(ExtKind k) {
  switch (k) {
    case ExtKind::Trivial: return "trivial";
    case ExtKind::GaX: return "ga_x";
    case ExtKind::GaY: return "ga_y";
    case ExtKind::GaXY: return "ga_xy";
    case ExtKind::GaK: return "ga_K";
    case ExtKind::Kpsi: return "kpsi";
  }
  return "?";
}

std::vector<ExtKind> all_ext_kinds() {
  return {ExtKind::Trivial, ExtKind::GaX, ExtKind::GaY, ExtKind::GaXY, ExtKind::GaK, ExtKind::Kpsi};
}

bool kind_needs_signs(ExtKind k) { return k == ExtKind::GaX || k == ExtKind::GaY || k == ExtKind::GaK || k == ExtKind::Kpsi; }

namespace {

const Field& qi() {
  static const Field f = default_field();
  return f;
}

struct AkData {
  ComoduleAlgebra ak;
  std::vector<size_t> group;  // KP index of the grouplike g with lambda(e_k) = g (x) e_k
};

const AkData& ak_data(ExtKind k) {
  static std::map<ExtKind, AkData> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  AkData d;
  d.ak = catalog_entry(k == ExtKind::Trivial ? "k" : ext_kind_name(k));
  const size_t n = d.ak.dim();
  for (size_t b = 0; b < n; ++b) {
    size_t g = 0;
    for (size_t h = 0; h < 8; ++h)
      if (!d.ak.coaction(h * n + b, b).is_zero()) g = h;
    d.group.push_back(g);
  }
  return cache.emplace(k, std::move(d)).first->second;
}

// X on each pair (v_i, w_i): rows h * 2n + r.
Matrix a2_coaction(size_t n) {
  const size_t m = 2 * n;
  const Scalar half(1, 2);
  Matrix c(8 * m, m);
  for (size_t i = 0; i < n; ++i) {
    const size_t v = i, w = n + i;
    c(4 * m + v, v) = half;
    c(5 * m + v, v) = half;
    c(4 * m + w, v) = -half;
    c(5 * m + w, v) = half;
    c(6 * m + v, w) = -half;
    c(7 * m + v, w) = half;
    c(6 * m + w, w) = half;
    c(7 * m + w, w) = half;
  }
  return c;
}

// All L (m x m) with Lambda L = (M (x) L) Lambda, flattened row-major.
Subspace twisted_colinear(const Matrix& lam, const Matrix& mg, size_t m) {
  const size_t unknowns = m * m;
  std::vector<Vec> rows;
  for (size_t h = 0; h < 8; ++h)
    for (size_t r = 0; r < m; ++r)
      for (size_t c = 0; c < m; ++c) {
        Vec row = zero_vec(unknowns);
        for (size_t k = 0; k < m; ++k)
          if (!lam(h * m + r, k).is_zero()) row[k * m + c] += lam(h * m + r, k);
        for (size_t hp = 0; hp < 8; ++hp) {
          if (mg(h, hp).is_zero()) continue;
          for (size_t k = 0; k < m; ++k)
            if (!lam(hp * m + k, c).is_zero()) row[r * m + k] -= mg(h, hp) * lam(hp * m + k, c);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  return kernel(Matrix::from_rows(rows, unknowns));
}

// Completes prescribed V-columns (m x n) to a member of `space`.
class Completer {
 public:
  Completer(const Subspace& space, size_t n) : n_(n), image_(2 * n * n) {
    const size_t m = 2 * n;
    std::vector<Vec> cols, full;
    for (const Vec& b : space.basis()) {
      Vec proj;
      for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < n; ++c) proj.push_back(b[r * m + c]);
      if (image_.insert(proj)) {
        cols.push_back(std::move(proj));
        full.push_back(b);
      }
    }
    // lift_[k]: an element of `space` whose projection is image_.basis()[k]
    if (cols.empty()) return;
    const Matrix p = Matrix::from_cols(cols, m * n);
    for (const Vec& e : image_.basis()) {
      Vec c = *solve(p, e);
      Vec l = zero_vec(m * m);
      for (size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) l = l + c[k] * full[k];
      lift_.push_back(std::move(l));
    }
  }

  std::optional<Matrix> complete(const Matrix& vcols) const {
    const size_t m = 2 * n_;
    Vec target;
    for (size_t r = 0; r < m; ++r)
      for (size_t c = 0; c < n_; ++c) target.push_back(vcols(r, c));
    if (!image_.contains(target)) return std::nullopt;
    const Vec coords = image_.coordinates(target);
    Vec out = zero_vec(m * m);
    for (size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) out = out + coords[k] * lift_[k];
    return Matrix::unflatten(out, m, m);
  }

 private:
  size_t n_;
  Subspace image_;
  std::vector<Vec> lift_;
};

enum class Shape { Diagonal, Paired, DiagonalToW };

// V-columns for every choice of values (and pairing when Paired).
std::vector<Matrix> v_columns(size_t n, Shape shape, const std::vector<Scalar>& values, const std::vector<Scalar>& diag) {
  std::vector<Matrix> out;
  if (shape == Shape::Diagonal) {
    Matrix c(2 * n, n);
    for (size_t i = 0; i < n; ++i) c(i, i) = diag[i];
    out.push_back(std::move(c));
    return out;
  }
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const size_t combos = static_cast<size_t>(std::pow(values.size(), n));
    for (size_t code = 0; code < combos; ++code) {
      Matrix c(2 * n, n);
      size_t rest = code;
      for (size_t i = 0; i < n; ++i) {
        c(n + perm[i], i) = values[rest % values.size()];
        rest /= values.size();
      }
      out.push_back(std::move(c));
    }
    if (shape == Shape::DiagonalToW) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Matrix> generator_candidates(size_t n, size_t kp_group, Side side, Shape shape, const std::vector<Scalar>& values,
                                         const std::vector<Scalar>& diag,
                                         const std::function<bool(const Matrix&)>& keep = nullptr) {
  const size_t m = 2 * n;
  const Matrix lam = a2_coaction(n);
  const Matrix mg = mult_operator(kp()->alg, side, unit_vec(8, kp_group));
  Completer comp(twisted_colinear(lam, mg, m), n);
  const Matrix id = Matrix::identity(m);
  std::vector<Matrix> out;
  for (const Matrix& vc : v_columns(n, shape, values, diag)) {
    if (keep && !keep(vc)) continue;
    auto l = comp.complete(vc);
    if (!l || *l * *l != id) continue;
    out.push_back(std::move(*l));
  }
  return out;
}

// (e_a e_b) p = e_a (e_b p)
bool left_ok(const Algebra& ak, const std::vector<Matrix>& left) {
  const size_t k = ak.dim;
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      Matrix lab(left[0].rows(), left[0].cols());
      for (size_t c = 0; c < k; ++c)
        if (!ak.m(a, b, c).is_zero()) lab = lab + left[c] * ak.m(a, b, c);
      if (left[a] * left[b] != lab) return false;
    }
  return true;
}

// (p e_a) e_b = p (e_a e_b)
bool right_ok(const Algebra& ak, const std::vector<Matrix>& right) {
  const size_t k = ak.dim;
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      Matrix rab(right[0].rows(), right[0].cols());
      for (size_t c = 0; c < k; ++c)
        if (!ak.m(a, b, c).is_zero()) rab = rab + right[c] * ak.m(a, b, c);
      if (right[b] * right[a] != rab) return false;
    }
  return true;
}

// (e_a p) e_b = e_a (p e_b)
bool sides_commute(const std::vector<Matrix>& left, const std::vector<Matrix>& right) {
  for (size_t a = 1; a < left.size(); ++a)
    for (size_t b = 1; b < right.size(); ++b)
      if (left[a] * right[b] != right[b] * left[a]) return false;
  return true;
}

bool bimodule_ok(const Algebra& ak, const std::vector<Matrix>& left, const std::vector<Matrix>& right) {
  return left_ok(ak, left) && right_ok(ak, right) && sides_commute(left, right);
}

std::string matrix_label(const std::string& name, const Matrix& l, size_t n) {
  std::string s = name + ":";
  for (size_t i = 0; i < n; ++i) {
    s += " v" + std::to_string(i + 1) + "->";
    bool first = true;
    for (size_t r = 0; r < 2 * n; ++r) {
      if (l(r, i).is_zero()) continue;
      if (!first) s += "+";
      first = false;
      s += "(" + l(r, i).str() + ")" + (r < n ? "v" : "w") + std::to_string(r % n + 1);
    }
  }
  return s;
}

std::vector<Scalar> sign_vector(const std::vector<SignPair>& signs, bool first) {
  std::vector<Scalar> out;
  for (const auto& s : signs) out.push_back(Scalar(static_cast<long>(first ? s.first : s.second)).coerce(qi()));
  return out;
}

void check_signs(ExtKind kind, size_t n2, const std::vector<SignPair>& signs) {
  if (!kind_needs_signs(kind)) {
    if (!signs.empty()) throw Error(ErrorKind::InvalidInput, std::string(ext_kind_name(kind)) + " takes no signs");
    return;
  }
  if (signs.size() != n2) throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(n2) + " sign pairs");
  for (const auto& [a, b] : signs)
    if ((a != 1 && a != -1) || (b != 1 && b != -1)) throw Error(ErrorKind::InvalidInput, "signs must be +1 or -1");
}

std::string symbol(char tag, size_t i, size_t j) {
  static const char* names[] = {"alpha", "beta", "gamma", "delta"};
  return std::string(names[static_cast<size_t>(tag)]) + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

std::vector<ActionForm> action_forms(ExtKind kind, size_t n2, const std::vector<SignPair>& signs) {
  check_signs(kind, n2, signs);
  std::vector<ActionForm> out;
  const size_t m = 2 * n2;
  if (kind == ExtKind::Trivial || n2 == 0) {
    out.push_back(ActionForm{{}, {}, "trivial"});
    return out;
  }
  const AkData& d = ak_data(kind);
  const Algebra& ak = d.ak.alg;
  const Scalar one = Scalar(1).coerce(qi()), i = Scalar::imag_unit(qi());
  const std::vector<Scalar> pm{one, -one, i, -i};
  const std::vector<Scalar> a = sign_vector(signs, true), b = sign_vector(signs, false);
  const Matrix id = Matrix::identity(m);

  auto emit = [&](const std::vector<Matrix>& left, const std::vector<Matrix>& right, bool sides_checked = false) {
    if (sides_checked ? !sides_commute(left, right) : !bimodule_ok(ak, left, right)) return;
    ActionForm f;
    for (size_t k = 1; k < ak.dim; ++k) {
      f.left[k] = left[k];
      f.right[k] = right[k];
      if (!f.label.empty()) f.label += "; ";
      f.label += matrix_label("L_" + ak.labels[k], left[k], n2) + "; " + matrix_label("R_" + ak.labels[k], right[k], n2);
    }
    out.push_back(std::move(f));
  };

  if (kind == ExtKind::GaX || kind == ExtKind::GaY) {
    const size_t g = d.group[1];
    const bool x = kind == ExtKind::GaX;
    auto perm = generator_candidates(n2, g, x ? Side::Left : Side::Right, Shape::Paired, pm, {});
    auto diag = generator_candidates(n2, g, x ? Side::Right : Side::Left, Shape::Diagonal, {}, x ? a : b);
    for (const Matrix& p : perm)
      for (const Matrix& q : diag) emit({id, x ? p : q}, {id, x ? q : p});
  } else if (kind == ExtKind::GaXY) {
    const size_t g = d.group[1];
    auto lefts = generator_candidates(n2, g, Side::Left, Shape::DiagonalToW, {i, -i}, {});
    auto rights = generator_candidates(n2, g, Side::Right, Shape::DiagonalToW, {i, -i}, {});
    for (const Matrix& l : lefts)
      for (const Matrix& r : rights) emit({id, l}, {id, r});
  } else {
    const size_t gx = d.group[1], gy = d.group[2];
    auto ly = generator_candidates(n2, gy, Side::Left, Shape::Diagonal, {}, b);
    auto rx = generator_candidates(n2, gx, Side::Right, Shape::Diagonal, {}, a);
    if (ly.empty() || rx.empty()) return out;
    // e_y e_x = q e_x e_y, so L_y L_x = q L_x L_y and R_x R_y = q R_y R_x; on v_i this pins the V-columns
    const Scalar q = ak.m(2, 1, 3) / ak.m(1, 2, 3);
    Matrix db(n2, n2), da(n2, n2);
    for (size_t k = 0; k < n2; ++k) {
      db(k, k) = q * b[k];
      da(k, k) = q * a[k];
    }
    const Matrix lyv = ly[0], rxv = rx[0];
    auto lx = generator_candidates(n2, gx, Side::Left, Shape::Paired, pm, {},
                                   [&](const Matrix& vc) { return lyv * vc == vc * db; });
    auto ry = generator_candidates(n2, gy, Side::Right, Shape::Paired, pm, {},
                                   [&](const Matrix& vc) { return rxv * vc == vc * da; });
    std::vector<std::vector<Matrix>> lefts, rights;
    for (const Matrix& l : lx) {
      std::vector<Matrix> left{id, l, ly[0], l * ly[0]};
      if (left_ok(ak, left) && l * rx[0] == rx[0] * l) lefts.push_back(std::move(left));
    }
    for (const Matrix& r : ry) {
      std::vector<Matrix> right{id, rx[0], r, r * rx[0]};
      if (right_ok(ak, right) && r * ly[0] == ly[0] * r) rights.push_back(std::move(right));
    }
    for (const auto& l : lefts)
      for (const auto& r : rights) emit(l, r, true);
  }
  return out;
}

std::vector<ActionForm> form_orbit_representatives(const std::vector<ActionForm>& forms, size_t n2) {
  const Scalar one = Scalar(1).coerce(qi()), i = Scalar::imag_unit(qi());
  const std::vector<Scalar> units{one, i, -one, -i};  // i^0 .. i^3
  size_t total = 1;
  for (size_t k = 0; k < n2; ++k) total *= 4;
  std::set<std::vector<int>> seen;
  std::vector<ActionForm> out;
  for (const ActionForm& f : forms) {
    // (generator, row, col, exponent) per nonzero entry; a non-unit entry keeps the form as is
    std::vector<std::array<int, 4>> entries;
    bool units_only = true;
    int g = 0;
    for (const auto* side : {&f.left, &f.right})
      for (const auto& [k, m] : *side) {
        for (size_t r = 0; r < m.rows(); ++r)
          for (size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c).is_zero()) continue;
            auto it = std::find(units.begin(), units.end(), m(r, c));
            if (it == units.end()) units_only = false;
            entries.push_back({g, static_cast<int>(r), static_cast<int>(c), static_cast<int>(it - units.begin())});
          }
        ++g;
      }
    if (!units_only) {
      out.push_back(f);
      continue;
    }
    std::vector<int> best;
    for (size_t code = 0; code < total; ++code) {
      std::vector<int> e(n2);
      size_t rest = code;
      for (size_t k = 0; k < n2; ++k, rest /= 4) e[k] = static_cast<int>(rest % 4);
      std::vector<int> key;
      for (const auto& [gen, r, c, x] : entries) {
        key.insert(key.end(), {gen, r, c, ((x + e[c % n2] - e[r % n2]) % 4 + 4) % 4});
      }
      if (code == 0 || key < best) best = std::move(key);
    }
    if (seen.insert(best).second) out.push_back(f);
  }
  return out;
}

std::vector<MultiPoly> GenericExtension::basis_vec(size_t i) const {
  std::vector<MultiPoly> v(dim());
  v[i] = MultiPoly(Scalar(1));
  return v;
}

std::vector<MultiPoly> GenericExtension::product(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) const {
  const size_t n = dim();
  std::vector<MultiPoly> out(n);
  for (size_t p = 0; p < n; ++p) {
    if (a[p].is_zero()) continue;
    for (size_t q = 0; q < n; ++q) {
      if (b[q].is_zero()) continue;
      const auto& t = table[p * n + q];
      MultiPoly ab = a[p] * b[q];
      for (size_t k = 0; k < n; ++k)
        if (!t[k].is_zero()) out[k] += ab * t[k];
    }
  }
  return out;
}

GenericExtension generic_extension(ExtKind kind, size_t n2, const std::vector<SignPair>& signs, const std::optional<ActionForm>& form) {
  check_signs(kind, n2, signs);
  GenericExtension g;
  g.kind = kind;
  g.n2 = n2;
  g.signs = signs;
  const AkData& d = ak_data(kind);
  const Algebra& ak = d.ak.alg;
  g.k_dim = ak.dim;
  g.labels = ak.labels;
  for (size_t i = 0; i < n2; ++i) g.labels.push_back("v" + std::to_string(i + 1));
  for (size_t i = 0; i < n2; ++i) g.labels.push_back("w" + std::to_string(i + 1));
  if (form) {
    g.form = form;
  } else {
    auto forms = action_forms(kind, n2, signs);
    if (!forms.empty()) g.form = forms.front();
  }
  const size_t n = g.dim(), k = g.k_dim, m = 2 * n2;
  g.table.assign(n * n, std::vector<MultiPoly>(n));

  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      for (size_t c = 0; c < k; ++c)
        if (!ak.m(i, j, c).is_zero()) g.table[i * n + j][c] = MultiPoly(ak.m(i, j, c));
  for (size_t p = 0; p < m; ++p) {
    g.table[0 * n + k + p][k + p] = MultiPoly(Scalar(1));
    g.table[(k + p) * n + 0][k + p] = MultiPoly(Scalar(1));
  }
  if (g.form) {
    for (const auto& [e, l] : g.form->left)
      for (size_t p = 0; p < m; ++p)
        for (size_t r = 0; r < m; ++r)
          if (!l(r, p).is_zero()) g.table[e * n + k + p][k + r] = MultiPoly(l(r, p));
    for (const auto& [e, rm] : g.form->right)
      for (size_t p = 0; p < m; ++p)
        for (size_t r = 0; r < m; ++r)
          if (!rm(r, p).is_zero()) g.table[(k + p) * n + e][k + r] = MultiPoly(rm(r, p));
  }

  // v_i v_j = sum_c s_c e_c; the other three products follow from the coaction:
  // sign of e_c in (v w, w v, w w) by the grouplike of e_c.
  static const int sign_table[4][3] = {{-1, -1, -1}, {1, -1, 1}, {-1, 1, 1}, {1, 1, -1}};
  std::set<std::string> syms;
  for (size_t i = 0; i < n2; ++i)
    for (size_t j = 0; j < n2; ++j) {
      std::vector<MultiPoly> vv(k);
      if (kind == ExtKind::GaK || kind == ExtKind::Kpsi) {
        const MultiPoly alpha = MultiPoly::var(symbol(0, i, j));
        syms.insert(symbol(0, i, j));
        Vec left = ak.unit + Scalar(static_cast<long>(signs[i].second)) * ak.basis(2);
        Vec right = ak.unit + Scalar(static_cast<long>(signs[j].first)) * ak.basis(1);
        Vec mu = ak.product(left, right);
        for (size_t c = 0; c < k; ++c)
          if (!mu[c].is_zero()) vv[c] = alpha * MultiPoly(mu[c]);
      } else {
        for (size_t c = 0; c < k; ++c) {
          const size_t tag = d.group[c];  // 0..3 for 1, x, y, xy
          vv[c] = MultiPoly::var(symbol(static_cast<char>(tag), i, j));
          syms.insert(symbol(static_cast<char>(tag), i, j));
        }
      }
      const size_t vi = g.v(i), vj = g.v(j), wi = g.w(i), wj = g.w(j);
      for (size_t c = 0; c < k; ++c) {
        const size_t grp = d.group[c];
        g.table[vi * n + vj][c] = vv[c];
        g.table[vi * n + wj][c] = vv[c] * MultiPoly(Scalar(static_cast<long>(sign_table[grp][0])));
        g.table[wi * n + vj][c] = vv[c] * MultiPoly(Scalar(static_cast<long>(sign_table[grp][1])));
        g.table[wi * n + wj][c] = vv[c] * MultiPoly(Scalar(static_cast<long>(sign_table[grp][2])));
      }
    }
  g.symbols.assign(syms.begin(), syms.end());

  g.coaction = Matrix(8 * n, n);
  for (size_t h = 0; h < 8; ++h) {
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) g.coaction(h * n + r, c) = d.ak.coaction(h * k + r, c);
  }
  const Matrix lam = a2_coaction(n2);
  for (size_t h = 0; h < 8; ++h)
    for (size_t r = 0; r < m; ++r)
      for (size_t c = 0; c < m; ++c) g.coaction(h * n + k + r, k + c) = lam(h * m + r, c);
  return g;
}

namespace {

void collect(std::vector<MultiPoly>& out, std::set<std::string>& seen, const MultiPoly& p) {
  if (p.is_zero()) return;
  MultiPoly q = p.monic();
  if (seen.insert(q.str()).second) out.push_back(std::move(q));
}

}  // namespace

std::vector<MultiPoly> associativity_constraints(const GenericExtension& g) {
  if (!g.form) return {MultiPoly(Scalar(1))};
  const size_t n = g.dim();
  std::vector<MultiPoly> out;
  std::set<std::string> seen;
  const size_t k = g.k_dim;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const auto& ij = g.basis_product(i, j);
      for (size_t l = 0; l < n; ++l) {
        if (i < k && j < k && l < k) continue;  // A_K is associative
        const auto& jl = g.basis_product(j, l);
        std::vector<MultiPoly> diff(n);
        for (size_t c = 0; c < n; ++c) {
          if (!ij[c].is_zero())
            for (size_t d = 0; d < n; ++d) {
              const MultiPoly& t = g.table[c * n + l][d];
              if (!t.is_zero()) diff[d] += ij[c] * t;
            }
          if (!jl[c].is_zero())
            for (size_t d = 0; d < n; ++d) {
              const MultiPoly& t = g.table[i * n + c][d];
              if (!t.is_zero()) diff[d] -= jl[c] * t;
            }
        }
        for (const MultiPoly& p : diff) collect(out, seen, p);
      }
    }
  return out;
}

std::vector<MultiPoly> coaction_defects(const GenericExtension& g) {
  const size_t n = g.dim();
  const Algebra& h = kp()->alg;
  std::vector<MultiPoly> out;
  std::set<std::string> seen;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      // lambda(b_i b_j) in H (x) A
      std::vector<MultiPoly> lhs(8 * n), rhs(8 * n);
      const auto& ij = g.basis_product(i, j);
      for (size_t c = 0; c < n; ++c) {
        if (ij[c].is_zero()) continue;
        for (size_t r = 0; r < 8 * n; ++r)
          if (!g.coaction(r, c).is_zero()) lhs[r] += ij[c] * MultiPoly(g.coaction(r, c));
      }
      for (size_t h1 = 0; h1 < 8; ++h1)
        for (size_t p = 0; p < n; ++p) {
          const Scalar& x = g.coaction(h1 * n + p, i);
          if (x.is_zero()) continue;
          for (size_t h2 = 0; h2 < 8; ++h2)
            for (size_t q = 0; q < n; ++q) {
              const Scalar& y = g.coaction(h2 * n + q, j);
              if (y.is_zero()) continue;
              const auto& pq = g.basis_product(p, q);
              for (size_t hh = 0; hh < 8; ++hh) {
                const Scalar& hm = h.m(h1, h2, hh);
                if (hm.is_zero()) continue;
                const MultiPoly s(x * y * hm);
                for (size_t c = 0; c < n; ++c)
                  if (!pq[c].is_zero()) rhs[hh * n + c] += s * pq[c];
              }
            }
        }
      for (size_t r = 0; r < 8 * n; ++r) collect(out, seen, lhs[r] - rhs[r]);
    }
  return out;
}

std::vector<MultiPoly> product_vanishes(const GenericExtension& g, size_t i, size_t j) {
  std::vector<MultiPoly> out;
  for (const MultiPoly& p : g.basis_product(i, j))
    if (!p.is_zero()) out.push_back(p);
  return out;
}

// ---- linear elimination ----

namespace {

Vec linear_coords(const MultiPoly& p, const std::vector<std::string>& vars) {
  if (p.degree() > 1) throw Error(ErrorKind::NonlinearResidue, "nonlinear constraint " + p.str());
  Vec v = zero_vec(vars.size() + 1);
  for (const auto& [mono, c] : p.terms()) {
    if (mono.empty()) {
      v[vars.size()] = c;
      continue;
    }
    auto it = std::lower_bound(vars.begin(), vars.end(), mono[0].first);
    v[static_cast<size_t>(it - vars.begin())] = c;
  }
  return v;
}

}  // namespace

VanishingResult forces_vanishing(const std::vector<MultiPoly>& constraints, const std::vector<MultiPoly>& targets) {
  std::set<std::string> vs;
  for (const auto& p : constraints)
    for (const auto& v : p.variables()) vs.insert(v);
  for (const auto& p : targets)
    for (const auto& v : p.variables()) vs.insert(v);
  const std::vector<std::string> vars(vs.begin(), vs.end());
  const size_t rows = vars.size() + 1;
  std::vector<Vec> cols;
  for (const auto& p : constraints) cols.push_back(linear_coords(p, vars));
  const Matrix m = cols.empty() ? Matrix(rows, 0) : Matrix::from_cols(cols, rows);

  VanishingResult out;
  auto try_target = [&](const MultiPoly& t) -> std::optional<Certificate> {
    if (cols.empty()) return t.is_zero() ? std::optional<Certificate>(Certificate{t, {}}) : std::nullopt;
    auto c = solve(m, linear_coords(t, vars));
    if (!c) return std::nullopt;
    Certificate cert{t, *c};
    if (!verify_certificate(constraints, cert)) throw Error(ErrorKind::InvalidInput, "certificate failed to verify");
    return cert;
  };
  if (auto c = try_target(MultiPoly(Scalar(1)))) {
    out.contradiction = true;
    out.forced = true;
    out.certificates.push_back(std::move(*c));
    return out;
  }
  out.forced = true;
  for (const MultiPoly& t : targets) {
    if (auto c = try_target(t)) {
      out.certificates.push_back(std::move(*c));
    } else {
      out.forced = false;
      out.unforced.push_back(t);
    }
  }
  return out;
}

bool verify_certificate(const std::vector<MultiPoly>& constraints, const Certificate& c) {
  if (c.coeffs.size() != constraints.size()) return false;
  MultiPoly sum;
  for (size_t k = 0; k < constraints.size(); ++k)
    if (!c.coeffs[k].is_zero()) sum += MultiPoly(c.coeffs[k]) * constraints[k];
  return (sum - c.target).is_zero();
}

ComoduleAlgebra specialize(const GenericExtension& g, const Assignment& values, const Field& f) {
  Assignment all = values;
  for (const auto& s : g.symbols)
    if (!all.count(s)) all[s] = Scalar();
  const size_t n = g.dim();
  ComoduleAlgebra a;
  a.name = std::string(ext_kind_name(g.kind)) + "+A2(" + std::to_string(g.n2) + ")";
  a.hopf = kp();
  a.alg = Algebra(n, g.labels);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec v(n);
      for (size_t c = 0; c < n; ++c) v[c] = g.table[i * n + j][c].evaluate(all).coerce(f);
      a.alg.set_product(i, j, v);
    }
  a.alg.unit = unit_vec(n, 0);
  a.coaction = g.coaction.coerce(f);
  return a;
}

// ---- replays ----

namespace {

std::vector<MultiPoly> symbol_polys(const GenericExtension& g) {
  std::vector<MultiPoly> out;
  for (const auto& s : g.symbols) out.push_back(MultiPoly::var(s));
  return out;
}

std::string signs_str(const std::vector<SignPair>& s) {
  std::string out;
  for (const auto& [a, b] : s) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out.empty() ? "-" : out;
}

std::vector<std::vector<SignPair>> all_signs(size_t n, bool only_first, bool only_second) {
  std::vector<std::vector<SignPair>> out;
  const size_t per = only_first || only_second ? 2 : 4;
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) total *= per;
  for (size_t code = 0; code < total; ++code) {
    std::vector<SignPair> s;
    size_t rest = code;
    for (size_t i = 0; i < n; ++i) {
      const size_t c = rest % per;
      rest /= per;
      int a = 1, b = 1;
      if (only_first) a = c ? -1 : 1;
      else if (only_second) b = c ? -1 : 1;
      else {
        a = (c & 1) ? -1 : 1;
        b = (c & 2) ? -1 : 1;
      }
      s.emplace_back(a, b);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Runs `body` over every admissible form; a sign choice without forms is a vacuous pass.
void over_forms(ReplayReport& rep, ExtKind kind, size_t n2, const std::vector<SignPair>& signs,
                const std::function<void(const GenericExtension&, const std::string&)>& body) {
  auto forms = form_orbit_representatives(action_forms(kind, n2, signs), n2);
  const std::string head = std::string(ext_kind_name(kind)) + " n2=" + std::to_string(n2) + " signs " + signs_str(signs);
  if (forms.empty()) {
    GenericExtension g = generic_extension(kind, n2, signs);
    ReplayCase c;
    c.description = head;
    c.constraints = associativity_constraints(g);
    c.result = forces_vanishing(c.constraints, {});
    c.passed = c.result.contradiction;
    c.detail = "no action of A_K on A_2 is colinear and associative";
    rep.cases.push_back(std::move(c));
    return;
  }
  for (size_t f = 0; f < forms.size(); ++f) body(generic_extension(kind, n2, signs, forms[f]), head + " form " + std::to_string(f + 1));
}

ReplayCase vanish_case(const std::string& description, const std::vector<MultiPoly>& constraints, const std::vector<MultiPoly>& targets) {
  ReplayCase c;
  c.description = description;
  c.result = forces_vanishing(constraints, targets);
  c.constraints = constraints;
  c.passed = c.result.forced;
  if (c.result.contradiction)
    c.detail = "constraints are inconsistent";
  else if (c.passed)
    c.detail = "all " + std::to_string(targets.size()) + " targets forced to 0";
  else
    c.detail = std::to_string(c.result.unforced.size()) + " targets not forced, e.g. " + c.result.unforced[0].str();
  return c;
}

std::vector<MultiPoly> with(std::vector<MultiPoly> base, const std::vector<MultiPoly>& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

ReplayReport replay_null_product(ExtKind kind, size_t n2, const std::vector<std::vector<SignPair>>& sign_sets) {
  ReplayReport rep;
  for (const auto& signs : sign_sets)
    over_forms(rep, kind, n2, signs, [&](const GenericExtension& g, const std::string& head) {
      const auto cons = associativity_constraints(g);
      for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j)
          rep.cases.push_back(vanish_case(head + " v" + std::to_string(i + 1) + "v" + std::to_string(j + 1) + "=0",
                                          with(cons, product_vanishes(g, g.v(i), g.v(j))), symbol_polys(g)));
    });
  return rep;
}

ReplayReport replay_no_hypothesis(ExtKind kind, size_t n2, const std::vector<std::vector<SignPair>>& sign_sets) {
  ReplayReport rep;
  for (const auto& signs : sign_sets)
    over_forms(rep, kind, n2, signs, [&](const GenericExtension& g, const std::string& head) {
      rep.cases.push_back(vanish_case(head, associativity_constraints(g), symbol_polys(g)));
    });
  return rep;
}

const std::vector<SignPair> kClasses{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

ReplayReport replay_group_kp() {
  ReplayReport rep;
  const ComoduleAlgebra target = regular(kp());
  for (const auto& signs : std::vector<std::vector<SignPair>>{{{1, 1}, {-1, -1}}, {{1, -1}, {-1, 1}}}) {
    bool any = false;
    over_forms(rep, ExtKind::GaK, 2, signs, [&](const GenericExtension& g, const std::string& head) {
      ReplayCase c;
      c.description = head + " alpha11=1";
      auto cons = associativity_constraints(g);
      cons.push_back(MultiPoly::var("alpha11") - MultiPoly(Scalar(1)));
      SolveResult sol = solve_polynomial_system(cons, qi());
      if (sol.solutions.empty()) {
        c.passed = true;
        c.detail = "no solution";
        rep.cases.push_back(std::move(c));
        return;
      }
      any = true;
      if (sol.solutions.size() != 1 || !sol.solutions[0].free.empty()) {
        c.detail = "solution not unique";
        rep.cases.push_back(std::move(c));
        return;
      }
      Assignment vals = sol.solutions[0].at({});
      ComoduleAlgebra a = specialize(g, vals);
      std::string values;
      for (const auto& [k, v] : vals) values += " " + k + "=" + v.str();
      if (!check_comodule_algebra(a).ok()) {
        c.detail = "specialization is not a comodule algebra:" + values;
      } else {
        IsoSearch iso = colinear_iso_search(a, target);
        c.passed = iso.iso.has_value();
        c.detail = values + (c.passed ? "; isomorphic to KP" : "; " + iso.reason);
      }
      rep.cases.push_back(std::move(c));
    });
    if (!any) {
      ReplayCase c;
      c.description = "ga_K n2=2 signs " + signs_str(signs);
      c.detail = "no algebra found to compare";
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

ReplayReport replay_eight_dim() {
  ReplayReport rep;
  over_forms(rep, ExtKind::GaK, 4, kClasses, [&](const GenericExtension& g, const std::string& head) {
    const auto cons = associativity_constraints(g);
    rep.cases.push_back(vanish_case(head + " step alpha12", cons, {MultiPoly::var("alpha12")}));
    rep.cases.push_back(vanish_case(head + " all", cons, symbol_polys(g)));
  });
  return rep;
}

ReplayReport replay_class_dim() {
  ReplayReport rep;
  for (const SignPair& s : kClasses) {
    const SignPair t{-s.first, -s.second};
    const std::vector<SignPair> signs{s, s, t, t};
    over_forms(rep, ExtKind::GaK, 4, signs, [&](const GenericExtension& g, const std::string& head) {
      rep.cases.push_back(vanish_case(head + " v1v2=0", with(associativity_constraints(g), product_vanishes(g, g.v(0), g.v(1))),
                                      symbol_polys(g)));
    });
  }
  return rep;
}

ReplayReport replay_no_ext_xy_kinds() {
  ReplayReport rep;
  auto merge = [&](ReplayReport r) {
    for (auto& c : r.cases) rep.cases.push_back(std::move(c));
  };
  for (size_t n2 : {1u, 2u}) {
    merge(replay_no_hypothesis(ExtKind::Trivial, n2, {{}}));
    merge(replay_no_hypothesis(ExtKind::GaX, n2, all_signs(n2, true, false)));
    merge(replay_no_hypothesis(ExtKind::GaY, n2, all_signs(n2, false, true)));
  }
  return rep;
}

struct ReplayDef {
  std::string name;
  std::string claim;
  std::function<ReplayReport()> run;
};

const std::vector<ReplayDef>& replays() {
  static const std::vector<ReplayDef> defs{
      {"null-product-group", "over ga_K, any vanishing product v_i v_j forces A_2 A_2 = 0",
       [] {
         std::vector<std::vector<SignPair>> sets;
         for (const auto& s : all_signs(2, false, false)) sets.push_back(s);
         return replay_null_product(ExtKind::GaK, 2, sets);
       }},
      {"class-dim-bound", "over ga_K, a class V(mu_ab) of dimension 2 with v1 v2 = 0 forces A_2 A_2 = 0",
       [] { return replay_class_dim(); }},
      {"eight-dim-bound", "over ga_K, all four classes present forces alpha12 = 0 and then A_2 A_2 = 0",
       [] { return replay_eight_dim(); }},
      {"group-kp", "over ga_K with one paired class couple, alpha11 = 1 determines an algebra isomorphic to KP",
       [] { return replay_group_kp(); }},
      {"no-ext-x-y", "over k, ga_x, ga_y there is no nonzero A_2 A_2 (n2 = 1, 2)", [] { return replay_no_ext_xy_kinds(); }},
      {"xy-bound", "over ga_xy with n2 = 2, A_2 A_2 = 0",
       [] { return replay_no_hypothesis(ExtKind::GaXY, 2, {{}}); }},
      {"null-product-twisted", "over kpsi, any vanishing product v_i v_j forces A_2 A_2 = 0",
       [] {
         ReplayReport r = replay_null_product(ExtKind::Kpsi, 4, {kClasses});
         ReplayReport r2 = replay_null_product(ExtKind::Kpsi, 2, all_signs(2, false, false));
         for (auto& c : r2.cases) r.cases.push_back(std::move(c));
         return r;
       }},
      {"twisted-no-ext", "over kpsi there is no nonzero A_2 A_2",
       [] {
         ReplayReport r = replay_no_hypothesis(ExtKind::Kpsi, 4, {kClasses});
         ReplayReport r1 = replay_no_hypothesis(ExtKind::Kpsi, 1, all_signs(1, false, false));
         for (auto& c : r1.cases) r.cases.push_back(std::move(c));
         return r;
       }},
  };
  return defs;
}

}  // namespace

std::vector<std::string> replay_names() {
  std::vector<std::string> out;
  for (const auto& s : replays()) out.push_back(s.name);
  return out;
}

ReplayReport replay_lemma(const std::string& name) {
  for (const auto& s : replays()) {
    if (s.name != name) continue;
    ReplayReport rep = s.run();
    rep.name = s.name;
    rep.claim = s.claim;
    rep.passed = !rep.cases.empty();
    for (const auto& c : rep.cases) rep.passed = rep.passed && c.passed;
    return rep;
  }
  throw Error(ErrorKind::InvalidInput, "unknown replay '" + name + "'");
}

// ---- classification for n2 <= 1 ----

Classification classify_n2_le_1() {
  Classification out;
  for (ExtKind kind : all_ext_kinds()) {
    SolutionFamily base;
    base.kind = kind;
    base.n2 = 0;
    base.description = "A_K itself";
    GenericExtension g0 = generic_extension(kind, 0);
    base.members.push_back({{}, "trivial", {}, specialize(g0, {})});
    base.members.back().algebra.name = ext_kind_name(kind);
    out.families.push_back(std::move(base));

    SolutionFamily fam;
    fam.kind = kind;
    fam.n2 = 1;
    const auto sign_sets = kind_needs_signs(kind) ? all_signs(1, kind == ExtKind::GaX, kind == ExtKind::GaY)
                                                  : std::vector<std::vector<SignPair>>{{}};
    for (const auto& signs : sign_sets)
      for (const ActionForm& f : action_forms(kind, 1, signs)) {
        GenericExtension g = generic_extension(kind, 1, signs, f);
        auto cons = associativity_constraints(g);
        // Exactness rules out A_2 A_2 = 0, so alpha11 = 1 after rescaling v_1.
        cons.push_back(MultiPoly::var("alpha11") - MultiPoly(Scalar(1)));
        SolveResult sol = solve_polynomial_system(cons, qi());
        for (const PolySolution& s : sol.solutions) {
          if (!s.free.empty()) throw Error(ErrorKind::NonlinearResidue, "free parameters left in a one-dimensional family");
          FamilyMember mem{signs, f.label, s.at({}), {}};
          mem.algebra = specialize(g, mem.values);
          fam.members.push_back(std::move(mem));
        }
      }
    if (fam.members.empty()) {
      out.empty_cases.push_back(std::string(ext_kind_name(kind)) + " n2=1");
    } else {
      // gamma = -delta11 and the action of e_xy on v_1 is gamma w_1
      std::string desc = "alpha11 = 1";
      if (kind == ExtKind::GaXY) {
        desc += ", delta11 = -gamma, gamma in {";
        for (size_t k = 0; k < fam.members.size(); ++k) {
          const Scalar gamma = -fam.members[k].values.at("delta11");
          desc += (k ? ", " : "") + gamma.str();
        }
        desc += "}";
      }
      fam.description = desc;
      out.families.push_back(std::move(fam));
    }
  }

  // Expected: the six A_K with n2 = 0, plus exactly one n2 = 1 family over ga_xy
  // with gamma^2 = -1 and e_xy v = gamma w.
  bool ok = true;
  std::string detail;
  size_t n1 = 0;
  for (const SolutionFamily& f : out.families) {
    if (f.n2 == 0) continue;
    ++n1;
    if (f.kind != ExtKind::GaXY) {
      ok = false;
      detail += std::string("unexpected family over ") + ext_kind_name(f.kind) + "; ";
      continue;
    }
    for (const FamilyMember& m : f.members) {
      const Scalar gamma = -m.values.at("delta11");
      const Scalar lv = m.algebra.alg.basis_product(1, 2)[3];
      if (gamma * gamma != Scalar(-1) || lv != gamma || !check_comodule_algebra(m.algebra).ok()) {
        ok = false;
        detail += "member with gamma = " + gamma.str() + " is off; ";
      }
    }
  }
  if (n1 != 1) {
    ok = false;
    detail += std::to_string(n1) + " families with n2 = 1; ";
  }
  out.matches_expected = ok;
  out.detail = ok ? "six A_K and one ga_xy family" : detail;
  return out;
}

}  // namespace hk
