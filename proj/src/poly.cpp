#include "hopfkit/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hk {

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

unsigned mono_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

}  // namespace

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

MultiPoly::MultiPoly(const Scalar& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

MultiPoly MultiPoly::var(const std::string& name) {
  MultiPoly p;
  p.terms_[{{name, 1}}] = Scalar(1);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar MultiPoly::constant_term() const { return coeff({}); }

Scalar MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

unsigned MultiPoly::degree_in(const std::string& v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m)
      if (name == v) d = std::max(d, e);
  return d;
}

std::vector<std::string> MultiPoly::variables() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) s.insert(name);
  return {s.begin(), s.end()};
}

bool MultiPoly::has_var(const std::string& v) const { return degree_in(v) > 0; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::substitute(const std::string& v, const MultiPoly& by) const {
  return substitute(std::map<std::string, MultiPoly>{{v, by}});
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& by) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    MultiPoly t(c);
    Monomial rest;
    for (const auto& [name, e] : m) {
      auto it = by.find(name);
      if (it == by.end()) {
        rest.emplace_back(name, e);
        continue;
      }
      for (unsigned k = 0; k < e; ++k) t = t * it->second;
    }
    MultiPoly restp;
    restp.terms_[rest] = Scalar(1);
    r += t * restp;
  }
  return r;
}

Scalar MultiPoly::evaluate(const std::map<std::string, Scalar>& at) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (const auto& [name, e] : m) {
      auto it = at.find(name);
      if (it == at.end()) throw Error(ErrorKind::InvalidInput, "unbound variable " + name);
      t *= it->second.pow(e);
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * MultiPoly(terms_.begin()->second.inv());
}

std::vector<MultiPoly> MultiPoly::in_var(const std::string& v) const {
  std::vector<MultiPoly> out(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    unsigned k = 0;
    for (const auto& [name, e] : m) {
      if (name == v)
        k = e;
      else
        rest.emplace_back(name, e);
    }
    MultiPoly t;
    t.terms_[rest] = c;
    out[k] += t;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.empty()) {
      os << c.str();
    } else if (c.is_one()) {
      os << monomial_str(m);
    } else {
      os << "(" << c.str() << ")*" << monomial_str(m);
    }
  }
  return os.str();
}

// ---- solver ----

namespace {

struct SolverState {
  Field field;
  size_t branches = 0;
  size_t max_branches = 0;
  SolveResult out;
};

using Subs = std::vector<std::pair<std::string, MultiPoly>>;

std::vector<Scalar> scalar_coeffs(const MultiPoly& p, const std::string& v) {
  std::vector<Scalar> c;
  for (const MultiPoly& k : p.in_var(v)) c.push_back(k.constant_term());
  return c;
}

// p(v) / (v - r) for a root r; coefficients low degree first.
std::vector<Scalar> deflate(const std::vector<Scalar>& c, const Scalar& r) {
  std::vector<Scalar> q(c.size() - 1);
  Scalar carry;
  for (size_t k = c.size() - 1; k > 0; --k) {
    carry = c[k] + carry * r;
    q[k - 1] = carry;
  }
  return q;
}

Scalar horner(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar r;
  for (size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

void trim(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

RootSplit split_roots(std::vector<Scalar> c, const Field& f) {
  RootSplit out;
  trim(c);
  auto add = [&](const Scalar& r) {
    for (const Scalar& s : out.roots)
      if (s == r) return;
    out.roots.push_back(r);
  };
  while (c.size() > 1 && c[0].is_zero()) {
    add(Scalar());
    c.erase(c.begin());
  }
  std::vector<Scalar> cand{Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(-1, 2)};
  if (f) {
    const Scalar i = Scalar::imag_unit(f);
    for (const Scalar& s : std::vector<Scalar>(cand)) cand.push_back(i * s);
  }
  bool progress = true;
  while (c.size() > 3 && progress) {
    progress = false;
    for (const Scalar& r : cand) {
      if (horner(c, r).is_zero()) {
        add(r);
        c = deflate(c, r);
        trim(c);
        progress = true;
        break;
      }
    }
  }
  if (c.size() == 2) {
    add(-c[0] / c[1]);
    c = {c[1]};
  } else if (c.size() == 3) {
    Scalar disc = c[1] * c[1] - Scalar(4) * c[0] * c[2];
    if (f) disc = disc.coerce(f);
    if (auto s = try_sqrt(disc)) {
      add((-c[1] + *s) / (Scalar(2) * c[2]));
      add((-c[1] - *s) / (Scalar(2) * c[2]));
      c = {c[2]};
    }
  }
  out.residual = c.size() > 1 ? c : std::vector<Scalar>{};
  return out;
}

namespace {

std::vector<Scalar> univariate_roots(std::vector<Scalar> c, const Field& f, SolveResult& out) {
  RootSplit r = split_roots(std::move(c), f);
  if (r.residual.size() > 1) out.complete = false;
  if (r.residual.size() == 3) {
    const auto& q = r.residual;
    Scalar d = (q[1] * q[1] - Scalar(4) * q[0] * q[2]) / (Scalar(4) * q[2] * q[2]);
    if (std::find(out.needs_sqrt.begin(), out.needs_sqrt.end(), d) == out.needs_sqrt.end()) out.needs_sqrt.push_back(d);
  }
  return r.roots;
}

void apply_sub(std::vector<MultiPoly>& eqs, Subs& subs, const std::string& v, const MultiPoly& by) {
  for (MultiPoly& e : eqs) e = e.substitute(v, by);
  for (auto& [name, p] : subs) p = p.substitute(v, by);
  subs.emplace_back(v, by);
}

void record(SolverState& st, const Subs& subs, const std::vector<std::string>& all_vars) {
  PolySolution sol;
  for (const auto& [v, p] : subs) sol.values[v] = p;
  for (const auto& v : all_vars)
    if (!sol.values.count(v)) sol.free.push_back(v);
  st.out.solutions.push_back(std::move(sol));
}

void solve_rec(SolverState& st, std::vector<MultiPoly> eqs, Subs subs, const std::vector<std::string>& all_vars) {
  if (++st.branches > st.max_branches) {
    st.out.complete = false;
    return;
  }
  std::vector<MultiPoly> live;
  for (MultiPoly& e : eqs) {
    if (e.is_zero()) continue;
    if (e.is_constant()) return;  // inconsistent
    live.push_back(e.monic());
  }
  std::sort(live.begin(), live.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return a.terms().size() < b.terms().size();
  });
  live.erase(std::unique(live.begin(), live.end()), live.end());
  if (live.empty()) {
    record(st, subs, all_vars);
    return;
  }
  // Eliminate a variable occurring linearly with a constant coefficient.
  for (const MultiPoly& e : live) {
    for (const std::string& v : e.variables()) {
      if (e.degree_in(v) != 1) continue;
      std::vector<MultiPoly> parts = e.in_var(v);
      if (!parts[1].is_constant()) continue;
      MultiPoly by = -(parts[0] * MultiPoly(parts[1].constant_term().inv()));
      apply_sub(live, subs, v, by);
      solve_rec(st, std::move(live), std::move(subs), all_vars);
      return;
    }
  }
  // Univariate equations.
  for (const MultiPoly& e : live) {
    std::vector<std::string> vars = e.variables();
    if (vars.size() != 1) continue;
    std::vector<Scalar> roots = univariate_roots(scalar_coeffs(e, vars[0]), st.field, st.out);
    for (const Scalar& r : roots) {
      std::vector<MultiPoly> next = live;
      Subs s2 = subs;
      apply_sub(next, s2, vars[0], MultiPoly(r));
      solve_rec(st, std::move(next), std::move(s2), all_vars);
    }
    return;
  }
  // A common variable factor: v = 0 or the cofactor vanishes.
  for (size_t idx = 0; idx < live.size(); ++idx) {
    const MultiPoly& e = live[idx];
    for (const std::string& v : e.variables()) {
      if (!e.in_var(v)[0].is_zero()) continue;
      std::vector<MultiPoly> a = live;
      Subs sa = subs;
      apply_sub(a, sa, v, MultiPoly());
      solve_rec(st, std::move(a), std::move(sa), all_vars);

      std::vector<MultiPoly> b = live;
      std::vector<MultiPoly> parts = e.in_var(v);
      // e = v * q with q = sum_k parts[k] v^(k-1)
      MultiPoly q, vp = MultiPoly::var(v), pw(Scalar(1));
      for (size_t k = 1; k < parts.size(); ++k) {
        q += parts[k] * pw;
        pw = pw * vp;
      }
      b[idx] = q;
      solve_rec(st, std::move(b), subs, all_vars);
      return;
    }
  }
  st.out.complete = false;
}

}  // namespace

Assignment PolySolution::at(const Assignment& free_values) const {
  Assignment a = free_values;
  for (const auto& [v, p] : values) a[v] = p.evaluate(free_values);
  return a;
}

SolveResult solve_polynomial_system(std::vector<MultiPoly> eqs, const Field& f, size_t max_branches) {
  SolverState st;
  st.field = f;
  st.max_branches = max_branches;
  std::set<std::string> vars;
  for (const MultiPoly& e : eqs)
    for (const auto& v : e.variables()) vars.insert(v);
  solve_rec(st, std::move(eqs), {}, {vars.begin(), vars.end()});
  return std::move(st.out);
}

}  // namespace hk
