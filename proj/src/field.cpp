#include "hopfkit/field.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace hk {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AlreadyExtended: return "AlreadyExtended";
    case ErrorKind::ZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAnAlgebra: return "NotAnAlgebra";
    case ErrorKind::SingularAntipode: return "SingularAntipode";
    case ErrorKind::NotASubcoalgebra: return "NotASubcoalgebra";
    case ErrorKind::NotOverKp: return "NotOverKp";
    case ErrorKind::MissingGrouplikeUnits: return "MissingGrouplikeUnits";
    case ErrorKind::FiltrationNotExhaustive: return "FiltrationNotExhaustive";
    case ErrorKind::BadWitness: return "BadWitness";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::GammaNotPrimitiveFourthRoot: return "GammaNotPrimitiveFourthRoot";
    case ErrorKind::NotModuleAlgebra: return "NotModuleAlgebra";
    case ErrorKind::CoactionUnsolvable: return "CoactionUnsolvable";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NeedsFieldExtension: return "NeedsFieldExtension";
    case ErrorKind::NotGeneratedInDegreeZero: return "NotGeneratedInDegreeZero";
    case ErrorKind::InvalidKind: return "InvalidKind";
    case ErrorKind::NonlinearResidue: return "NonlinearResidue";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

namespace {

using RVec = std::vector<Rational>;

bool all_zero(const RVec& v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

int phi_of(const Field& f) { return f ? f->phi : 1; }

// Multiply two base-field coefficient vectors (length phi each).
RVec base_mul(const Field& f, const RVec& x, const RVec& y) {
  if (!f || f->phi == 1) return {x[0] * y[0]};
  const int p = f->phi, n = f->order;
  RVec out(p);
  std::vector<Rational> prod(2 * p - 1);
  for (int i = 0; i < p; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < p; ++j)
      if (sgn(y[j]) != 0) prod[i + j] += x[i] * y[j];
  }
  for (int k = 0; k < 2 * p - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    if (k < p) {
      out[k] += prod[k];
    } else {
      const RVec& r = f->power[k % n];
      for (int j = 0; j < p; ++j)
        if (sgn(r[j]) != 0) out[j] += prod[k] * r[j];
    }
  }
  return out;
}

RVec base_add(const RVec& x, const RVec& y, int sign) {
  RVec out = x;
  for (size_t i = 0; i < y.size(); ++i) {
    if (sign > 0)
      out[i] += y[i];
    else
      out[i] -= y[i];
  }
  return out;
}

// Solve the phi x phi system (multiplication by x) for x^{-1}.
RVec base_inv(const Field& f, const RVec& x) {
  const int p = phi_of(f);
  if (all_zero(x)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (p == 1) return {1 / x[0]};
  if (f->order == 4) {
    Rational nrm = x[0] * x[0] + x[1] * x[1];
    return {x[0] / nrm, -x[1] / nrm};
  }
  // column k of M is x * zeta^k
  std::vector<RVec> m(p, RVec(p + 1));
  for (int k = 0; k < p; ++k) {
    RVec e(p);
    e[k] = 1;
    RVec col = base_mul(f, x, e);
    for (int r = 0; r < p; ++r) m[r][k] = col[r];
  }
  m[0][p] = 1;
  for (int c = 0, r = 0; c < p; ++c, ++r) {
    int piv = r;
    while (piv < p && sgn(m[piv][c]) == 0) ++piv;
    if (piv == p) throw Error(ErrorKind::DivisionByZero, "singular multiplication map");
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j <= p; ++j) m[r][j] *= inv;
    for (int i = 0; i < p; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational fac = m[i][c];
      for (int j = c; j <= p; ++j) m[i][j] -= fac * m[r][j];
    }
  }
  RVec out(p);
  for (int r = 0; r < p; ++r) out[r] = m[r][p];
  return out;
}

struct Lifted {
  RVec a, b;
};

Lifted lift(const Scalar& s, const Field& target) {
  const int p = phi_of(target);
  Lifted out{RVec(p), RVec(p)};
  if (!s.field()) {
    if (!s.is_zero()) out.a[0] = s.rational_value();
    return out;
  }
  out.a = s.base_coeffs();
  out.b = s.ext_coeffs();
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Rational> cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  RVec num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RVec den = cyclotomic_polynomial(d);
    // exact division by a monic polynomial
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    RVec q(dn - dd + 1);
    for (int k = dn - dd; k >= 0; --k) {
      q[k] = num[k + dd];
      for (int j = 0; j <= dd; ++j) num[k + j] -= q[k] * den[j];
    }
    num = q;
  }
  return num;
}

Field cyclotomic_field(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  auto f = std::make_shared<FieldContext>();
  f->order = n;
  f->phi = euler_phi(n);
  f->cyclo = cyclotomic_polynomial(n);
  const int p = f->phi;
  RVec cur(p);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->power.push_back(cur);
    // multiply by zeta and reduce with the monic Phi_n
    RVec next(p);
    for (int j = 0; j + 1 < p; ++j) next[j + 1] = cur[j];
    Rational top = cur[p - 1];
    if (p == 1) {
      next[0] = -f->cyclo[0] * top;
    } else {
      next[0] = 0;
      for (int j = 0; j < p; ++j) next[j] -= f->cyclo[j] * top;
    }
    cur = next;
  }
  return f;
}

Field default_field() { return cyclotomic_field(4); }

Field adjoin_sqrt(const Field& ctx, const Scalar& d) {
  if (!ctx) throw Error(ErrorKind::InvalidInput, "adjoin_sqrt needs a base field");
  if (ctx->extended) throw Error(ErrorKind::AlreadyExtended, "field already has a quadratic layer");
  Scalar dd = d.coerce(ctx);
  if (dd.is_zero()) throw Error(ErrorKind::ZeroDiscriminant, "discriminant is zero");
  if (!dd.in_base()) throw Error(ErrorKind::FieldMismatch, "discriminant must lie in the base field");
  auto f = std::make_shared<FieldContext>(*ctx);
  f->extended = true;
  f->disc = dd.base_coeffs();
  f->base = ctx;
  return f;
}

bool same_field(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->order != b->order || a->extended != b->extended) return false;
  return !a->extended || a->disc == b->disc;
}

std::string describe_field(const Field& f) {
  if (!f) return "Q";
  std::string s = "Q(z" + std::to_string(f->order) + ")";
  if (f->extended) {
    Scalar d = Scalar::from_coeffs(f->base, f->disc);
    s += "[s]/(s^2-(" + d.str() + "))";
  }
  return s;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(long v) {
  if (v != 0) a_ = {Rational(v)};
}

Scalar::Scalar(const Rational& q) {
  if (sgn(q) != 0) a_ = {q};
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  if (sgn(q) != 0) a_ = {q};
}

Scalar Scalar::zeta(const Field& f, long k) {
  if (!f) throw Error(ErrorKind::FieldMismatch, "zeta needs a cyclotomic field");
  long n = f->order;
  long r = ((k % n) + n) % n;
  return from_coeffs(f, f->power[r]);
}

Scalar Scalar::imag_unit(const Field& f) {
  if (!f || f->order % 4 != 0) throw Error(ErrorKind::FieldMismatch, "field does not contain i");
  return zeta(f, f->order / 4);
}

Scalar Scalar::sqrt_generator(const Field& f) {
  if (!f || !f->extended) throw Error(ErrorKind::FieldMismatch, "field has no adjoined square root");
  RVec b(f->phi);
  b[0] = 1;
  return from_coeffs(f, RVec(f->phi), b);
}

Scalar Scalar::from_coeffs(const Field& f, std::vector<Rational> a, std::vector<Rational> b) {
  Scalar s;
  s.f_ = f;
  const size_t p = static_cast<size_t>(phi_of(f));
  if (a.size() != p) throw Error(ErrorKind::DimensionMismatch, "coefficient vector length");
  if (!b.empty() && b.size() != p) throw Error(ErrorKind::DimensionMismatch, "s-coefficient vector length");
  if (!b.empty() && !(f && f->extended)) {
    if (!all_zero(b)) throw Error(ErrorKind::FieldMismatch, "s-part in an unextended field");
    b.clear();
  }
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (!a_.empty() && all_zero(a_)) a_.clear();
  if (!b_.empty() && all_zero(b_)) b_.clear();
}

bool Scalar::is_rational() const {
  if (!b_.empty()) return false;
  for (size_t i = 1; i < a_.size(); ++i)
    if (sgn(a_[i]) != 0) return false;
  return true;
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "not a rational scalar");
  return a_.empty() ? Rational(0) : a_[0];
}

bool Scalar::is_one() const { return is_rational() && rational_value() == 1; }

std::vector<Rational> Scalar::base_coeffs() const {
  if (!a_.empty()) return a_;
  return RVec(phi_of(f_));
}

std::vector<Rational> Scalar::ext_coeffs() const {
  if (!b_.empty()) return b_;
  return RVec(phi_of(f_));
}

Scalar Scalar::base_part() const {
  Scalar s = *this;
  s.b_.clear();
  return s;
}

Scalar Scalar::ext_part() const {
  Scalar s;
  s.f_ = f_;
  s.a_ = b_;
  return s;
}

Scalar resolve_pair(const Scalar& a, const Scalar& b, Field& out) {
  (void)b;
  const Field& fa = a.f_;
  const Field& fb = b.f_;
  if (!fa) {
    out = fb;
  } else if (!fb || same_field(fa, fb)) {
    out = fa;
  } else if (fa->extended && !fb->extended && same_field(fa->base, fb)) {
    out = fa;
  } else if (fb->extended && !fa->extended && same_field(fb->base, fa)) {
    out = fb;
  } else {
    throw Error(ErrorKind::FieldMismatch, describe_field(fa) + " vs " + describe_field(fb));
  }
  return Scalar();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& q : s.a_) q = -q;
  for (auto& q : s.b_) q = -q;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero() && (!o.f_ || f_)) return *this;
  Field f;
  resolve_pair(*this, o, f);
  Lifted x = lift(*this, f), y = lift(o, f);
  f_ = f;
  a_ = base_add(x.a, y.a, 1);
  b_ = (f && f->extended) ? base_add(x.b, y.b, 1) : RVec();
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& x, const Scalar& y) {
  Field f;
  resolve_pair(x, y, f);
  Scalar out;
  out.f_ = f;
  if (x.is_zero() || y.is_zero()) return out;
  if (!f) {
    out.a_ = {x.a_[0] * y.a_[0]};
    return out;
  }
  // fast path: one side rational
  if (x.is_rational() || y.is_rational()) {
    const Scalar& r = x.is_rational() ? x : y;
    const Scalar& o = x.is_rational() ? y : x;
    Rational q = r.rational_value();
    Lifted l = lift(o, f);
    for (auto& c : l.a) c *= q;
    for (auto& c : l.b) c *= q;
    out.a_ = std::move(l.a);
    if (f->extended) out.b_ = std::move(l.b);
    out.normalize();
    return out;
  }
  Lifted p = lift(x, f), q = lift(y, f);
  if (!f->extended || (x.b_.empty() && y.b_.empty())) {
    out.a_ = base_mul(f, p.a, q.a);
  } else {
    RVec bd = base_mul(f, base_mul(f, p.b, q.b), f->disc);
    out.a_ = base_add(base_mul(f, p.a, q.a), bd, 1);
    out.b_ = base_add(base_mul(f, p.a, q.b), base_mul(f, p.b, q.a), 1);
  }
  out.normalize();
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar out;
  out.f_ = f_;
  if (!f_) {
    out.a_ = {1 / a_[0]};
    return out;
  }
  RVec a = base_coeffs();
  if (b_.empty()) {
    out.a_ = base_inv(f_, a);
    out.normalize();
    return out;
  }
  // (a + b s)^{-1} = (a - b s) / (a^2 - b^2 d)
  RVec b = b_;
  RVec nrm = base_add(base_mul(f_, a, a), base_mul(f_, base_mul(f_, b, b), f_->disc), -1);
  if (all_zero(nrm)) throw Error(ErrorKind::DivisionByZero, "zero divisor in formal extension");
  RVec ni = base_inv(f_, nrm);
  out.a_ = base_mul(f_, a, ni);
  out.b_ = base_mul(f_, b, ni);
  for (auto& c : out.b_) c = -c;
  out.normalize();
  return out;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  Field f;
  resolve_pair(*this, o, f);
  *this = *this * o.inv();
  return *this;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_zero() && y.is_zero()) return true;
  Field f;
  resolve_pair(x, y, f);
  Lifted p = lift(x, f), q = lift(y, f);
  return p.a == q.a && p.b == q.b;
}

Scalar Scalar::coerce(const Field& target) const {
  if (!f_) {
    if (!target) return *this;
    RVec a(target->phi);
    if (!is_zero()) a[0] = a_[0];
    return from_coeffs(target, a);
  }
  if (!target) {
    if (is_rational()) return Scalar(rational_value());
    throw Error(ErrorKind::FieldMismatch, "cannot coerce to Q");
  }
  if (same_field(f_, target)) {
    Scalar s = *this;
    s.f_ = target;
    return s;
  }
  if (target->extended && same_field(target->base, f_)) {
    return from_coeffs(target, base_coeffs());
  }
  if (!f_->extended && target->order % f_->order == 0) {
    Field tb = target->extended ? target->base : target;
    const int step = target->order / f_->order;
    RVec out(tb->phi);
    RVec a = base_coeffs();
    for (int k = 0; k < f_->phi; ++k) {
      if (sgn(a[k]) == 0) continue;
      const RVec& z = tb->power[(k * step) % tb->order];
      for (int j = 0; j < tb->phi; ++j) out[j] += a[k] * z[j];
    }
    return from_coeffs(target, out);
  }
  throw Error(ErrorKind::FieldMismatch, "cannot embed " + describe_field(f_) + " into " + describe_field(target));
}

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

std::string unit_name(const Field& f, int k) {
  if (f->order == 4 && k == 1) return "i";
  return "z(" + std::to_string(f->order) + "," + std::to_string(k) + ")";
}

void append_terms(std::vector<std::string>& terms, const Field& f, const RVec& c, const std::string& suffix) {
  for (size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    std::string mono = k == 0 ? "" : unit_name(f, static_cast<int>(k));
    if (!suffix.empty()) mono = mono.empty() ? suffix : mono + "*" + suffix;
    if (mono.empty()) {
      terms.push_back(rat_str(c[k]));
    } else if (c[k] == 1) {
      terms.push_back(mono);
    } else if (c[k] == -1) {
      terms.push_back("-" + mono);
    } else {
      terms.push_back(rat_str(c[k]) + "*" + mono);
    }
  }
}

}  // namespace

std::string Scalar::str() const {
  if (is_zero()) return "0";
  if (!f_) return rat_str(a_[0]);
  std::vector<std::string> terms;
  append_terms(terms, f_, base_coeffs(), "");
  if (!b_.empty()) append_terms(terms, f_, b_, "s");
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i == 0 || terms[i][0] == '-')
      out += terms[i];
    else
      out += "+" + terms[i];
  }
  return out;
}

int Scalar::compare(const Scalar& x, const Scalar& y) {
  Field f;
  resolve_pair(x, y, f);
  Lifted p = lift(x, f), q = lift(y, f);
  for (size_t i = 0; i < p.a.size(); ++i) {
    int c = cmp(p.a[i], q.a[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  for (size_t i = 0; i < p.b.size(); ++i) {
    int c = cmp(p.b[i], q.b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------------------
// literal parser

namespace {

class Parser {
 public:
  Parser(const std::string& t, const Field& f) : text_(t), f_(f) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    bool neg = eat('-');
    skip();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(text_.substr(start, pos_ - start));
    return neg ? -v : v;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else
        return v;
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  Scalar primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class z(text_.substr(start, pos_ - start));
      return Scalar(Rational(z));
    }
    if (c == 'i') {
      ++pos_;
      if (!f_ || f_->order % 4 != 0) fail("'i' is not in the field");
      return Scalar::imag_unit(f_);
    }
    if (c == 's') {
      ++pos_;
      if (!f_ || !f_->extended) fail("'s' needs an adjoined square root");
      return Scalar::sqrt_generator(f_);
    }
    if (c == 'z') {
      ++pos_;
      if (!eat('(')) fail("expected '(' after z");
      long n = integer();
      if (!eat(',')) fail("expected ','");
      long k = integer();
      if (!eat(')')) fail("expected ')'");
      if (n <= 0) fail("bad root order");
      if (!f_ || f_->order % n != 0) fail("z(n,k) not in the field");
      return Scalar::zeta(f_, k * (f_->order / n));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string text_;
  Field f_;
  size_t pos_ = 0;
};

std::optional<Scalar> base_sqrt(const Scalar& t, const Field& bf) {
  // bf is unextended (or null); t lives in bf
  if (t.is_zero()) return Scalar().coerce(bf);
  if (!bf || bf->phi == 1) {
    auto r = rational_sqrt(t.coerce(nullptr).rational_value());
    if (!r) return std::nullopt;
    return Scalar(*r).coerce(bf);
  }
  const long n = bf->order;
  for (long j = 0; j < n; ++j) {
    Scalar u = t * Scalar::zeta(bf, -2 * j);
    if (!u.is_rational()) continue;
    if (auto r = rational_sqrt(u.rational_value())) return Scalar::zeta(bf, j) * Scalar(*r);
  }
  if (n == 4) {
    RVec c = t.base_coeffs();
    auto m = rational_sqrt(c[0] * c[0] + c[1] * c[1]);
    if (!m) return std::nullopt;
    for (int sign : {1, -1}) {
      Rational x2 = (c[0] + sign * *m) / 2;
      auto x = rational_sqrt(x2);
      if (!x || sgn(*x) == 0) continue;
      Rational y = c[1] / (2 * *x);
      Scalar cand = Scalar::from_coeffs(bf, {*x, y});
      if (cand * cand == t) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

Scalar parse_scalar(const std::string& text, const Field& f) {
  Scalar v = Parser(text, f).parse();
  return f ? v.coerce(f) : v;
}

std::optional<Scalar> try_sqrt(const Scalar& t) {
  const Field& f = t.field();
  if (!f || !f->extended) return base_sqrt(t, f);
  const Field& bf = f->base;
  Scalar d = Scalar::from_coeffs(bf, f->disc);
  Scalar a = Scalar::from_coeffs(bf, t.base_coeffs());
  Scalar s = Scalar::sqrt_generator(f);
  if (t.in_base()) {
    if (auto r = base_sqrt(a, bf)) return r->coerce(f);
    if (auto r = base_sqrt(a / d, bf)) return r->coerce(f) * s;
    return std::nullopt;
  }
  Scalar b = Scalar::from_coeffs(bf, t.ext_coeffs());
  auto r = base_sqrt(a * a - b * b * d, bf);
  if (!r) return std::nullopt;
  for (const Scalar& rr : {*r, -*r}) {
    auto x = base_sqrt((a + rr) / Scalar(2), bf);
    if (!x || x->is_zero()) continue;
    Scalar y = b / (Scalar(2) * *x);
    Scalar cand = x->coerce(f) + y.coerce(f) * s;
    if (cand * cand == t) return cand;
  }
  return std::nullopt;
}

}  // namespace hk
