#pragma once

// Exact scalars: elements of Q(zeta_n), optionally with one formal square
// root s adjoined (s^2 = d, d in Q(zeta_n)).

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hopfkit/errors.hpp"

namespace hk {

using Rational = mpq_class;

class Scalar;

struct FieldContext {
  int order = 1;  // n
  int phi = 1;    // degree of Q(zeta_n) over Q
  std::vector<Rational> cyclo;               // monic Phi_n, low degree first
  std::vector<std::vector<Rational>> power;  // zeta^k reduced, 0 <= k < n
  bool extended = false;
  std::vector<Rational> disc;                    // base coefficients of d
  std::shared_ptr<const FieldContext> base;      // set when extended
};

using Field = std::shared_ptr<const FieldContext>;

Field cyclotomic_field(int n);
Field default_field();  // Q(zeta_4) = Q(i)
Field adjoin_sqrt(const Field& ctx, const Scalar& d);
bool same_field(const Field& a, const Field& b);
std::string describe_field(const Field& f);

// Euler phi and the integer coefficients of Phi_n.
int euler_phi(int n);
std::vector<Rational> cyclotomic_polynomial(int n);

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT
  Scalar(const Rational& q);                       // NOLINT
  Scalar(long num, long den);

  static Scalar zeta(const Field& f, long k);
  static Scalar imag_unit(const Field& f);  // zeta_4 inside f
  static Scalar sqrt_generator(const Field& f);
  static Scalar from_coeffs(const Field& f, std::vector<Rational> a, std::vector<Rational> b = {});

  // null for rational constants that have not met a field yet
  const Field& field() const { return f_; }

  bool is_zero() const { return a_.empty() && b_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  bool in_base() const { return b_.empty(); }

  std::vector<Rational> base_coeffs() const;  // length phi (1 when no field)
  std::vector<Rational> ext_coeffs() const;   // length phi, zeros when b == 0
  Scalar base_part() const;
  Scalar ext_part() const;  // coefficient of s

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;
  Scalar pow(long e) const;

  // Embed into a context that contains this one: Q(zeta_n) -> Q(zeta_m) for
  // n | m, and base -> extension.
  Scalar coerce(const Field& target) const;

  std::string str() const;

  // Total order on canonical forms; only used for deterministic sorting.
  static int compare(const Scalar& a, const Scalar& b);

 private:
  void normalize();
  friend Scalar resolve_pair(const Scalar& a, const Scalar& b, Field& out);

  Field f_;
  std::vector<Rational> a_;  // empty when zero
  std::vector<Rational> b_;  // empty when the s-part is zero
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Parse the scalar literal grammar: integers, a/b, i, z(n,k), s, + - * /,
// parentheses. `f` may be null, in which case only rationals are accepted.
Scalar parse_scalar(const std::string& text, const Field& f);

// Square root inside the element's own field when one can be found.
// Covers rational squares, roots of unity times rational squares,
// Q(i) in closed form, and the a + b s pattern in an extension.
std::optional<Scalar> try_sqrt(const Scalar& t);

}  // namespace hk
