#pragma once

// Sparse multivariate polynomials with exact scalar coefficients, and a small
// case-splitting solver for the systems met by the isomorphism search.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/field.hpp"

namespace hk {

// Sorted by variable name; exponents are positive.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly var(const std::string& name);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coeff(const Monomial& m) const;
  unsigned degree() const;
  unsigned degree_in(const std::string& v) const;
  std::vector<std::string> variables() const;
  bool has_var(const std::string& v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly substitute(const std::string& v, const MultiPoly& by) const;
  MultiPoly substitute(const std::map<std::string, MultiPoly>& by) const;
  // Every variable must be bound.
  Scalar evaluate(const std::map<std::string, Scalar>& at) const;

  // Leading coefficient 1 (first term in monomial order); zero stays zero.
  MultiPoly monic() const;
  // Coefficients of p viewed as a polynomial in v: index k holds the coefficient of v^k.
  std::vector<MultiPoly> in_var(const std::string& v) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  std::map<Monomial, Scalar> terms_;
};

std::string monomial_str(const Monomial& m);

using Assignment = std::map<std::string, Scalar>;

// One branch of the solution set: bound variables are polynomials in the free ones.
struct PolySolution {
  std::map<std::string, MultiPoly> values;
  std::vector<std::string> free;
  Assignment at(const Assignment& free_values) const;
};

struct SolveResult {
  std::vector<PolySolution> solutions;
  bool complete = true;  // false when some branch hit an unsupported equation
  // d for each unsplit quadratic t^2 + bt + c met (roots live in f(sqrt d)).
  std::vector<Scalar> needs_sqrt;
};

// Roots in `f` of sum_k c[k] t^k. `residual` is the unsplit cofactor (empty
// when the polynomial splits completely).
struct RootSplit {
  std::vector<Scalar> roots;
  std::vector<Scalar> residual;
};
RootSplit split_roots(std::vector<Scalar> c, const Field& f);

// Solutions of {p = 0} with values in the field `f` (roots that need a larger
// field are dropped). Free variables are reported, not fixed.
SolveResult solve_polynomial_system(std::vector<MultiPoly> eqs, const Field& f, size_t max_branches = 4096);

}  // namespace hk
