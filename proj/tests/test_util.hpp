#pragma once

#include <random>

#include "hopfkit/field.hpp"

namespace hk::testing {

// Small random element of f (coefficients in [-3,3] over denominators 1..3).
inline Scalar random_scalar(std::mt19937& rng, const Field& f, bool allow_ext = true) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  const int p = f ? f->phi : 1;
  std::vector<Rational> a(p), b(p);
  for (int k = 0; k < p; ++k) {
    a[k] = Rational(num(rng), den(rng));
    a[k].canonicalize();
    if (allow_ext && f && f->extended) {
      b[k] = Rational(num(rng), den(rng));
      b[k].canonicalize();
    }
  }
  if (!f) return Scalar(a[0]);
  return Scalar::from_coeffs(f, a, (f->extended && allow_ext) ? b : std::vector<Rational>{});
}

}  // namespace hk::testing
