#pragma once

// Right H-simplicity and AM-exactness of comodule algebras.

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/comodule.hpp"

namespace hk {

enum class SimplicityMethod { Burnside, Witness };
const char* method_name(SimplicityMethod m);

// Right multiplications by basis elements and the nonzero slices (b^* (x) 1) lambda.
std::vector<Matrix> costable_operators(const ComoduleAlgebra& a);

// J A in J and every slice maps J into J.
bool is_costable_right_ideal(const ComoduleAlgebra& a, const Subspace& j);

struct SimplicityResult {
  bool simple = false;
  SimplicityMethod method = SimplicityMethod::Burnside;
  std::optional<Subspace> witness;
  size_t operator_algebra_dim = 0;
};

SimplicityResult is_right_h_simple(const ComoduleAlgebra& a);

struct ExactnessVerdict {
  bool right_h_simple = false;
  size_t coinvariants_dim = 0;
  bool am_exact = false;
  std::optional<Subspace> witness;
  SimplicityMethod method = SimplicityMethod::Burnside;
  size_t operator_algebra_dim = 0;
};

ExactnessVerdict am_exact(const ComoduleAlgebra& a);

}  // namespace hk
