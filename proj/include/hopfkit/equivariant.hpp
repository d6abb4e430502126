#pragma once

// Objects of ^H M_B: left H-comodules with a compatible right action of an
// H-comodule algebra B.

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/comodule.hpp"

namespace hk {

struct EquivariantModule {
  Comodule comodule;
  ComoduleAlgebra acting;
  std::vector<Matrix> action;  // action[i]: p -> p . b_i, dim P x dim P
  std::optional<LoewyGrading> grading;

  size_t dim() const { return comodule.dim; }
  Matrix act(const Vec& b) const;  // p -> p . b
};

struct EquivariantReport {
  bool right_module = true;
  bool compatible = true;  // lambda(p . b) = lambda(p) lambda(b)
  bool comodule = true;
  std::vector<std::string> failures;
  bool ok() const { return right_module && compatible && comodule; }
};

EquivariantReport check_equivariant(const EquivariantModule& p);

// B as a right module over itself.
EquivariantModule regular_module(const ComoduleAlgebra& b);

}  // namespace hk
