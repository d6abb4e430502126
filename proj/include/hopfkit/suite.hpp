#pragma once

// The acceptance battery: twelve criteria, each a list of named checks.

#include <cstdint>
#include <string>
#include <vector>

#include "hopfkit/io.hpp"

namespace hk {

struct CheckLine {
  std::string what;
  bool ok = false;
  std::string note;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<CheckLine> checks;
  std::string summary() const;  // first failing check, or the check count
};

constexpr int kCriteria = 12;
std::string criterion_name(int id);
// `seed` drives the random inputs of the property suite only.
CriterionResult run_criterion(int id, std::uint64_t seed = 1);

Json criterion_to_json(const CriterionResult& r);

// An isomorphism f: a -> b of comodule algebras over the same H, checked entrywise.
bool is_colinear_algebra_iso(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const Matrix& f);

}  // namespace hk
