// Runs one acceptance criterion and prints a single PASS/FAIL line.
// Usage: acceptance <1..12> [--verbose]

#include <cstdlib>
#include <iostream>
#include <string>

#include "hopfkit/suite.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <criterion> [--verbose]\n";
    return 2;
  }
  const int id = std::atoi(argv[1]);
  if (id < 1 || id > hk::kCriteria) {
    std::cerr << "criterion must be 1.." << hk::kCriteria << "\n";
    return 2;
  }
  const bool verbose = argc > 2 && std::string(argv[2]) == "--verbose";
  hk::CriterionResult r = hk::run_criterion(id);
  if (verbose || !r.passed)
    for (const auto& c : r.checks)
      std::cout << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.what << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
  std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << id << " " << r.name << ": " << r.summary() << "\n";
  return r.passed ? 0 : 1;
}
