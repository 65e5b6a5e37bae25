// The acceptance checks, shared by the acceptance binary and `vknot selftest`.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vknot/braid.hpp"
#include "vknot/gauss_diagram.hpp"

namespace vknot {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// Classical knots from ordinary braid closures: right trefoil, left trefoil,
// figure-eight.
struct NamedDiagram {
  std::string name;
  GaussDiagram diagram;
};
std::vector<NamedDiagram> classical_corpus();

// Example generator words (not taken from any figure).
GeneratorDef sample_generators();
GeneratorDef virtual_trefoil_generators();

}  // namespace vknot
