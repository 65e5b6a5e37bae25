// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
//
//   acceptance [--seed N] [--criterion K]

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

#include "vknot/selftest.hpp"

namespace {

void print(const vknot::CriterionResult& r) {
  std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << "): " << r.detail << " ["
            << std::fixed << std::setprecision(2) << r.seconds << "s]" << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::uint64_t seed = vknot::kDefaultSeed;
  int only = 0;
  app.add_option("--seed", seed, "Seed for the randomized corpora");
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, vknot::kCriterionCount));
  CLI11_PARSE(app, argc, argv);

  if (only) {
    const auto r = vknot::run_criterion(only, seed);
    print(r);
    return r.passed ? 0 : 1;
  }
  bool all = true;
  vknot::run_acceptance(seed, [&](const vknot::CriterionResult& r) {
    all &= r.passed;
    print(r);
  });
  return all ? 0 : 1;
}
