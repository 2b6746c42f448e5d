#pragma once

/**
 * The invariant suite behind `lbrep verify`: every structural property the
 * library promises, checked on small instances and seeded random samples.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace lbrep {

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed;
  std::string detail;  ///< counterexample or error on failure
};

std::vector<PropertyResult> run_invariant_suite(std::uint64_t seed = 1);

}  // namespace lbrep
