#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ilocal/doubling.hpp"

namespace ilocal {

struct SuiteBounds {
  /// Random cases per suite.
  int cases = 50;
  /// Combinations have at most this many terms; 0 leaves only the empty
  /// combination.
  int max_terms = 4;
  int max_index = 6;
  int max_cells = 10;
  /// Cap on delta when the width is infinite.
  int max_delta = 3;
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<nlohmann::json> counterexamples;  // at most a few per suite
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Runs the randomized property suites: Kunneth, doubling homology, the
/// local pair check, the representative cross-check, decode round trip and
/// duality. `mutation` is forwarded to every doubling.
SuiteReport run_suite(std::uint64_t seed, const SuiteBounds& bounds = {},
                      DoublingMutation mutation = DoublingMutation::None);

}  // namespace ilocal
