#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylres/gfq.hpp"
#include "weylres/parallel.hpp"

namespace weylres {

struct FuzzFailure {
  std::size_t index;
  std::string input;   // re-parseable text of the failing case
  std::string reason;  // exception text, empty for a plain mismatch
};

struct FuzzReport {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::optional<FuzzFailure> first_failure;

  bool ok() const { return passed == total; }
  /// "N/M OK", or "N/M OK" followed by the first failure.
  std::string summary() const;
};

/// thm17, thm17-ring, cor22, theta-rt, res-rt, res2-affine, resn-affine,
/// relations.
const std::vector<std::string>& fuzz_suites();

/// Draws `count` cases from a generator seeded with `seed`, then checks them
/// as a batch. Cases are generated serially, so the report depends only on
/// (suite, field, count, seed).
FuzzReport run_fuzz(std::string_view suite, const FieldSpec& f, std::size_t count, std::uint64_t seed,
                    Execution ex = Execution::parallel);

}  // namespace weylres
