#pragma once

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

#include <omp.h>

namespace weylres {

/// Kernel selection. `automatic` goes parallel only for large inputs,
/// when more than one thread is available and when not already inside a
/// parallel region.
enum class Execution { serial, parallel, automatic };

inline bool use_parallel(Execution ex, std::size_t work) {
  if (ex == Execution::serial) return false;
  if (omp_in_parallel()) return false;
  if (ex == Execution::parallel) return true;
  return work >= (std::size_t{1} << 14) && omp_get_max_threads() > 1;
}

struct CaseOutcome {
  bool ok = false;
  std::string error;  // exception text when the check threw
};

/// Runs `check` on every case. Results are stored by input index, so the
/// outcome vector (and any "first failure" derived from it) is the same for
/// serial and parallel execution.
template <class Case, class Check>
std::vector<CaseOutcome> run_batch(const std::vector<Case>& cases, const Check& check,
                                   Execution ex = Execution::parallel) {
  std::vector<CaseOutcome> out(cases.size());
  auto body = [&](std::size_t i) {
    try {
      out[i].ok = check(cases[i]);
    } catch (const std::exception& e) {
      out[i].ok = false;
      out[i].error = e.what();
    }
  };
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
  if (ex == Execution::serial || omp_in_parallel()) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace weylres
