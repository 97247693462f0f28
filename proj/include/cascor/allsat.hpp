#pragma once

#include "cascor/sat_core.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace cascor {

using Duration = std::chrono::nanoseconds;

/// One satisfying assignment found by the enumerator.
struct SolutionEvent {
  Assignment assignment;
  Duration wall_time{0}; ///< since enumeration start (monotonic clock)
  std::uint64_t index = 0; ///< 1-based discovery ordinal
};

struct EnumerationResult {
  std::vector<SolutionEvent> events;
  bool complete = false; ///< every satisfying assignment is in `events`
  bool cap_hit = false;  ///< more than `cap` solutions exist
};

/// Blocking-clause ALL-SAT enumeration.
///
/// Each round runs a DPLL search (unit propagation, pure-literal
/// elimination, most-occurrences branching) over the formula plus all
/// blocking clauses found so far. A model is completed to a full assignment,
/// stamped, and excluded by a blocking clause over all n variables. The loop
/// ends when the augmented formula is unsatisfiable (complete), when a
/// solution beyond `cap` is proven to exist (cap_hit; the extra model is not
/// recorded), or when `timeBudget` expires (neither flag set).
EnumerationResult enumerate_all(const Cnf &cnf, std::uint64_t cap,
                                std::optional<Duration> timeBudget = std::nullopt);

/// Solution count, or nullopt when the formula has more than `cap` solutions.
std::optional<std::uint64_t> count_solutions_capped(const Cnf &cnf, std::uint64_t cap);

} // namespace cascor
