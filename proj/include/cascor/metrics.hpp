#pragma once

#include "cascor/allsat.hpp"
#include "cascor/penalty.hpp"
#include "cascor/sampler.hpp"
#include "cascor/sat_core.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cascor {

enum class TimeSource { QuantumCore, QuantumWall, ClassicalWall };

std::string to_string(TimeSource source);
TimeSource time_source_from_string(const std::string &name);

struct TimedSolution {
  Duration time{0};
  Assignment assignment;
};

struct TimelinePoint {
  Duration time{0};
  std::uint64_t count = 0;

  bool operator==(const TimelinePoint &) const = default;
};

/// Running count of distinct solutions. Point i carries count i + 1 and the
/// time at which solutions[i] was first seen.
struct DistinctTimeline {
  TimeSource source = TimeSource::ClassicalWall;
  std::vector<TimelinePoint> points;
  std::vector<Assignment> solutions;

  bool empty() const { return points.empty(); }
  bool operator==(const DistinctTimeline &) const = default;
};

/// First occurrences only. Throws InputError if times decrease.
DistinctTimeline build_timeline(const std::vector<TimedSolution> &events, TimeSource source);

std::vector<TimedSolution> classical_solutions(const EnumerationResult &result);

/// Decoded solutions of all gauge streams on one time axis. Streams run back
/// to back, so stream g is offset by the final core (or wall) time of
/// streams 0..g-1.
std::vector<TimedSolution> quantum_solutions(const std::vector<std::vector<SampleRecord>> &streams,
                                             const PenaltyLayout &layout, const Cnf &cnf,
                                             TimeSource axis);

struct CrossoverReport {
  enum class Outcome { CrossAt, QuantumNeverAhead, QuantumAlwaysAhead };

  Outcome outcome = Outcome::QuantumNeverAhead;
  std::uint64_t count = 0;       ///< m*, CrossAt only
  Duration time{0};              ///< classical time to m*, CrossAt only
  std::optional<double> overlap; ///< Jaccard overlap at m*, CrossAt only

  bool operator==(const CrossoverReport &) const = default;
};

std::string to_string(CrossoverReport::Outcome outcome);
CrossoverReport::Outcome crossover_outcome_from_string(const std::string &name);

/// Compares time-to-m-distinct-solutions for m up to the smaller final
/// count. Classical strictly faster to the first solution gives
/// QuantumNeverAhead; otherwise the first m with t_C(m) <= t_Q(m) is the
/// crossover; if none exists, QuantumAlwaysAhead. Throws InputError if
/// either timeline is empty. Overlap is filled in from the first m*
/// solutions of each side.
CrossoverReport find_crossover(const DistinctTimeline &quantum, const DistinctTimeline &classical);

/// |a & b| / |a | b|, and 0 when both are empty.
double overlap_fraction(const std::set<Assignment> &a, const std::set<Assignment> &b);

/// Bit differences between consecutive entries. Throws InputError on
/// length mismatch.
std::vector<std::uint32_t> hamming_neighbor_distances(const std::vector<Assignment> &solutions);

/// Decoded solutions of one stream, duplicates removed, in return order.
std::vector<Assignment> distinct_stream_solutions(const std::vector<SampleRecord> &stream,
                                                  const PenaltyLayout &layout, const Cnf &cnf);

struct InstanceReport {
  std::string instance_id;
  std::uint32_t num_vars = 0;
  std::uint64_t num_clauses = 0;
  std::uint64_t num_qubits = 0;
  double ground_bound = 0.0;

  bool classical_complete = false;
  bool classical_cap_hit = false;
  bool no_solutions = false;

  DistinctTimeline quantum_core;
  DistinctTimeline quantum_wall;
  DistinctTimeline classical;
  std::optional<CrossoverReport> crossover_core; ///< absent when no_solutions
  std::optional<CrossoverReport> crossover_wall;

  std::vector<std::uint32_t> hamming_classical;
  std::vector<std::vector<std::uint32_t>> hamming_quantum; ///< per gauge

  bool operator==(const InstanceReport &) const = default;
};

InstanceReport summarize_instance(const std::string &instanceId,
                                  const std::vector<std::vector<SampleRecord>> &quantumStreams,
                                  const EnumerationResult &classical, const PenaltyLayout &layout,
                                  const Cnf &cnf);

double mean_of(const std::vector<std::uint32_t> &values);

} // namespace cascor
