#include "cascor/metrics.hpp"

#include "cascor/error.hpp"

#include <algorithm>
#include <numeric>

namespace cascor {

std::string to_string(TimeSource source) {
  switch (source) {
  case TimeSource::QuantumCore:
    return "quantum-core";
  case TimeSource::QuantumWall:
    return "quantum-wall";
  case TimeSource::ClassicalWall:
    return "classical-wall";
  }
  return "classical-wall";
}

TimeSource time_source_from_string(const std::string &name) {
  if (name == "quantum-core")
    return TimeSource::QuantumCore;
  if (name == "quantum-wall")
    return TimeSource::QuantumWall;
  if (name == "classical-wall")
    return TimeSource::ClassicalWall;
  throw InputError("unknown time source '" + name + "'");
}

std::string to_string(CrossoverReport::Outcome outcome) {
  switch (outcome) {
  case CrossoverReport::Outcome::CrossAt:
    return "cross_at";
  case CrossoverReport::Outcome::QuantumNeverAhead:
    return "quantum_never_ahead";
  case CrossoverReport::Outcome::QuantumAlwaysAhead:
    return "quantum_always_ahead";
  }
  return "quantum_never_ahead";
}

CrossoverReport::Outcome crossover_outcome_from_string(const std::string &name) {
  if (name == "cross_at")
    return CrossoverReport::Outcome::CrossAt;
  if (name == "quantum_never_ahead")
    return CrossoverReport::Outcome::QuantumNeverAhead;
  if (name == "quantum_always_ahead")
    return CrossoverReport::Outcome::QuantumAlwaysAhead;
  throw InputError("unknown crossover outcome '" + name + "'");
}

DistinctTimeline build_timeline(const std::vector<TimedSolution> &events, TimeSource source) {
  DistinctTimeline timeline;
  timeline.source = source;
  std::set<Assignment> seen;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (i > 0 && events[i].time < events[i - 1].time)
      throw InputError("solution times decrease at event " + std::to_string(i));
    if (!seen.insert(events[i].assignment).second)
      continue;
    timeline.points.push_back(TimelinePoint{events[i].time, timeline.points.size() + 1});
    timeline.solutions.push_back(events[i].assignment);
  }
  return timeline;
}

std::vector<TimedSolution> classical_solutions(const EnumerationResult &result) {
  std::vector<TimedSolution> out;
  out.reserve(result.events.size());
  for (const SolutionEvent &event : result.events)
    out.push_back(TimedSolution{event.wall_time, event.assignment});
  return out;
}

std::vector<TimedSolution> quantum_solutions(const std::vector<std::vector<SampleRecord>> &streams,
                                             const PenaltyLayout &layout, const Cnf &cnf,
                                             TimeSource axis) {
  if (axis == TimeSource::ClassicalWall)
    throw InputError("quantum samples have no classical time axis");
  std::vector<TimedSolution> out;
  Duration offset{0};
  for (const auto &stream : streams) {
    for (const SampleRecord &rec : stream) {
      const Duration t = axis == TimeSource::QuantumCore ? rec.core_time : rec.wall_time;
      if (auto a = decode_sample(rec, layout, cnf))
        out.push_back(TimedSolution{offset + t, std::move(*a)});
    }
    if (!stream.empty())
      offset += axis == TimeSource::QuantumCore ? stream.back().core_time : stream.back().wall_time;
  }
  return out;
}

double overlap_fraction(const std::set<Assignment> &a, const std::set<Assignment> &b) {
  std::size_t common = 0;
  for (const Assignment &x : a)
    common += b.count(x);
  const std::size_t united = a.size() + b.size() - common;
  return united == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(united);
}

CrossoverReport find_crossover(const DistinctTimeline &quantum, const DistinctTimeline &classical) {
  if (quantum.empty() || classical.empty())
    throw InputError("crossover needs two non-empty timelines");

  CrossoverReport report;
  if (classical.points.front().time < quantum.points.front().time) {
    report.outcome = CrossoverReport::Outcome::QuantumNeverAhead;
    return report;
  }
  const std::size_t comparable = std::min(quantum.points.size(), classical.points.size());
  for (std::size_t i = 0; i < comparable; ++i) {
    if (classical.points[i].time <= quantum.points[i].time) {
      report.outcome = CrossoverReport::Outcome::CrossAt;
      report.count = i + 1;
      report.time = classical.points[i].time;
      const std::set<Assignment> q(quantum.solutions.begin(), quantum.solutions.begin() + i + 1);
      const std::set<Assignment> c(classical.solutions.begin(), classical.solutions.begin() + i + 1);
      report.overlap = overlap_fraction(q, c);
      return report;
    }
  }
  report.outcome = CrossoverReport::Outcome::QuantumAlwaysAhead;
  return report;
}

std::vector<std::uint32_t> hamming_neighbor_distances(const std::vector<Assignment> &solutions) {
  std::vector<std::uint32_t> distances;
  for (std::size_t i = 1; i < solutions.size(); ++i) {
    const auto &prev = solutions[i - 1].bits();
    const auto &cur = solutions[i].bits();
    if (prev.size() != cur.size())
      throw InputError("assignments of different lengths");
    std::uint32_t d = 0;
    for (std::size_t b = 0; b < cur.size(); ++b)
      d += prev[b] != cur[b];
    distances.push_back(d);
  }
  return distances;
}

std::vector<Assignment> distinct_stream_solutions(const std::vector<SampleRecord> &stream,
                                                  const PenaltyLayout &layout, const Cnf &cnf) {
  std::set<Assignment> seen;
  std::vector<Assignment> out;
  for (const SampleRecord &rec : stream)
    if (auto a = decode_sample(rec, layout, cnf); a && seen.insert(*a).second)
      out.push_back(std::move(*a));
  return out;
}

double mean_of(const std::vector<std::uint32_t> &values) {
  if (values.empty())
    return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

namespace {

std::optional<CrossoverReport> crossover_or_default(const DistinctTimeline &quantum,
                                                    const DistinctTimeline &classical) {
  if (quantum.empty() && classical.empty())
    return std::nullopt;
  if (quantum.empty())
    return CrossoverReport{CrossoverReport::Outcome::QuantumNeverAhead, 0, Duration{0}, std::nullopt};
  if (classical.empty())
    return CrossoverReport{CrossoverReport::Outcome::QuantumAlwaysAhead, 0, Duration{0}, std::nullopt};
  return find_crossover(quantum, classical);
}

} // namespace

InstanceReport summarize_instance(const std::string &instanceId,
                                  const std::vector<std::vector<SampleRecord>> &quantumStreams,
                                  const EnumerationResult &classical, const PenaltyLayout &layout,
                                  const Cnf &cnf) {
  InstanceReport report;
  report.instance_id = instanceId;
  report.num_vars = cnf.num_vars();
  report.num_clauses = cnf.clauses().size();
  report.num_qubits = layout.num_qubits;
  report.ground_bound = layout.ground_bound;
  report.classical_complete = classical.complete;
  report.classical_cap_hit = classical.cap_hit;

  report.quantum_core = build_timeline(
      quantum_solutions(quantumStreams, layout, cnf, TimeSource::QuantumCore), TimeSource::QuantumCore);
  report.quantum_wall = build_timeline(
      quantum_solutions(quantumStreams, layout, cnf, TimeSource::QuantumWall), TimeSource::QuantumWall);
  report.classical = build_timeline(classical_solutions(classical), TimeSource::ClassicalWall);
  report.no_solutions = report.classical.empty() && report.quantum_core.empty();

  report.crossover_core = crossover_or_default(report.quantum_core, report.classical);
  report.crossover_wall = crossover_or_default(report.quantum_wall, report.classical);

  report.hamming_classical = hamming_neighbor_distances(report.classical.solutions);
  for (const auto &stream : quantumStreams)
    report.hamming_quantum.push_back(
        hamming_neighbor_distances(distinct_stream_solutions(stream, layout, cnf)));
  return report;
}

} // namespace cascor
