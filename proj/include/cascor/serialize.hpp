#pragma once

// JSON, JSONL and CSV forms of the toolkit's artifacts. All durations are
// written as integer microseconds (truncated).

#include "cascor/allsat.hpp"
#include "cascor/ising.hpp"
#include "cascor/metrics.hpp"
#include "cascor/penalty.hpp"
#include "cascor/sampler.hpp"
#include "cascor/sat_core.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace cascor {

using Json = nlohmann::json;

std::int64_t to_microseconds(Duration d);

Json spec_to_json(const MixedSatSpec &spec);
MixedSatSpec spec_from_json(const Json &doc);

/// {num_qubits, h, J: [[i, j, value]...], ground_bound, var_to_qubit,
///  clause_ancillas, clause_ground_energies, policy}
Json model_to_json(const IsingModel &model, const PenaltyLayout &layout);

struct ModelDocument {
  IsingModel model;
  PenaltyLayout layout;
};
ModelDocument model_from_json(const Json &doc);

Json gauge_to_json(const Gauge &g);
Gauge gauge_from_json(const Json &doc);

/// {read, gauge, spins, energy, core_time_us, wall_time_us, solution}
Json sample_to_json(const SampleRecord &rec, std::size_t gauge,
                    const std::optional<Assignment> &solution);

struct SampleLine {
  std::size_t gauge = 0;
  SampleRecord record;
};
SampleLine sample_from_json(const Json &doc);

/// {index, wall_time_us, assignment}
Json event_to_json(const SolutionEvent &event);
SolutionEvent event_from_json(const Json &doc);

/// Trailing line of an allsat JSONL stream.
Json enumeration_summary_to_json(const EnumerationResult &result, Duration loadTime);

Json report_to_json(const InstanceReport &report);
InstanceReport report_from_json(const Json &doc);

std::string report_csv_header();
std::string report_csv_row(const InstanceReport &report);

} // namespace cascor
