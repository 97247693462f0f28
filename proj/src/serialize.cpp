#include "cascor/serialize.hpp"

#include "cascor/error.hpp"

#include <cstdio>
#include <sstream>

namespace cascor {

std::int64_t to_microseconds(Duration d) {
  return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
}

namespace {

Duration from_microseconds(std::int64_t us) { return std::chrono::microseconds(us); }

// nlohmann throws its own exception types on missing keys or type
// mismatches; report those as input errors.
template <typename Fn>
auto guarded(const char *what, Fn &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception &e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json policy_to_json(const ConstructionPolicy &policy) {
  Json doc = {{"kind", policy.name()}};
  if (policy.seed())
    doc["seed"] = *policy.seed();
  return doc;
}

ConstructionPolicy policy_from_json(const Json &doc) {
  std::optional<std::uint64_t> seed;
  if (doc.contains("seed"))
    seed = doc.at("seed").get<std::uint64_t>();
  return ConstructionPolicy::parse(doc.at("kind").get<std::string>(), seed);
}

Json timeline_to_json(const DistinctTimeline &timeline) {
  Json points = Json::array();
  for (std::size_t i = 0; i < timeline.points.size(); ++i)
    points.push_back({{"time_us", to_microseconds(timeline.points[i].time)},
                      {"count", timeline.points[i].count},
                      {"solution", timeline.solutions[i].to_bitstring()}});
  return {{"source", to_string(timeline.source)}, {"points", points}};
}

DistinctTimeline timeline_from_json(const Json &doc) {
  DistinctTimeline timeline;
  timeline.source = time_source_from_string(doc.at("source").get<std::string>());
  for (const Json &p : doc.at("points")) {
    timeline.points.push_back(TimelinePoint{from_microseconds(p.at("time_us").get<std::int64_t>()),
                                            p.at("count").get<std::uint64_t>()});
    timeline.solutions.push_back(Assignment::from_bitstring(p.at("solution").get<std::string>()));
  }
  return timeline;
}

Json crossover_to_json(const std::optional<CrossoverReport> &report) {
  if (!report)
    return nullptr;
  Json doc = {{"outcome", to_string(report->outcome)}};
  if (report->outcome == CrossoverReport::Outcome::CrossAt) {
    doc["count"] = report->count;
    doc["time_us"] = to_microseconds(report->time);
  }
  doc["overlap_jaccard"] = report->overlap ? Json(*report->overlap) : Json(nullptr);
  return doc;
}

std::optional<CrossoverReport> crossover_from_json(const Json &doc) {
  if (doc.is_null())
    return std::nullopt;
  CrossoverReport report;
  report.outcome = crossover_outcome_from_string(doc.at("outcome").get<std::string>());
  if (report.outcome == CrossoverReport::Outcome::CrossAt) {
    report.count = doc.at("count").get<std::uint64_t>();
    report.time = from_microseconds(doc.at("time_us").get<std::int64_t>());
  }
  if (doc.contains("overlap_jaccard") && !doc.at("overlap_jaccard").is_null())
    report.overlap = doc.at("overlap_jaccard").get<double>();
  return report;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

} // namespace

Json spec_to_json(const MixedSatSpec &spec) {
  Json weights = Json::object();
  for (const auto &[k, w] : spec.length_weights)
    weights[std::to_string(k)] = w;
  return {{"num_vars", spec.num_vars},
          {"num_clauses", spec.num_clauses},
          {"length_weights", weights},
          {"seed", spec.seed},
          {"solution_cap", spec.solution_cap}};
}

MixedSatSpec spec_from_json(const Json &doc) {
  return guarded("generator spec", [&] {
    MixedSatSpec spec;
    spec.num_vars = doc.at("num_vars").get<std::uint32_t>();
    spec.num_clauses = doc.at("num_clauses").get<std::uint32_t>();
    for (const auto &[key, value] : doc.at("length_weights").items()) {
      std::size_t used = 0;
      unsigned long k = 0;
      try {
        k = std::stoul(key, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != key.size())
        throw InputError("length_weights key '" + key + "' is not a clause length");
      spec.length_weights[static_cast<std::uint32_t>(k)] = value.get<double>();
    }
    spec.seed = doc.at("seed").get<std::uint64_t>();
    spec.solution_cap = doc.at("solution_cap").get<std::uint64_t>();
    spec.validate();
    return spec;
  });
}

Json model_to_json(const IsingModel &model, const PenaltyLayout &layout) {
  Json couplings = Json::array();
  for (const Coupling &c : model.couplings())
    couplings.push_back(Json::array({c.i, c.j, c.value}));
  Json varMap = Json::object();
  for (const auto &[var, qubit] : layout.var_to_qubit)
    varMap[std::to_string(var)] = qubit;
  return {{"num_qubits", model.num_qubits()},
          {"h", model.h()},
          {"J", couplings},
          {"ground_bound", layout.ground_bound},
          {"var_to_qubit", varMap},
          {"clause_ancillas", layout.clause_ancillas},
          {"clause_ground_energies", layout.clause_ground_energies},
          {"policy", policy_to_json(layout.policy)}};
}

ModelDocument model_from_json(const Json &doc) {
  return guarded("model document", [&] {
    const auto n = doc.at("num_qubits").get<std::size_t>();
    auto h = doc.at("h").get<std::vector<double>>();
    if (h.size() != n)
      throw InputError("h has " + std::to_string(h.size()) + " entries for " + std::to_string(n) +
                       " qubits");
    std::vector<Coupling> couplings;
    for (const Json &entry : doc.at("J")) {
      if (!entry.is_array() || entry.size() != 3)
        throw InputError("J entries must be [i, j, value]");
      couplings.push_back(Coupling{entry[0].get<std::uint32_t>(), entry[1].get<std::uint32_t>(),
                                   entry[2].get<double>()});
    }
    ModelDocument out{IsingModel(std::move(h), std::move(couplings)), PenaltyLayout{}};
    PenaltyLayout &layout = out.layout;
    layout.num_qubits = n;
    layout.ground_bound = doc.at("ground_bound").get<double>();
    for (const auto &[key, value] : doc.at("var_to_qubit").items()) {
      const auto qubit = value.get<std::uint32_t>();
      if (qubit >= n)
        throw InputError("variable " + key + " maps outside the model");
      layout.var_to_qubit[static_cast<std::uint32_t>(std::stoul(key))] = qubit;
    }
    layout.clause_ancillas = doc.at("clause_ancillas").get<std::vector<std::vector<std::uint32_t>>>();
    layout.clause_ground_energies = doc.at("clause_ground_energies").get<std::vector<double>>();
    if (layout.clause_ancillas.size() != layout.clause_ground_energies.size())
      throw InputError("clause_ancillas and clause_ground_energies differ in length");
    for (const auto &ancillas : layout.clause_ancillas)
      for (std::uint32_t q : ancillas)
        if (q >= n)
          throw InputError("ancilla " + std::to_string(q) + " outside the model");
    layout.policy = policy_from_json(doc.at("policy"));
    return out;
  });
}

Json gauge_to_json(const Gauge &g) {
  Json doc = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    doc.push_back(g[i]);
  return doc;
}

Gauge gauge_from_json(const Json &doc) {
  return guarded("gauge", [&] { return Gauge(doc.get<std::vector<std::int8_t>>()); });
}

Json sample_to_json(const SampleRecord &rec, std::size_t gauge,
                    const std::optional<Assignment> &solution) {
  Json spins = Json::array();
  for (std::size_t i = 0; i < rec.spins.size(); ++i)
    spins.push_back(rec.spins[i]);
  return {{"read", rec.read_index},
          {"gauge", gauge},
          {"spins", spins},
          {"energy", rec.energy},
          {"core_time_us", to_microseconds(rec.core_time)},
          {"wall_time_us", to_microseconds(rec.wall_time)},
          {"solution", solution ? Json(solution->to_bitstring()) : Json(nullptr)}};
}

SampleLine sample_from_json(const Json &doc) {
  return guarded("sample record", [&] {
    SampleLine line;
    line.gauge = doc.value("gauge", std::size_t{0});
    line.record.read_index = doc.at("read").get<std::uint64_t>();
    line.record.spins = SpinState(doc.at("spins").get<std::vector<std::int8_t>>());
    line.record.energy = doc.at("energy").get<double>();
    line.record.core_time = from_microseconds(doc.at("core_time_us").get<std::int64_t>());
    line.record.wall_time = from_microseconds(doc.at("wall_time_us").get<std::int64_t>());
    return line;
  });
}

Json event_to_json(const SolutionEvent &event) {
  return {{"index", event.index},
          {"wall_time_us", to_microseconds(event.wall_time)},
          {"assignment", event.assignment.to_bitstring()}};
}

SolutionEvent event_from_json(const Json &doc) {
  return guarded("solution event", [&] {
    return SolutionEvent{Assignment::from_bitstring(doc.at("assignment").get<std::string>()),
                         from_microseconds(doc.at("wall_time_us").get<std::int64_t>()),
                         doc.at("index").get<std::uint64_t>()};
  });
}

Json enumeration_summary_to_json(const EnumerationResult &result, Duration loadTime) {
  return {{"summary", true},
          {"count", result.events.size()},
          {"complete", result.complete},
          {"cap_hit", result.cap_hit},
          {"load_time_us", to_microseconds(loadTime)}};
}

Json report_to_json(const InstanceReport &report) {
  Json hammingQuantum = Json::array();
  for (const auto &series : report.hamming_quantum)
    hammingQuantum.push_back(series);
  return {{"instance_id", report.instance_id},
          {"n", report.num_vars},
          {"num_clauses", report.num_clauses},
          {"qubits", report.num_qubits},
          {"ground_bound", report.ground_bound},
          {"classical_complete", report.classical_complete},
          {"classical_cap_hit", report.classical_cap_hit},
          {"no_solutions", report.no_solutions},
          {"overlap_measure", "jaccard"},
          {"hamming_duplicates", "removed"},
          {"quantum_core", timeline_to_json(report.quantum_core)},
          {"quantum_wall", timeline_to_json(report.quantum_wall)},
          {"classical", timeline_to_json(report.classical)},
          {"crossover_core", crossover_to_json(report.crossover_core)},
          {"crossover_wall", crossover_to_json(report.crossover_wall)},
          {"hamming_classical", report.hamming_classical},
          {"hamming_quantum", hammingQuantum}};
}

InstanceReport report_from_json(const Json &doc) {
  return guarded("instance report", [&] {
    InstanceReport report;
    report.instance_id = doc.at("instance_id").get<std::string>();
    report.num_vars = doc.at("n").get<std::uint32_t>();
    report.num_clauses = doc.at("num_clauses").get<std::uint64_t>();
    report.num_qubits = doc.at("qubits").get<std::uint64_t>();
    report.ground_bound = doc.at("ground_bound").get<double>();
    report.classical_complete = doc.at("classical_complete").get<bool>();
    report.classical_cap_hit = doc.at("classical_cap_hit").get<bool>();
    report.no_solutions = doc.at("no_solutions").get<bool>();
    report.quantum_core = timeline_from_json(doc.at("quantum_core"));
    report.quantum_wall = timeline_from_json(doc.at("quantum_wall"));
    report.classical = timeline_from_json(doc.at("classical"));
    report.crossover_core = crossover_from_json(doc.at("crossover_core"));
    report.crossover_wall = crossover_from_json(doc.at("crossover_wall"));
    report.hamming_classical = doc.at("hamming_classical").get<std::vector<std::uint32_t>>();
    report.hamming_quantum =
        doc.at("hamming_quantum").get<std::vector<std::vector<std::uint32_t>>>();
    return report;
  });
}

std::string report_csv_header() {
  return "instance_id,n,num_clauses,qubits,crossover_axis,crossover_count,crossover_time_us,"
         "overlap_jaccard,hamming_mean_classical,hamming_mean_quantum_per_gauge";
}

std::string report_csv_row(const InstanceReport &report) {
  std::ostringstream row;
  row << report.instance_id << ',' << report.num_vars << ',' << report.num_clauses << ','
      << report.num_qubits << ",core,";
  // crossover_count carries the outcome name when there is no crossing.
  if (!report.crossover_core) {
    row << "no_solutions,,";
  } else if (report.crossover_core->outcome == CrossoverReport::Outcome::CrossAt) {
    row << report.crossover_core->count << ',' << to_microseconds(report.crossover_core->time)
        << ',';
  } else {
    row << to_string(report.crossover_core->outcome) << ",,";
  }
  if (report.crossover_core && report.crossover_core->overlap)
    row << format_number(*report.crossover_core->overlap);
  row << ',' << format_number(mean_of(report.hamming_classical)) << ',';
  for (std::size_t g = 0; g < report.hamming_quantum.size(); ++g) {
    if (g > 0)
      row << ';';
    row << format_number(mean_of(report.hamming_quantum[g]));
  }
  return row.str();
}

} // namespace cascor
