// cascor: generate mixed SAT instances, compile them to Ising penalty
// models, sample, enumerate, and compare solution-finding timelines.
//
// Exit codes: 0 success, 1 usage, 2 input error, 3 resource/limit error.

#include "cascor/allsat.hpp"
#include "cascor/bench.hpp"
#include "cascor/error.hpp"
#include "cascor/metrics.hpp"
#include "cascor/penalty.hpp"
#include "cascor/sampler.hpp"
#include "cascor/sat_core.hpp"
#include "cascor/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace cascor;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Writes to `path`, or to stdout when path is empty or "-".
void write_output(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write '" + path + "'");
  out << content;
}

Cnf load_cnf(const std::string &path) { return parse_dimacs(read_file(path)); }

Json load_json(const std::string &path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Json> load_jsonl(const std::string &path) {
  std::istringstream in(read_file(path));
  std::vector<Json> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      lines.push_back(Json::parse(line));
    } catch (const nlohmann::json::parse_error &e) {
      throw InputError("'" + path + "' has a malformed line: " + e.what());
    }
  }
  return lines;
}

unsigned env_threads() {
  const char *value = std::getenv("CASCOR_THREADS");
  if (!value || !*value)
    return 0;
  try {
    return static_cast<unsigned>(std::max(1L, std::stol(value)));
  } catch (const std::exception &) {
    throw UsageError("CASCOR_THREADS must be a positive integer");
  }
}

std::map<std::uint32_t, double> parse_length_weights(const std::string &text) {
  std::map<std::uint32_t, double> weights;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw UsageError("--lengths entries must look like k:weight, got '" + item + "'");
    try {
      weights[static_cast<std::uint32_t>(std::stoul(item.substr(0, colon)))] =
          std::stod(item.substr(colon + 1));
    } catch (const std::exception &) {
      throw UsageError("--lengths entry '" + item + "' is not k:weight");
    }
  }
  if (weights.empty())
    throw UsageError("--lengths is empty");
  return weights;
}

struct SamplerFlags {
  std::uint64_t reads = 1000;
  std::uint64_t sweeps = 100;
  double betaStart = 0.1;
  double betaEnd = 5.0;
  std::uint64_t seed = 0;
  std::size_t gauges = 1;
  double coreUs = 20.0;
  double programmingUs = 0.0;
  double readoutUs = 0.0;
  double postUs = 0.0;

  void attach(CLI::App &app) {
    app.add_option("--reads", reads, "Reads per gauge")->capture_default_str();
    app.add_option("--sweeps", sweeps, "Metropolis sweeps per read")->capture_default_str();
    app.add_option("--beta-start", betaStart, "Initial inverse temperature")->capture_default_str();
    app.add_option("--beta-end", betaEnd, "Final inverse temperature")->capture_default_str();
    app.add_option("--seed", seed, "Master seed")->capture_default_str();
    app.add_option("--gauges", gauges, "Gauge streams (identity first)")->capture_default_str();
    app.add_option("--core-us", coreUs, "Core anneal time per read (us)")->capture_default_str();
    app.add_option("--programming-us", programmingUs, "Programming overhead per batch (us)")
        ->capture_default_str();
    app.add_option("--readout-us", readoutUs, "Readout overhead per read (us)")->capture_default_str();
    app.add_option("--post-us", postUs, "Postprocessing overhead per batch (us)")->capture_default_str();
  }

  SamplerConfig config() const {
    auto us = [](double x) {
      return std::chrono::duration_cast<Duration>(std::chrono::duration<double, std::micro>(x));
    };
    SamplerConfig cfg;
    cfg.num_reads = reads;
    cfg.sweeps = sweeps;
    cfg.beta_start = betaStart;
    cfg.beta_end = betaEnd;
    cfg.seed = seed;
    cfg.core_time_per_read = us(coreUs);
    cfg.overhead = OverheadModel{us(programmingUs), us(readoutUs), us(postUs)};
    cfg.threads = env_threads();
    try {
      cfg.validate();
    } catch (const InputError &e) {
      throw UsageError(e.what());
    }
    if (gauges < 1)
      throw UsageError("--gauges must be at least 1");
    return cfg;
  }
};

//===----------------------------------------------------------------------===//
// Subcommands
//===----------------------------------------------------------------------===//

struct GenFlags {
  std::string specPath;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::string lengths;
  std::uint64_t cap = 1'000'000;
  std::uint64_t seed = 0;
  unsigned attempts = kDefaultGenerationAttempts;
  std::string output;
};

void run_gen(const GenFlags &f) {
  MixedSatSpec spec;
  if (!f.specPath.empty()) {
    spec = spec_from_json(load_json(f.specPath));
  } else {
    if (f.lengths.empty())
      throw UsageError("gen needs --lengths (or --spec)");
    if (f.n == 0)
      throw UsageError("gen needs --n");
    spec.num_vars = f.n;
    spec.num_clauses = f.m;
    spec.length_weights = parse_length_weights(f.lengths);
    spec.solution_cap = f.cap;
    spec.seed = f.seed;
    spec.validate();
  }
  const GeneratedInstance generated = generate_mixed_sat_instance(spec, f.attempts);
  write_output(f.output, emit_dimacs(generated.cnf));
  Json sidecar = {{"spec", spec_to_json(spec)},
                  {"solution_count", generated.solution_count},
                  {"attempt", generated.attempt}};
  write_output(f.output + ".json", sidecar.dump(2) + "\n");
}

struct CompileFlags {
  std::string input;
  std::string policy = "chain";
  std::optional<std::uint64_t> policySeed;
  std::string output;
};

void run_compile(const CompileFlags &f) {
  const Cnf cnf = load_cnf(f.input);
  const ConstructionPolicy policy = ConstructionPolicy::parse(f.policy, f.policySeed);
  const CompiledModel compiled = compile_cnf(cnf, policy);
  write_output(f.output, model_to_json(compiled.model, compiled.layout).dump(2) + "\n");
}

struct SampleFlags {
  std::string model;
  std::string cnf;
  std::string output;
  SamplerFlags sampler;
};

void run_sample(const SampleFlags &f) {
  const ModelDocument doc = model_from_json(load_json(f.model));
  const Cnf cnf = load_cnf(f.cnf);
  const SamplerConfig cfg = f.sampler.config();
  const auto gauges = make_gauges(doc.model.num_qubits(), f.sampler.gauges, cfg.seed);
  const auto streams = sample_with_srt_rotation(doc.model, cfg, gauges);
  std::ostringstream out;
  for (std::size_t g = 0; g < streams.size(); ++g)
    for (const SampleRecord &rec : streams[g])
      out << sample_to_json(rec, g, decode_sample(rec, doc.layout, cnf)).dump() << '\n';
  write_output(f.output, out.str());
}

struct AllsatFlags {
  std::string input;
  std::uint64_t cap = 1'000'000;
  std::optional<double> budgetMs;
  bool stable = false;
  std::string output;
};

std::optional<Duration> budget_of(const std::optional<double> &ms) {
  if (!ms)
    return std::nullopt;
  return std::chrono::duration_cast<Duration>(std::chrono::duration<double, std::milli>(*ms));
}

void run_allsat(const AllsatFlags &f) {
  using Clock = std::chrono::steady_clock;
  const auto loadStart = Clock::now();
  const Cnf cnf = load_cnf(f.input);
  Duration loadTime = std::chrono::duration_cast<Duration>(Clock::now() - loadStart);

  EnumerationResult result = enumerate_all(cnf, f.cap, budget_of(f.budgetMs));
  if (f.stable) {
    loadTime = Duration{0};
    for (SolutionEvent &event : result.events)
      event.wall_time = Duration{0};
  }
  std::ostringstream out;
  for (const SolutionEvent &event : result.events)
    out << event_to_json(event).dump() << '\n';
  out << enumeration_summary_to_json(result, loadTime).dump() << '\n';
  write_output(f.output, out.str());
}

struct MetricsFlags {
  std::string cnf;
  std::string model;
  std::string samples;
  std::string events;
  std::string id = "instance";
  std::string output;
};

void run_metrics(const MetricsFlags &f) {
  const Cnf cnf = load_cnf(f.cnf);
  const ModelDocument doc = model_from_json(load_json(f.model));

  std::map<std::size_t, std::vector<SampleRecord>> byGauge;
  for (const Json &line : load_jsonl(f.samples)) {
    SampleLine sample = sample_from_json(line);
    if (sample.record.spins.size() != doc.model.num_qubits())
      throw InputError("sample has " + std::to_string(sample.record.spins.size()) +
                       " spins for a " + std::to_string(doc.model.num_qubits()) + "-qubit model");
    byGauge[sample.gauge].push_back(std::move(sample.record));
  }
  std::vector<std::vector<SampleRecord>> streams;
  for (auto &[gauge, records] : byGauge) {
    std::sort(records.begin(), records.end(),
              [](const SampleRecord &a, const SampleRecord &b) { return a.read_index < b.read_index; });
    streams.push_back(std::move(records));
  }

  EnumerationResult classical;
  for (const Json &line : load_jsonl(f.events)) {
    if (line.contains("summary")) {
      classical.complete = line.value("complete", false);
      classical.cap_hit = line.value("cap_hit", false);
      continue;
    }
    SolutionEvent event = event_from_json(line);
    if (event.assignment.size() != cnf.num_vars())
      throw InputError("event assignment length does not match the formula");
    classical.events.push_back(std::move(event));
  }

  const InstanceReport report = summarize_instance(f.id, streams, classical, doc.layout, cnf);
  write_output(f.output, report_to_json(report).dump(2) + "\n");
}

struct BenchFlags {
  std::string dir;
  std::string output;
  std::string reports;
  std::string policy = "chain";
  std::optional<std::uint64_t> policySeed;
  std::uint64_t cap = 1'000'000;
  std::optional<double> budgetMs;
  bool stable = false;
  SamplerFlags sampler;
};

void run_bench_cmd(const BenchFlags &f) {
  if (!fs::is_directory(f.dir))
    throw InputError("'" + f.dir + "' is not a directory");
  std::vector<fs::path> paths;
  for (const auto &entry : fs::directory_iterator(f.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cnf")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  if (paths.empty())
    throw InputError("no .cnf files in '" + f.dir + "'");

  std::vector<BenchInstance> instances;
  for (const fs::path &p : paths)
    instances.push_back(BenchInstance{p.stem().string(), load_cnf(p.string())});

  BenchConfig cfg;
  cfg.sampler = f.sampler.config();
  cfg.gauges = f.sampler.gauges;
  cfg.policy = ConstructionPolicy::parse(f.policy, f.policySeed);
  cfg.classical_cap = f.cap;
  cfg.classical_budget = budget_of(f.budgetMs);
  cfg.stable_output = f.stable;
  cfg.threads = env_threads();

  const std::vector<InstanceReport> reports = run_bench(instances, cfg);
  std::ostringstream csv;
  csv << report_csv_header() << '\n';
  for (const InstanceReport &r : reports)
    csv << report_csv_row(r) << '\n';
  write_output(f.output, csv.str());
  if (!f.reports.empty()) {
    Json all = Json::array();
    for (const InstanceReport &r : reports)
      all.push_back(report_to_json(r));
    write_output(f.reports, all.dump(2) + "\n");
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cascading-OR SAT to Ising toolkit"};
  app.require_subcommand(1, 1);

  GenFlags gen;
  CLI::App *genCmd = app.add_subcommand("gen", "Generate a random mixed SAT instance");
  genCmd->add_option("--spec", gen.specPath, "Generator spec JSON");
  genCmd->add_option("--n", gen.n, "Variables");
  genCmd->add_option("--m", gen.m, "Clauses");
  genCmd->add_option("--lengths", gen.lengths, "Clause length weights, e.g. 2:1,3:2,4:1");
  genCmd->add_option("--cap", gen.cap, "Maximum admissible solution count")->capture_default_str();
  genCmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  genCmd->add_option("--attempts", gen.attempts, "Retry budget")->capture_default_str();
  genCmd->add_option("-o,--output", gen.output, "Output DIMACS path (sidecar: <path>.json)")
      ->required();

  CompileFlags compile;
  CLI::App *compileCmd = app.add_subcommand("compile", "Compile DIMACS to an Ising model");
  compileCmd->add_option("cnf", compile.input, "DIMACS file")->required();
  compileCmd->add_option("--policy", compile.policy, "chain | balanced | random")
      ->capture_default_str();
  compileCmd->add_option("--policy-seed", compile.policySeed, "Seed for the random policy");
  compileCmd->add_option("-o,--output", compile.output, "Output JSON (default stdout)");

  SampleFlags sampleFlags;
  CLI::App *sampleCmd = app.add_subcommand("sample", "Anneal a compiled model");
  sampleCmd->add_option("--model", sampleFlags.model, "Model JSON")->required();
  sampleCmd->add_option("--cnf", sampleFlags.cnf, "DIMACS file used to decode solutions")->required();
  sampleCmd->add_option("-o,--output", sampleFlags.output, "Output JSONL (default stdout)");
  sampleFlags.sampler.attach(*sampleCmd);

  AllsatFlags allsat;
  CLI::App *allsatCmd = app.add_subcommand("allsat", "Enumerate all solutions classically");
  allsatCmd->add_option("cnf", allsat.input, "DIMACS file")->required();
  allsatCmd->add_option("--cap", allsat.cap, "Stop after this many solutions")->capture_default_str();
  allsatCmd->add_option("--budget-ms", allsat.budgetMs, "Time budget in milliseconds");
  allsatCmd->add_flag("--stable-output", allsat.stable, "Zero all timestamps");
  allsatCmd->add_option("-o,--output", allsat.output, "Output JSONL (default stdout)");

  MetricsFlags metrics;
  CLI::App *metricsCmd = app.add_subcommand("metrics", "Summarize one instance's runs");
  metricsCmd->add_option("--cnf", metrics.cnf, "DIMACS file")->required();
  metricsCmd->add_option("--model", metrics.model, "Model JSON")->required();
  metricsCmd->add_option("--samples", metrics.samples, "Sample JSONL")->required();
  metricsCmd->add_option("--events", metrics.events, "Allsat JSONL")->required();
  metricsCmd->add_option("--id", metrics.id, "Instance id")->capture_default_str();
  metricsCmd->add_option("-o,--output", metrics.output, "Report JSON (default stdout)");

  BenchFlags bench;
  CLI::App *benchCmd = app.add_subcommand("bench", "Run the full pipeline over a directory");
  benchCmd->add_option("--dir", bench.dir, "Directory of .cnf instances")->required();
  benchCmd->add_option("-o,--output", bench.output, "Aggregate CSV (default stdout)");
  benchCmd->add_option("--reports", bench.reports, "Per-instance reports JSON");
  benchCmd->add_option("--policy", bench.policy, "chain | balanced | random")->capture_default_str();
  benchCmd->add_option("--policy-seed", bench.policySeed, "Seed for the random policy");
  benchCmd->add_option("--cap", bench.cap, "Classical solution cap")->capture_default_str();
  benchCmd->add_option("--budget-ms", bench.budgetMs, "Classical time budget in milliseconds");
  benchCmd->add_flag("--stable-output", bench.stable, "Zero classical timestamps");
  bench.sampler.attach(*benchCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*genCmd)
      run_gen(gen);
    else if (*compileCmd)
      run_compile(compile);
    else if (*sampleCmd)
      run_sample(sampleFlags);
    else if (*allsatCmd)
      run_allsat(allsat);
    else if (*metricsCmd)
      run_metrics(metrics);
    else if (*benchCmd)
      run_bench_cmd(bench);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const LimitError &e) {
    std::cerr << "limit reached: " << e.what() << '\n';
    return kExitLimit;
  }
  return 0;
}
