#pragma once

#include "cascor/allsat.hpp"
#include "cascor/metrics.hpp"
#include "cascor/penalty.hpp"
#include "cascor/sampler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cascor {

struct BenchConfig {
  SamplerConfig sampler;
  std::size_t gauges = 1; ///< identity first, then random gauges
  ConstructionPolicy policy = ConstructionPolicy::chain();
  std::uint64_t classical_cap = 1'000'000;
  std::optional<Duration> classical_budget;
  bool stable_output = false; ///< zero classical timestamps
  unsigned threads = 0;       ///< instance-level workers
};

struct BenchInstance {
  std::string id;
  Cnf cnf;
};

/// compile -> sample with gauge rotation -> enumerate -> summarize.
InstanceReport run_instance(const BenchInstance &instance, const BenchConfig &cfg);

/// Runs every instance (in parallel when cfg.threads allows) and returns the
/// reports in input order.
std::vector<InstanceReport> run_bench(const std::vector<BenchInstance> &instances,
                                      const BenchConfig &cfg);

} // namespace cascor
