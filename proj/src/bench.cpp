#include "cascor/bench.hpp"

#include "cascor/parallel.hpp"

namespace cascor {

InstanceReport run_instance(const BenchInstance &instance, const BenchConfig &cfg) {
  const CompiledModel compiled = compile_cnf(instance.cnf, cfg.policy);
  const std::vector<Gauge> gauges =
      make_gauges(compiled.model.num_qubits(), cfg.gauges, cfg.sampler.seed);
  const auto streams = sample_with_srt_rotation(compiled.model, cfg.sampler, gauges);

  EnumerationResult classical = enumerate_all(instance.cnf, cfg.classical_cap, cfg.classical_budget);
  if (cfg.stable_output)
    for (SolutionEvent &event : classical.events)
      event.wall_time = Duration{0};

  return summarize_instance(instance.id, streams, classical, compiled.layout, instance.cnf);
}

std::vector<InstanceReport> run_bench(const std::vector<BenchInstance> &instances,
                                      const BenchConfig &cfg) {
  std::vector<InstanceReport> reports(instances.size());
  const unsigned workers = cfg.threads == 0 ? default_thread_count() : cfg.threads;
  BenchConfig inner = cfg;
  if (workers > 1)
    inner.sampler.threads = 1;
  parallel_for(instances.size(), workers,
               [&](std::size_t i) { reports[i] = run_instance(instances[i], inner); });
  return reports;
}

} // namespace cascor
