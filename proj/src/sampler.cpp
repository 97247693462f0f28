#include "cascor/sampler.hpp"

#include "cascor/error.hpp"
#include "cascor/parallel.hpp"

#include <cmath>

namespace cascor {

void SamplerConfig::validate() const {
  if (num_reads < 1)
    throw InputError("num_reads must be at least 1");
  if (sweeps < 1)
    throw InputError("sweeps must be at least 1");
  if (!(beta_start > 0.0) || !(beta_start <= beta_end) || !std::isfinite(beta_end))
    throw InputError("schedule needs 0 < beta_start <= beta_end");
  if (core_time_per_read <= Duration::zero())
    throw InputError("core_time_per_read must be positive");
  if (overhead.programming < Duration::zero() || overhead.per_read_readout < Duration::zero() ||
      overhead.post < Duration::zero())
    throw InputError("overhead durations must be non-negative");
}

Duration wall_time_of(const SamplerConfig &cfg, std::uint64_t readIndex) {
  const auto reads = static_cast<Duration::rep>(readIndex + 1);
  return cfg.overhead.programming + cfg.overhead.post +
         reads * (cfg.core_time_per_read + cfg.overhead.per_read_readout);
}

namespace {

std::vector<double> beta_schedule(const SamplerConfig &cfg) {
  std::vector<double> betas(cfg.sweeps);
  for (std::uint64_t s = 0; s < cfg.sweeps; ++s) {
    const double t = cfg.sweeps == 1 ? 0.0 : static_cast<double>(s) / static_cast<double>(cfg.sweeps - 1);
    betas[s] = cfg.beta_start + (cfg.beta_end - cfg.beta_start) * t;
  }
  return betas;
}

SpinState anneal_once(const IsingModel &model, const Adjacency &adj,
                      const std::vector<double> &betas, std::uint64_t seed) {
  const std::size_t n = model.num_qubits();
  Rng rng(seed);
  std::vector<std::int8_t> spin(n);
  for (auto &s : spin)
    s = rng.coin() ? 1 : -1;

  std::vector<double> field(model.h());
  for (const Coupling &c : model.couplings()) {
    field[c.i] += c.value * spin[c.j];
    field[c.j] += c.value * spin[c.i];
  }

  for (double beta : betas) {
    for (std::size_t q = 0; q < n; ++q) {
      const double delta = -2.0 * spin[q] * field[q];
      if (delta > 0.0 && rng.uniform01() >= std::exp(-beta * delta))
        continue;
      spin[q] = static_cast<std::int8_t>(-spin[q]);
      const double twice = 2.0 * spin[q];
      for (std::size_t k = adj.offsets[q]; k < adj.offsets[q + 1]; ++k)
        field[adj.neighbor[k]] += twice * adj.weight[k];
    }
  }
  return SpinState(std::move(spin));
}

} // namespace

std::vector<SampleRecord> sample(const IsingModel &model, const SamplerConfig &cfg) {
  cfg.validate();
  const Adjacency adj(model);
  const std::vector<double> betas = beta_schedule(cfg);

  std::vector<SampleRecord> records(cfg.num_reads);
  parallel_for(cfg.num_reads, cfg.threads, [&](std::size_t r) {
    SampleRecord &rec = records[r];
    rec.read_index = r;
    rec.spins = anneal_once(model, adj, betas, derive_seed(cfg.seed, r));
    rec.energy = energy(model, rec.spins);
    rec.core_time = static_cast<Duration::rep>(r + 1) * cfg.core_time_per_read;
    rec.wall_time = wall_time_of(cfg, r);
  });
  return records;
}

std::optional<Assignment> decode_sample(const SampleRecord &record, const PenaltyLayout &layout,
                                        const Cnf &cnf) {
  Assignment a(cnf.num_vars());
  for (const auto &[var, qubit] : layout.var_to_qubit) {
    if (var > cnf.num_vars() || qubit >= record.spins.size())
      return std::nullopt;
    a.set(var, record.spins[qubit] > 0);
  }
  if (!evaluate(cnf, a))
    return std::nullopt;
  return a;
}

std::vector<std::vector<SampleRecord>> sample_with_srt_rotation(const IsingModel &model,
                                                                const SamplerConfig &cfg,
                                                                const std::vector<Gauge> &gauges) {
  for (const Gauge &g : gauges)
    if (g.size() != model.num_qubits())
      throw InputError("gauge of length " + std::to_string(g.size()) + " for a " +
                       std::to_string(model.num_qubits()) + "-qubit model");

  std::vector<std::vector<SampleRecord>> streams;
  streams.reserve(gauges.size());
  for (std::size_t g = 0; g < gauges.size(); ++g) {
    SamplerConfig gaugedCfg = cfg;
    gaugedCfg.seed = gauge_stream_seed(cfg.seed, g);
    std::vector<SampleRecord> records = sample(apply_gauge(model, gauges[g]), gaugedCfg);
    for (SampleRecord &rec : records) {
      rec.spins = ungauge_sample(rec.spins, gauges[g]);
      rec.energy = energy(model, rec.spins);
    }
    streams.push_back(std::move(records));
  }
  return streams;
}

std::vector<Gauge> make_gauges(std::size_t numQubits, std::size_t count, std::uint64_t seed) {
  std::vector<Gauge> gauges;
  if (count == 0)
    return gauges;
  gauges.push_back(Gauge::all_up(numQubits));
  for (std::size_t g = 1; g < count; ++g)
    gauges.push_back(random_gauge(numQubits, derive_seed(seed ^ 0x9a0e5eedULL, g)));
  return gauges;
}

} // namespace cascor
