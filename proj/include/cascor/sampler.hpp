#pragma once

#include "cascor/allsat.hpp"
#include "cascor/ising.hpp"
#include "cascor/penalty.hpp"
#include "cascor/random.hpp"
#include "cascor/sat_core.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace cascor {

/// Fixed costs added to the wallclock axis. Core annealing time is not
/// part of this; it is SamplerConfig::core_time_per_read.
struct OverheadModel {
  Duration programming{0};      ///< once per batch, before the first read
  Duration per_read_readout{0}; ///< after every read
  Duration post{0};             ///< once per batch

  bool operator==(const OverheadModel &) const = default;
};

struct SamplerConfig {
  std::uint64_t num_reads = 1000;
  std::uint64_t sweeps = 100;
  double beta_start = 0.1;
  double beta_end = 5.0;
  std::uint64_t seed = 0;
  Duration core_time_per_read = std::chrono::microseconds(20);
  OverheadModel overhead;
  unsigned threads = 0; ///< 0 = hardware concurrency; never affects results

  /// Throws InputError when an invariant fails.
  void validate() const;
};

struct SampleRecord {
  std::uint64_t read_index = 0; ///< 0-based
  SpinState spins;
  double energy = 0.0;
  Duration core_time{0};
  Duration wall_time{0};
};

/// Wallclock stamp of read `readIndex` (0-based): programming + post +
/// (readIndex + 1) * (core + readout).
Duration wall_time_of(const SamplerConfig &cfg, std::uint64_t readIndex);

/// Classical annealing stand-in for the quantum sampler. Every read starts
/// from a uniformly random state and runs `sweeps` in-order Metropolis
/// sweeps with beta stepped linearly from beta_start to beta_end. Read r
/// uses its own stream derive_seed(seed, r), so output depends only on
/// (model, cfg) and not on the worker count.
std::vector<SampleRecord> sample(const IsingModel &model, const SamplerConfig &cfg);

/// Variable bits of the sample (+1 = true); unmapped variables are false.
/// Returns the assignment iff it satisfies `cnf`, whatever the ancillas do.
std::optional<Assignment> decode_sample(const SampleRecord &record, const PenaltyLayout &layout,
                                        const Cnf &cnf);

/// Seed used for gauge stream `g` of a rotation run.
inline std::uint64_t gauge_stream_seed(std::uint64_t master, std::size_t g) {
  return derive_seed(master ^ 0x5157a11ce0ffee00ULL, g);
}

/// For each gauge g: sample the gauged model with seed
/// gauge_stream_seed(cfg.seed, g), then map the spins back through g and
/// re-evaluate energies on the original model.
std::vector<std::vector<SampleRecord>> sample_with_srt_rotation(const IsingModel &model,
                                                                const SamplerConfig &cfg,
                                                                const std::vector<Gauge> &gauges);

/// The identity gauge followed by `count - 1` random gauges drawn from `seed`.
std::vector<Gauge> make_gauges(std::size_t numQubits, std::size_t count, std::uint64_t seed);

} // namespace cascor
