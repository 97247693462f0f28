#pragma once

#include "cascor/sat_core.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cascor {

/// A vector of +1/-1 entries. Tagged so spin states and gauges do not mix.
template <typename Tag>
class SignVector {
public:
  SignVector() = default;
  /// Throws InputError on entries other than +1 or -1.
  explicit SignVector(std::vector<std::int8_t> values);

  static SignVector all_up(std::size_t n) {
    return SignVector(std::vector<std::int8_t>(n, std::int8_t{1}));
  }

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int8_t> values() const { return values_; }

  auto operator<=>(const SignVector &) const = default;
  bool operator==(const SignVector &) const = default;

private:
  std::vector<std::int8_t> values_;
};

struct SpinTag;
struct GaugeTag;
using SpinState = SignVector<SpinTag>;
using Gauge = SignVector<GaugeTag>;

struct Coupling {
  std::uint32_t i;
  std::uint32_t j; ///< i < j
  double value;

  bool operator==(const Coupling &) const = default;
};

/// E(s) = sum_i h_i s_i + sum_{i<j} J_ij s_i s_j over s in {+1,-1}^N.
/// Couplings are kept sorted by (i, j) with no zeros and no duplicates.
class IsingModel {
public:
  IsingModel() = default;
  explicit IsingModel(std::size_t numQubits) : h_(numQubits, 0.0) {}
  /// Duplicate pairs are summed; (i, j) and (j, i) are the same pair.
  /// Throws InputError on self-couplings or out-of-range indices.
  IsingModel(std::vector<double> h, std::vector<Coupling> couplings);

  std::size_t num_qubits() const { return h_.size(); }
  const std::vector<double> &h() const { return h_; }
  const std::vector<Coupling> &couplings() const { return couplings_; }
  /// J_ij, or 0 if the pair is not coupled.
  double coupling(std::uint32_t i, std::uint32_t j) const;

  /// True when every coefficient is an integer (energies then compare exactly).
  bool integral() const;

  bool operator==(const IsingModel &) const = default;

private:
  std::vector<double> h_;
  std::vector<Coupling> couplings_;
};

/// Compressed neighbour lists, used by the samplers and the exhaustive scan.
struct Adjacency {
  std::vector<std::size_t> offsets; ///< size N + 1
  std::vector<std::uint32_t> neighbor;
  std::vector<double> weight;

  explicit Adjacency(const IsingModel &model);
};

double energy(const IsingModel &model, const SpinState &s);

/// h'_i = g_i h_i, J'_ij = g_i g_j J_ij.
IsingModel apply_gauge(const IsingModel &model, const Gauge &g);

/// Pointwise g * s. Maps samples of the gauged model back to the original.
SpinState ungauge_sample(const SpinState &s, const Gauge &g);

Gauge random_gauge(std::size_t n, std::uint64_t seed);

inline constexpr std::size_t kDefaultEnumerationLimit = 26;

struct GroundStates {
  double min_energy = 0.0;
  std::vector<SpinState> states; ///< sorted ascending
};

/// Exhaustive scan of all 2^N spin states. Throws LimitError if N > limit.
/// The state space is split across `threads` workers (0 = hardware count);
/// the result does not depend on the worker count.
GroundStates enumerate_ground_states(const IsingModel &model,
                                     std::size_t limit = kDefaultEnumerationLimit,
                                     unsigned threads = 0);

struct PenaltyLayout;

/// Minimum energy with the variable qubits clamped to `a` (+1 = true),
/// minimizing each clause's ancillas independently. Throws InputError if a
/// mapped variable is outside `a`, LimitError for clauses with more than 24
/// ancillas.
double min_energy_over_ancillas(const IsingModel &model, const PenaltyLayout &layout,
                                const Assignment &a);

/// Spin +1 for true, -1 for false.
inline std::int8_t spin_of(bool value) { return value ? 1 : -1; }

} // namespace cascor
