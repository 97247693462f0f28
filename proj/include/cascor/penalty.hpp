#pragma once

#include "cascor/ising.hpp"
#include "cascor/sat_core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cascor {

/// Sparse linear (sigma^z) and pairwise (sigma^z sigma^z) coefficients.
/// Coefficients accumulate additively; a coefficient that sums to zero is
/// dropped.
class TermSet {
public:
  using Pair = std::pair<std::uint32_t, std::uint32_t>; ///< first < second

  void add_linear(std::uint32_t q, double c);
  /// Throws InputError if a == b.
  void add_quadratic(std::uint32_t a, std::uint32_t b, double c);
  void add(const TermSet &other);

  double linear(std::uint32_t q) const;
  double quadratic(std::uint32_t a, std::uint32_t b) const;
  const std::map<std::uint32_t, double> &linear_terms() const { return linear_; }
  const std::map<Pair, double> &quadratic_terms() const { return quadratic_; }

  /// Largest qubit index referenced plus one (0 if empty).
  std::size_t span() const;
  IsingModel to_model(std::size_t numQubits) const;

  bool operator==(const TermSet &) const = default;

private:
  std::map<std::uint32_t, double> linear_;
  std::map<Pair, double> quadratic_;
};

/// Which variable slot each OR-with-output block is cascaded into when a
/// clause grows past two literals. All choices share one ground space.
class ConstructionPolicy {
public:
  enum class Kind { Chain, Balanced, SeededRandom };

  static ConstructionPolicy chain() { return ConstructionPolicy(Kind::Chain, std::nullopt); }
  static ConstructionPolicy balanced() { return ConstructionPolicy(Kind::Balanced, std::nullopt); }
  static ConstructionPolicy seeded_random(std::uint64_t seed) {
    return ConstructionPolicy(Kind::SeededRandom, seed);
  }
  /// "chain", "balanced", or "random" (seed required for "random").
  static ConstructionPolicy parse(const std::string &name, std::optional<std::uint64_t> seed);

  Kind kind() const { return kind_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  std::string name() const;

  bool operator==(const ConstructionPolicy &) const = default;

private:
  ConstructionPolicy(Kind kind, std::optional<std::uint64_t> seed) : kind_(kind), seed_(seed) {}

  Kind kind_;
  std::optional<std::uint64_t> seed_;
};

/// Hands out consecutive qubit indices, optionally up to a capacity.
class QubitAllocator {
public:
  explicit QubitAllocator(std::uint32_t first = 0,
                          std::optional<std::uint32_t> capacity = std::nullopt)
      : next_(first), capacity_(capacity) {}

  /// Throws LimitError once `capacity` indices have been reached.
  std::uint32_t fresh();
  std::uint32_t next() const { return next_; }

private:
  std::uint32_t next_;
  std::optional<std::uint32_t> capacity_;
};

struct ClausePenalty {
  TermSet terms;
  std::vector<std::uint32_t> variable_qubits; ///< by literal position
  std::vector<std::uint32_t> ancilla_qubits;  ///< k - 2 entries for k >= 2
  double ground_energy = 0.0;

  std::size_t num_qubits() const { return variable_qubits.size() + ancilla_qubits.size(); }
};

/// Ground energy of a k-literal clause penalty: -1 - 3(k - 2), or -1 for k = 1.
double clause_ground_energy(std::size_t k);

/// Two-literal clause: -s1 - s2 + s1 s2 for positive literals.
TermSet build_h2(std::uint32_t q1, std::uint32_t q2, bool neg1, bool neg2);

/// OR with output: ground states are exactly those with z = x1 v x2.
TermSet build_h_or(std::uint32_t q1, std::uint32_t q2, std::uint32_t qz, bool neg1, bool neg2);

using VariableMap = std::map<std::uint32_t, std::uint32_t>; ///< variable -> qubit

/// Cascading-OR penalty for one clause. Ancillas come from `alloc`.
/// Throws InputError if a clause variable is missing from `varMap`.
ClausePenalty build_clause_penalty(const Clause &clause, QubitAllocator &alloc,
                                   const VariableMap &varMap, const ConstructionPolicy &policy);

struct PenaltyLayout {
  VariableMap var_to_qubit;
  std::vector<std::vector<std::uint32_t>> clause_ancillas;
  std::vector<double> clause_ground_energies;
  double ground_bound = 0.0;
  std::size_t num_qubits = 0;
  ConstructionPolicy policy = ConstructionPolicy::chain();

  bool operator==(const PenaltyLayout &) const = default;
};

struct CompiledModel {
  IsingModel model;
  PenaltyLayout layout;
  std::vector<ClausePenalty> penalties; ///< per clause, in clause order
};

/// Sums the clause penalties of `cnf` into one model. Variable qubits come
/// first (ascending variable index, one per occurring variable), followed by
/// each clause's ancillas in clause order. For seeded_random, clause c uses
/// the sub-stream derive_seed(seed, c). Throws InputError for an empty clause
/// list.
CompiledModel compile_cnf(const Cnf &cnf,
                          const ConstructionPolicy &policy = ConstructionPolicy::chain());

} // namespace cascor
