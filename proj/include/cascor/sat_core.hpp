#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cascor {

/// A possibly negated occurrence of a 1-based variable.
struct Literal {
  std::uint32_t var = 1;
  bool negated = false;

  /// DIMACS integer form: +var or -var.
  int dimacs() const { return negated ? -static_cast<int>(var) : static_cast<int>(var); }
  static Literal from_dimacs(int lit);

  /// Truth value of this literal when its variable has value `value`.
  bool satisfied_by(bool value) const { return value != negated; }

  auto operator<=>(const Literal &) const = default;
};

/// A disjunction of literals over pairwise distinct variables.
class Clause {
public:
  Clause() = default;
  /// Throws InputError if empty, if a var is 0, or if a variable repeats.
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal> &literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  const Literal &operator[](std::size_t i) const { return literals_[i]; }

  bool operator==(const Clause &) const = default;

private:
  std::vector<Literal> literals_;
};

/// Variable assignment; bit i holds the value of variable i + 1.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::size_t numVars) : bits_(numVars, false) {}
  explicit Assignment(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Parses a string of '0'/'1' characters, variable 1 first.
  static Assignment from_bitstring(std::string_view bits);
  std::string to_bitstring() const;

  std::size_t size() const { return bits_.size(); }
  bool value(std::uint32_t var) const { return bits_[var - 1]; }
  void set(std::uint32_t var, bool value) { bits_[var - 1] = value; }
  const std::vector<bool> &bits() const { return bits_; }

  bool operator==(const Assignment &) const = default;
  bool operator<(const Assignment &other) const { return bits_ < other.bits_; }

private:
  std::vector<bool> bits_;
};

/// A conjunction of clauses over variables 1..num_vars.
class Cnf {
public:
  Cnf() = default;
  /// Throws InputError if a literal references a variable above numVars.
  Cnf(std::uint32_t numVars, std::vector<Clause> clauses);

  std::uint32_t num_vars() const { return numVars_; }
  const std::vector<Clause> &clauses() const { return clauses_; }

  /// Variables that occur in at least one clause, ascending.
  std::vector<std::uint32_t> occurring_vars() const;

  bool operator==(const Cnf &) const = default;

private:
  std::uint32_t numVars_ = 0;
  std::vector<Clause> clauses_;
};

Cnf parse_dimacs(std::istream &in);
Cnf parse_dimacs(std::string_view text);
std::string emit_dimacs(const Cnf &cnf);

/// True iff every clause has a literal satisfied by `a`.
/// Throws InputError if a.size() != cnf.num_vars().
bool evaluate(const Cnf &cnf, const Assignment &a);

/// Parameters of the random mixed-length instance generator.
struct MixedSatSpec {
  std::uint32_t num_vars = 0;
  std::uint32_t num_clauses = 0;
  std::map<std::uint32_t, double> length_weights; ///< clause length -> weight
  std::uint64_t seed = 0;
  std::uint64_t solution_cap = 1;

  /// Throws InputError when the invariants do not hold.
  void validate() const;

  bool operator==(const MixedSatSpec &) const = default;
};

inline constexpr unsigned kDefaultGenerationAttempts = 1000;

/// Draws one unfiltered instance from `spec` using `seed`.
Cnf draw_mixed_sat(const MixedSatSpec &spec, std::uint64_t seed);

struct GeneratedInstance {
  Cnf cnf;
  std::uint64_t solution_count = 0;
  unsigned attempt = 0; ///< 0-based index of the accepted draw
};

/// Draws instances with successive derived seeds and returns the first whose
/// solution count lies in [1, spec.solution_cap]. Throws LimitError when
/// `maxAttempts` draws are exhausted.
GeneratedInstance generate_mixed_sat_instance(const MixedSatSpec &spec,
                                              unsigned maxAttempts = kDefaultGenerationAttempts);

inline Cnf generate_mixed_sat(const MixedSatSpec &spec) {
  return generate_mixed_sat_instance(spec).cnf;
}

} // namespace cascor
