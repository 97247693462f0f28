#include "cascor/allsat.hpp"
#include "cascor/error.hpp"
#include "cascor/random.hpp"
#include "cascor/sat_core.hpp"

#include <numeric>

namespace cascor {

void MixedSatSpec::validate() const {
  if (num_vars == 0)
    throw InputError("num_vars must be positive");
  if (solution_cap < 1)
    throw InputError("solution_cap must be at least 1");
  if (length_weights.empty())
    throw InputError("length_weights is empty");
  double total = 0.0;
  for (const auto &[length, weight] : length_weights) {
    if (length < 1 || length > num_vars)
      throw InputError("clause length " + std::to_string(length) + " outside [1, " +
                       std::to_string(num_vars) + "]");
    if (!(weight >= 0.0))
      throw InputError("negative weight for clause length " + std::to_string(length));
    total += weight;
  }
  if (!(total > 0.0))
    throw InputError("length weights sum to zero");
}

Cnf draw_mixed_sat(const MixedSatSpec &spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);

  double total = 0.0;
  for (const auto &entry : spec.length_weights)
    total += entry.second;

  std::vector<std::uint32_t> pool(spec.num_vars);
  std::iota(pool.begin(), pool.end(), 1u);

  std::vector<Clause> clauses;
  clauses.reserve(spec.num_clauses);
  for (std::uint32_t c = 0; c < spec.num_clauses; ++c) {
    // Inverse CDF over the weight map; zero-weight lengths are never drawn.
    const double u = rng.uniform01() * total;
    std::uint32_t length = 0;
    double acc = 0.0;
    for (const auto &[k, w] : spec.length_weights) {
      if (w <= 0.0)
        continue;
      length = k;
      acc += w;
      if (u < acc)
        break;
    }

    // Partial Fisher-Yates: the first `length` pool slots are the clause.
    std::vector<Literal> literals;
    literals.reserve(length);
    for (std::uint32_t i = 0; i < length; ++i) {
      const std::uint64_t j = i + rng.below(spec.num_vars - i);
      std::swap(pool[i], pool[j]);
      literals.push_back(Literal{pool[i], rng.coin()});
    }
    clauses.emplace_back(std::move(literals));
  }
  return Cnf(spec.num_vars, std::move(clauses));
}

GeneratedInstance generate_mixed_sat_instance(const MixedSatSpec &spec, unsigned maxAttempts) {
  spec.validate();
  for (unsigned attempt = 0; attempt < maxAttempts; ++attempt) {
    Cnf cnf = draw_mixed_sat(spec, derive_seed(spec.seed, attempt));
    const std::optional<std::uint64_t> count = count_solutions_capped(cnf, spec.solution_cap);
    if (count && *count >= 1)
      return GeneratedInstance{std::move(cnf), *count, attempt};
  }
  throw LimitError("no admissible instance within " + std::to_string(maxAttempts) +
                   " attempts (solution count must lie in [1, " +
                   std::to_string(spec.solution_cap) + "])");
}

} // namespace cascor
