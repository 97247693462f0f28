#pragma once

// Test-only oracles. These avoid the library's evaluation paths so that they
// stay independent of the code under test.

#include "cascor/penalty.hpp"
#include "cascor/sat_core.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace cascor::testing {

/// Value of variable `var` in the mask-encoded assignment (bit var-1).
inline bool bit(std::uint64_t mask, std::uint32_t var) { return (mask >> (var - 1)) & 1u; }

inline Assignment assignment_of_mask(std::uint64_t mask, std::uint32_t n) {
  Assignment a(n);
  for (std::uint32_t v = 1; v <= n; ++v)
    a.set(v, bit(mask, v));
  return a;
}

/// Truth-table enumeration of every satisfying assignment.
inline std::set<Assignment> brute_force_solutions(const Cnf &cnf) {
  std::set<Assignment> out;
  const std::uint32_t n = cnf.num_vars();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool all = true;
    for (const Clause &clause : cnf.clauses()) {
      bool any = false;
      for (const Literal &lit : clause.literals())
        any = any || (bit(mask, lit.var) != lit.negated);
      if (!any) {
        all = false;
        break;
      }
    }
    if (all)
      out.insert(assignment_of_mask(mask, n));
  }
  return out;
}

/// Energy straight from a TermSet; `spin(q)` returns +1 or -1.
template <typename SpinFn>
double term_energy(const TermSet &terms, SpinFn &&spin) {
  double e = 0.0;
  for (const auto &[q, c] : terms.linear_terms())
    e += c * spin(q);
  for (const auto &[pair, c] : terms.quadratic_terms())
    e += c * spin(pair.first) * spin(pair.second);
  return e;
}

/// Random CNF with distinct variables per clause; lengths uniform in
/// [minLen, maxLen].
inline Cnf random_cnf(std::mt19937_64 &rng, std::uint32_t n, std::uint32_t m, std::uint32_t minLen,
                      std::uint32_t maxLen) {
  std::vector<Clause> clauses;
  for (std::uint32_t c = 0; c < m; ++c) {
    const std::uint32_t len = std::uniform_int_distribution<std::uint32_t>(minLen, maxLen)(rng);
    std::vector<std::uint32_t> vars(n);
    for (std::uint32_t v = 0; v < n; ++v)
      vars[v] = v + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<Literal> lits;
    for (std::uint32_t i = 0; i < len; ++i)
      lits.push_back(Literal{vars[i], (rng() & 1u) != 0});
    clauses.emplace_back(std::move(lits));
  }
  return Cnf(n, std::move(clauses));
}

} // namespace cascor::testing
