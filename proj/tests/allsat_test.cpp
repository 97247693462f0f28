#include "cascor/allsat.hpp"
#include "cascor/error.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace cascor;
using cascor::testing::brute_force_solutions;

namespace {

std::set<Assignment> found(const EnumerationResult &r) {
  std::set<Assignment> out;
  for (const SolutionEvent &e : r.events)
    out.insert(e.assignment);
  return out;
}

} // namespace

TEST(AllSatTest, TwoLiteralClause) {
  const EnumerationResult r = enumerate_all(parse_dimacs("p cnf 2 1\n1 2 0\n"), 100);
  EXPECT_TRUE(r.complete);
  EXPECT_FALSE(r.cap_hit);
  EXPECT_EQ(found(r), (std::set<Assignment>{Assignment::from_bitstring("10"),
                                            Assignment::from_bitstring("01"),
                                            Assignment::from_bitstring("11")}));
}

TEST(AllSatTest, Contradiction) {
  const EnumerationResult r = enumerate_all(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"), 100);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.events.empty());
}

TEST(AllSatTest, FreeVariablesAreEnumerated) {
  const EnumerationResult r = enumerate_all(parse_dimacs("p cnf 4 1\n2 0\n"), 100);
  EXPECT_EQ(r.events.size(), 8u);
}

TEST(AllSatTest, MatchesTruthTable) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint32_t n = 1 + trial % 16;
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % (3 * n + 1));
    const Cnf cnf = cascor::testing::random_cnf(rng, n, m, 1, std::min<std::uint32_t>(n, 5));
    const EnumerationResult r = enumerate_all(cnf, 1u << 20);
    ASSERT_TRUE(r.complete);
    const std::set<Assignment> got = found(r);
    EXPECT_EQ(got.size(), r.events.size()) << "duplicate solution";
    EXPECT_EQ(got, brute_force_solutions(cnf));
    for (std::size_t i = 0; i < r.events.size(); ++i) {
      EXPECT_EQ(r.events[i].index, i + 1);
      EXPECT_TRUE(evaluate(cnf, r.events[i].assignment));
      if (i > 0)
        EXPECT_GE(r.events[i].wall_time, r.events[i - 1].wall_time);
    }
  }
}

TEST(AllSatTest, CapStopsEarly) {
  const Cnf cnf = parse_dimacs("p cnf 10 1\n1 2 0\n");
  const EnumerationResult r = enumerate_all(cnf, 100);
  EXPECT_EQ(r.events.size(), 100u);
  EXPECT_TRUE(r.cap_hit);
  EXPECT_FALSE(r.complete);

  const EnumerationResult exact = enumerate_all(parse_dimacs("p cnf 2 1\n1 2 0\n"), 3);
  EXPECT_TRUE(exact.complete);
  EXPECT_FALSE(exact.cap_hit);
}

TEST(AllSatTest, CountCapped) {
  EXPECT_EQ(count_solutions_capped(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), 10), 7u);
  EXPECT_EQ(count_solutions_capped(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), 7), 7u);
  EXPECT_EQ(count_solutions_capped(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), 6), std::nullopt);
}

TEST(AllSatTest, BudgetEndsIncomplete) {
  const Cnf cnf = parse_dimacs("p cnf 40 1\n1 2 0\n");
  const EnumerationResult r = enumerate_all(cnf, 1u << 30, Duration{0});
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.cap_hit);
}
