#include "cascor/error.hpp"
#include "cascor/sat_core.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cascor;
using cascor::testing::brute_force_solutions;

namespace {

Clause clause(std::initializer_list<int> lits) {
  std::vector<Literal> out;
  for (int l : lits)
    out.push_back(Literal::from_dimacs(l));
  return Clause(std::move(out));
}

} // namespace

TEST(DimacsTest, ParsesMixedPolarityClauses) {
  const Cnf cnf = parse_dimacs("p cnf 3 2\n1 -2 0\n2 3 0\n");
  EXPECT_EQ(cnf.num_vars(), 3u);
  ASSERT_EQ(cnf.clauses().size(), 2u);
  EXPECT_EQ(cnf.clauses()[0], clause({1, -2}));
  EXPECT_EQ(cnf.clauses()[1], clause({2, 3}));
}

TEST(DimacsTest, CommentsAndClausesSpanningLines) {
  const Cnf cnf = parse_dimacs("c hello\nc\np cnf 4 2\n1 2\n-3 0 4\n0\n");
  ASSERT_EQ(cnf.clauses().size(), 2u);
  EXPECT_EQ(cnf.clauses()[0], clause({1, 2, -3}));
  EXPECT_EQ(cnf.clauses()[1], clause({4}));
}

TEST(DimacsTest, RejectsMalformedInput) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n0\n"), InputError);          // empty clause
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), InputError);      // var > n
  EXPECT_THROW(parse_dimacs("1 2 0\n"), InputError);                 // no header
  EXPECT_THROW(parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 0\n"), InputError);        // count mismatch
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 x 0\n"), InputError);      // non-integer
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), InputError);        // unterminated
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 -1 0\n"), InputError);     // repeated var
  EXPECT_THROW(parse_dimacs("p dnf 2 1\n1 0\n"), InputError);
}

TEST(DimacsTest, EmitsCanonicalText) {
  EXPECT_EQ(emit_dimacs(Cnf(1, {clause({1})})), "p cnf 1 1\n1 0\n");
  EXPECT_EQ(emit_dimacs(Cnf(2, {})), "p cnf 2 0\n");
}

TEST(DimacsTest, RoundTripsRandomFormulas) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Cnf cnf = cascor::testing::random_cnf(rng, 8, trial % 12, 1, 6);
    EXPECT_EQ(parse_dimacs(emit_dimacs(cnf)), cnf);
  }
}

TEST(EvaluateTest, TruthTableExamples) {
  const Cnf cnf(3, {clause({1, -2}), clause({2, 3})});
  EXPECT_TRUE(evaluate(cnf, Assignment::from_bitstring("111")));
  EXPECT_FALSE(evaluate(cnf, Assignment::from_bitstring("010")));
  EXPECT_TRUE(evaluate(Cnf(3, {}), Assignment::from_bitstring("000")));
  EXPECT_THROW(evaluate(cnf, Assignment::from_bitstring("11")), InputError);
}

TEST(EvaluateTest, AgreesWithTruthTableOnSmallFormulas) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 1 + trial % 4;
    const Cnf cnf = cascor::testing::random_cnf(rng, n, 1 + trial % 5, 1, n);
    const auto solutions = brute_force_solutions(cnf);
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      const Assignment a = cascor::testing::assignment_of_mask(mask, n);
      EXPECT_EQ(evaluate(cnf, a), solutions.count(a) == 1);
    }
  }
}

TEST(ClauseTest, RejectsRepeatedVariables) {
  EXPECT_THROW(clause({1, 2, 1}), InputError);
  EXPECT_THROW(Clause(std::vector<Literal>{}), InputError);
  EXPECT_THROW(Cnf(2, {clause({3})}), InputError);
}

TEST(AssignmentTest, BitstringRoundTrip) {
  const Assignment a = Assignment::from_bitstring("10110");
  EXPECT_TRUE(a.value(1));
  EXPECT_FALSE(a.value(2));
  EXPECT_EQ(a.to_bitstring(), "10110");
  EXPECT_THROW(Assignment::from_bitstring("10a"), InputError);
}

//===----------------------------------------------------------------------===//
// Generator
//===----------------------------------------------------------------------===//

namespace {

MixedSatSpec small_spec(std::uint64_t seed) {
  MixedSatSpec spec;
  spec.num_vars = 10;
  spec.num_clauses = 20;
  spec.length_weights = {{2, 1.0}, {3, 2.0}, {4, 1.0}};
  spec.seed = seed;
  spec.solution_cap = 200;
  return spec;
}

} // namespace

TEST(GeneratorTest, SeededDeterminism) {
  EXPECT_EQ(generate_mixed_sat(small_spec(3)), generate_mixed_sat(small_spec(3)));
  EXPECT_NE(draw_mixed_sat(small_spec(3), 1), draw_mixed_sat(small_spec(3), 2));
}

TEST(GeneratorTest, LengthsStayInSupport) {
  MixedSatSpec spec = small_spec(9);
  spec.length_weights = {{2, 0.5}, {4, 0.5}, {3, 0.0}};
  spec.solution_cap = 1024;
  const Cnf cnf = generate_mixed_sat(spec);
  bool saw2 = false, saw4 = false;
  for (const Clause &c : cnf.clauses()) {
    EXPECT_TRUE(c.size() == 2 || c.size() == 4);
    saw2 = saw2 || c.size() == 2;
    saw4 = saw4 || c.size() == 4;
  }
  EXPECT_TRUE(saw2 && saw4);
}

TEST(GeneratorTest, ClausesUseDistinctVariables) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cnf cnf = draw_mixed_sat(small_spec(seed), seed);
    for (const Clause &c : cnf.clauses()) {
      std::set<std::uint32_t> vars;
      for (const Literal &l : c.literals())
        vars.insert(l.var);
      EXPECT_EQ(vars.size(), c.size());
    }
  }
}

TEST(GeneratorTest, AdmittedCountMatchesBruteForce) {
  MixedSatSpec spec;
  spec.num_vars = 4;
  spec.num_clauses = 2;
  spec.length_weights = {{1, 1.0}, {2, 1.0}, {3, 1.0}};
  spec.solution_cap = 16;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    spec.seed = seed;
    const GeneratedInstance g = generate_mixed_sat_instance(spec);
    const auto truth = brute_force_solutions(g.cnf);
    EXPECT_EQ(g.solution_count, truth.size());
    EXPECT_GE(truth.size(), 1u);
    EXPECT_LE(truth.size(), 16u);
  }
}

TEST(GeneratorTest, RetryExhaustion) {
  // Three unit clauses over 12 variables leave either none or at least 2^9
  // solutions, never exactly one.
  MixedSatSpec spec;
  spec.num_vars = 12;
  spec.num_clauses = 3;
  spec.length_weights = {{1, 1.0}};
  spec.solution_cap = 1;
  spec.seed = 4;
  EXPECT_THROW(generate_mixed_sat_instance(spec, 50), LimitError);
}

TEST(GeneratorTest, SpecValidation) {
  MixedSatSpec spec = small_spec(1);
  spec.length_weights = {{11, 1.0}};
  EXPECT_THROW(spec.validate(), InputError);
  spec.length_weights = {{2, 0.0}};
  EXPECT_THROW(spec.validate(), InputError);
  spec.length_weights = {{2, -1.0}, {3, 2.0}};
  EXPECT_THROW(spec.validate(), InputError);
  spec.length_weights = {{2, 1.0}};
  spec.solution_cap = 0;
  EXPECT_THROW(spec.validate(), InputError);
}
