#include "cascor/error.hpp"
#include "cascor/ising.hpp"
#include "cascor/penalty.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

using namespace cascor;

namespace {

SpinState spins(std::vector<std::int8_t> v) { return SpinState(std::move(v)); }

SpinState spins_of_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::int8_t> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = (mask >> i) & 1u ? 1 : -1;
  return SpinState(std::move(v));
}

// Direct double loop over all qubit pairs; no adjacency structure.
double naive_energy(const IsingModel &m, const SpinState &s) {
  double e = 0.0;
  for (std::size_t i = 0; i < m.num_qubits(); ++i) {
    e += m.h()[i] * s[i];
    for (std::size_t j = i + 1; j < m.num_qubits(); ++j)
      e += m.coupling(i, j) * s[i] * s[j];
  }
  return e;
}

IsingModel random_model(std::mt19937_64 &rng, std::size_t n, bool integral) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_real_distribution<double> real(-1.0, 1.0);
  std::vector<double> h(n);
  for (double &x : h)
    x = integral ? coef(rng) : real(rng);
  std::vector<Coupling> js;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng() % 3 == 0)
        js.push_back({i, j, integral ? double(coef(rng)) : real(rng)});
  return IsingModel(std::move(h), std::move(js));
}

std::vector<double> spectrum(const IsingModel &m) {
  std::vector<double> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.num_qubits()); ++mask)
    out.push_back(naive_energy(m, spins_of_mask(mask, m.num_qubits())));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(SignVectorTest, RejectsOtherValues) {
  EXPECT_THROW(spins({1, 0, -1}), InputError);
  EXPECT_THROW(Gauge({2}), InputError);
  EXPECT_NO_THROW(Gauge({1, -1}));
}

TEST(IsingModelTest, MergesAndValidatesCouplings) {
  const IsingModel m({0.0, 0.0, 0.0}, {{1, 0, 1.0}, {0, 1, 2.0}, {1, 2, 0.0}});
  ASSERT_EQ(m.couplings().size(), 1u);
  EXPECT_EQ(m.coupling(0, 1), 3.0);
  EXPECT_EQ(m.coupling(1, 0), 3.0);
  EXPECT_EQ(m.coupling(1, 2), 0.0);
  EXPECT_THROW(IsingModel({0.0}, {{0, 0, 1.0}}), InputError);
  EXPECT_THROW(IsingModel({0.0, 0.0}, {{0, 2, 1.0}}), InputError);
  EXPECT_TRUE(m.integral());
  EXPECT_FALSE(IsingModel({0.5}, {}).integral());
}

TEST(EnergyTest, Examples) {
  const IsingModel h2({-1.0, -1.0}, {{0, 1, 1.0}});
  EXPECT_EQ(energy(h2, spins({1, 1})), -1.0);
  EXPECT_EQ(energy(h2, spins({-1, -1})), 3.0);
  const IsingModel ferro({0.0, 0.0, 0.0}, {{0, 1, -1.0}, {1, 2, -1.0}});
  EXPECT_EQ(energy(ferro, spins({1, 1, 1})), -2.0);
  EXPECT_EQ(energy(ferro, spins({1, -1, 1})), 2.0);
  EXPECT_THROW(energy(ferro, spins({1, 1})), InputError);
}

TEST(EnergyTest, AgreesWithPairwiseSum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const IsingModel m = random_model(rng, 1 + trial % 10, trial % 2 == 0);
    for (int k = 0; k < 20; ++k) {
      const SpinState s = spins_of_mask(rng(), m.num_qubits());
      EXPECT_NEAR(energy(m, s), naive_energy(m, s), 1e-9);
    }
  }
}

TEST(GaugeTest, Example) {
  const IsingModel m({1.0, -2.0}, {{0, 1, 3.0}});
  const IsingModel g = apply_gauge(m, Gauge({-1, 1}));
  EXPECT_EQ(g.h(), (std::vector<double>{-1.0, -2.0}));
  EXPECT_EQ(g.coupling(0, 1), -3.0);
  EXPECT_EQ(apply_gauge(m, Gauge::all_up(2)), m);
  EXPECT_THROW(apply_gauge(m, Gauge({1})), InputError);
}

TEST(GaugeTest, PreservesEnergyUnderUngauging) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const IsingModel m = random_model(rng, 2 + trial % 9, true);
    const Gauge g = random_gauge(m.num_qubits(), rng());
    const IsingModel gm = apply_gauge(m, g);
    EXPECT_EQ(spectrum(gm), spectrum(m));
    for (int k = 0; k < 10; ++k) {
      const SpinState s = spins_of_mask(rng(), m.num_qubits());
      EXPECT_EQ(energy(gm, s), energy(m, ungauge_sample(s, g)));
      EXPECT_EQ(ungauge_sample(ungauge_sample(s, g), g), s);
    }
  }
}

TEST(GaugeTest, RandomGaugeIsDeterministic) {
  EXPECT_EQ(random_gauge(40, 3), random_gauge(40, 3));
  EXPECT_NE(random_gauge(40, 3), random_gauge(40, 4));
}

TEST(GroundStateTest, H2AndOrGadget) {
  const GroundStates h2 = enumerate_ground_states(IsingModel({-1.0, -1.0}, {{0, 1, 1.0}}));
  EXPECT_EQ(h2.min_energy, -1.0);
  EXPECT_EQ(h2.states, (std::vector<SpinState>{spins({-1, 1}), spins({1, -1}), spins({1, 1})}));

  const IsingModel hor = build_h_or(0, 1, 2, false, false).to_model(3);
  const GroundStates g = enumerate_ground_states(hor);
  EXPECT_EQ(g.min_energy, -3.0);
  EXPECT_EQ(g.states.size(), 4u);

  const GroundStates single = enumerate_ground_states(IsingModel({2.0}, {}));
  EXPECT_EQ(single.min_energy, -2.0);
  EXPECT_EQ(single.states, std::vector<SpinState>{spins({-1})});
}

TEST(GroundStateTest, AgreesWithSpectrumAndThreadCount) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const IsingModel m = random_model(rng, n, true);
    const double lowest = spectrum(m).front();
    const GroundStates one = enumerate_ground_states(m, kDefaultEnumerationLimit, 1);
    const GroundStates four = enumerate_ground_states(m, kDefaultEnumerationLimit, 4);
    EXPECT_EQ(one.min_energy, lowest);
    EXPECT_EQ(one.states, four.states);
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      count += naive_energy(m, spins_of_mask(mask, n)) == lowest;
    EXPECT_EQ(one.states.size(), count);
  }
}

TEST(GroundStateTest, RespectsLimit) {
  EXPECT_THROW(enumerate_ground_states(IsingModel(30), 26), LimitError);
}

TEST(AncillaMinimumTest, Examples) {
  const CompiledModel c = compile_cnf(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
  EXPECT_EQ(min_energy_over_ancillas(c.model, c.layout, Assignment::from_bitstring("100")), -4.0);
  EXPECT_EQ(min_energy_over_ancillas(c.model, c.layout, Assignment::from_bitstring("000")), 0.0);

  const CompiledModel contra = compile_cnf(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"));
  EXPECT_EQ(min_energy_over_ancillas(contra.model, contra.layout, Assignment::from_bitstring("1")),
            0.0);
  EXPECT_THROW(min_energy_over_ancillas(c.model, c.layout, Assignment::from_bitstring("10")),
               InputError);
}

TEST(AncillaMinimumTest, MatchesExhaustiveAncillaSearch) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Cnf cnf = cascor::testing::random_cnf(rng, 5, 3, 1, 4);
    const CompiledModel c = compile_cnf(cnf);
    const std::size_t nq = c.layout.num_qubits;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      const Assignment a = cascor::testing::assignment_of_mask(mask, 5);
      double best = std::numeric_limits<double>::infinity();
      for (std::uint64_t all = 0; all < (std::uint64_t{1} << nq); ++all) {
        const SpinState s = spins_of_mask(all, nq);
        bool consistent = true;
        for (const auto &[var, q] : c.layout.var_to_qubit)
          consistent = consistent && (s[q] == 1) == a.value(var);
        if (consistent)
          best = std::min(best, naive_energy(c.model, s));
      }
      EXPECT_EQ(min_energy_over_ancillas(c.model, c.layout, a), best);
      EXPECT_EQ(best == c.layout.ground_bound, evaluate(cnf, a));
    }
  }
}
