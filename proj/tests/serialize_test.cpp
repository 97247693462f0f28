#include "cascor/bench.hpp"
#include "cascor/error.hpp"
#include "cascor/serialize.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace cascor;
using namespace std::chrono_literals;

namespace {

InstanceReport small_report(std::uint64_t seed, bool satisfiable = true) {
  BenchConfig cfg;
  cfg.sampler.num_reads = 40;
  cfg.sampler.seed = seed;
  cfg.sampler.overhead = {200us, 2000us, 100us};
  cfg.gauges = 3;
  cfg.stable_output = true;
  std::mt19937_64 rng(seed);
  Cnf cnf = satisfiable ? cascor::testing::random_cnf(rng, 6, 6, 1, 4)
                        : parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  return run_instance({"inst" + std::to_string(seed), std::move(cnf)}, cfg);
}

} // namespace

TEST(SerializeTest, SpecRoundTrip) {
  MixedSatSpec spec{20, 30, {{2, 1.0}, {3, 2.0}, {4, 1.0}}, 7, 10000};
  EXPECT_EQ(spec_from_json(spec_to_json(spec)), spec);
  EXPECT_THROW(spec_from_json(Json::parse(R"({"num_vars": 3})")), InputError);
}

TEST(SerializeTest, ModelDocumentRoundTrip) {
  std::mt19937_64 rng(1);
  const CompiledModel c =
      compile_cnf(cascor::testing::random_cnf(rng, 7, 5, 1, 5), ConstructionPolicy::seeded_random(3));
  const ModelDocument doc = model_from_json(model_to_json(c.model, c.layout));
  EXPECT_EQ(doc.model, c.model);
  EXPECT_EQ(doc.layout, c.layout);
  // Through text as well.
  const ModelDocument text = model_from_json(Json::parse(model_to_json(c.model, c.layout).dump()));
  EXPECT_EQ(text.model, c.model);
}

TEST(SerializeTest, SampleAndEventLines) {
  SampleRecord r;
  r.read_index = 3;
  r.spins = SpinState({1, -1, 1});
  r.energy = -2.0;
  r.core_time = 80us;
  r.wall_time = 9000us;
  const SampleLine line = sample_from_json(sample_to_json(r, 2, Assignment::from_bitstring("10")));
  EXPECT_EQ(line.gauge, 2u);
  EXPECT_EQ(line.record.spins, r.spins);
  EXPECT_EQ(line.record.wall_time, r.wall_time);
  EXPECT_EQ(line.record.read_index, 3u);

  const SolutionEvent e{Assignment::from_bitstring("0110"), 12us, 4};
  const Json j = event_to_json(e);
  EXPECT_EQ(j.at("assignment"), "0110");
  EXPECT_EQ(j.at("wall_time_us"), 12);
  const SolutionEvent back = event_from_json(j);
  EXPECT_EQ(back.assignment, e.assignment);
  EXPECT_EQ(back.index, 4u);
}

TEST(SerializeTest, ReportRoundTrip) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const InstanceReport report = small_report(seed);
    const Json j = report_to_json(report);
    const InstanceReport back = report_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, report);
    EXPECT_EQ(report_to_json(back), j);
    EXPECT_EQ(j.at("overlap_measure"), "jaccard");
  }
  const InstanceReport unsat = small_report(4, false);
  EXPECT_EQ(report_from_json(report_to_json(unsat)), unsat);
}

TEST(SerializeTest, CsvRowShape) {
  const std::string header = report_csv_header();
  EXPECT_EQ(header, "instance_id,n,num_clauses,qubits,crossover_axis,crossover_count,"
                    "crossover_time_us,overlap_jaccard,hamming_mean_classical,"
                    "hamming_mean_quantum_per_gauge");
  const std::string row = report_csv_row(small_report(5));
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
  EXPECT_EQ(row.rfind("inst5,6,6,", 0), 0u);
}

TEST(SerializeTest, MalformedDocuments) {
  EXPECT_THROW(model_from_json(Json::parse(R"({"h": [1]})")), InputError);
  EXPECT_THROW(event_from_json(Json::parse(R"({"index": 1, "assignment": "01x"})")), InputError);
  EXPECT_THROW(gauge_from_json(Json::parse("[1, 0]")), InputError);
}
