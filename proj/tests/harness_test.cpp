#include <gtest/gtest.h>

#include "json.hpp"
#include "specpart/generators.hpp"
#include "specpart/harness.hpp"

namespace specpart {
namespace {

FamilySpec cycles(std::size_t m, std::size_t k = 0) {
  const Graph c = cycle_graph(m);
  return {m, {c, c, c, c}, k};
}

TEST(BaseGraph, Examples) {
  EXPECT_EQ(base_graph("cycle", 4).size(), 4u);
  EXPECT_EQ(base_graph("complete", 4).size(), 6u);
  EXPECT_EQ(base_graph("hypercube", 8).size(), 12u);
  EXPECT_EQ(base_graph("hypercube", 8, {3}), hypercube_graph(3));
  EXPECT_EQ(base_graph("path", 5).size(), 4u);
  EXPECT_EQ(base_graph("complete_bipartite", 5, {2, 3}).size(), 6u);
}

TEST(BaseGraph, Errors) {
  EXPECT_THROW(base_graph("petersen", 10), InvalidArgument);
  EXPECT_THROW(base_graph("complete_bipartite", 5, {2, 2}), InvalidArgument);
  EXPECT_THROW(base_graph("complete_bipartite", 5), InvalidArgument);
  EXPECT_THROW(base_graph("hypercube", 6), InvalidArgument);
  EXPECT_THROW(base_graph("hypercube", 8, {2}), InvalidArgument);
  EXPECT_THROW(base_graph("cycle", 2), InvalidArgument);
  EXPECT_THROW(base_graph("cycle", 5, {1}), InvalidArgument);
  EXPECT_THROW(base_graph("path", 0), InvalidArgument);
}

TEST(GapExperiment, LargeInstanceWithoutOracle) {
  const auto r = run_gap_experiment(cycles(13), "cycle");
  EXPECT_EQ(r.n, 52u);
  EXPECT_EQ(r.spectral_cut, 169u);
  EXPECT_EQ(r.spectral_cut_rule, 169u);
  EXPECT_EQ(r.witness_cut, 26u);
  EXPECT_FALSE(r.oracle_cut.has_value());
  EXPECT_EQ(r.error_lower, 143);
  EXPECT_NEAR(r.theorem_threshold, 52.0 * 52.0 / 384.0, 1e-12);
  EXPECT_TRUE(r.theorem_applies);
  EXPECT_TRUE(r.passes_lower);
  EXPECT_TRUE(r.passes_upper);
  EXPECT_EQ(r.fiedler_multiplicity, 1u);
  EXPECT_NEAR(r.lambda2_numeric, r.lambda2_analytic, 1e-8);
}

TEST(GapExperiment, SmallInstanceWithOracle) {
  const auto r = run_gap_experiment(cycles(5), "cycle");
  EXPECT_EQ(r.spectral_cut, 25u);
  EXPECT_EQ(r.witness_cut, 10u);
  ASSERT_TRUE(r.oracle_cut.has_value());
  EXPECT_LE(*r.oracle_cut, 10u);
  EXPECT_FALSE(r.theorem_applies);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.error_lower, 25 - static_cast<std::int64_t>(*r.oracle_cut));

  ExperimentOptions no_oracle;
  no_oracle.use_oracle = false;
  const auto w = run_gap_experiment(cycles(5), "cycle", no_oracle);
  EXPECT_FALSE(w.oracle_cut.has_value());
  // The witness can only understate the error.
  EXPECT_GE(r.error_lower, w.error_lower);
}

TEST(GapExperiment, ConeVertices) {
  const auto r = run_gap_experiment(cycles(13, 1), "cycle");
  EXPECT_EQ(r.n, 53u);
  EXPECT_LT(r.witness_cut, 2 * r.n);
  EXPECT_GE(r.spectral_cut, 169u);
  EXPECT_LE(r.spectral_cut, r.spectral_cut_rule);
  EXPECT_LE(r.spectral_cut_rule, r.spectral_cut_worst);
  EXPECT_NEAR(r.lambda2_numeric, r.lambda2_analytic, 1e-8);
  EXPECT_TRUE(r.ok());
}

TEST(TheoremSweep, SmallInstancesAreReportedNotJudged) {
  const auto rs = verify_theorem_sweep({3, 4, 5}, "cycle", {0});
  ASSERT_EQ(rs.size(), 3u);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto& r = rs[i];
    EXPECT_EQ(r.m, 3 + i);
    ASSERT_TRUE(r.oracle_cut.has_value());
    EXPECT_LE(*r.oracle_cut, r.witness_cut);
    EXPECT_EQ(r.spectral_cut, r.m * r.m);
    EXPECT_EQ(r.witness_cut, 2 * r.m);
    EXPECT_FALSE(r.theorem_applies);
    EXPECT_LT(static_cast<double>(r.error_lower), r.upper_threshold);
  }
  EXPECT_TRUE(sweep_passes(rs));
}

TEST(TheoremSweep, OrderIsMOuterKInner) {
  const auto rs = verify_theorem_sweep({6, 7}, "complete", {0, 2});
  ASSERT_EQ(rs.size(), 4u);
  EXPECT_EQ(rs[0].m, 6u);
  EXPECT_EQ(rs[0].k, 0u);
  EXPECT_EQ(rs[1].k, 2u);
  EXPECT_EQ(rs[2].m, 7u);
  EXPECT_EQ(rs[3].n, 30u);
  for (const auto& r : rs) EXPECT_EQ(r.base, "complete");
}

TEST(TheoremSweep, InvalidGenerator) {
  EXPECT_THROW(verify_theorem_sweep({4}, "moebius", {0}), InvalidArgument);
  EXPECT_THROW(verify_theorem_sweep({30}, "path", {0}), HypothesisViolation);
}

TEST(ExportReport, JsonFieldsAndOrder) {
  const auto r = run_gap_experiment(cycles(3), "cycle");
  const std::string text = export_report(r, ReportFormat::json);
  const auto j = nlohmann::ordered_json::parse(text);
  const std::vector<std::string> keys{"base", "n", "m", "k", "lambda2_numeric", "lambda2_analytic",
                                      "fiedler_multiplicity", "spectral_cut", "spectral_cut_rule",
                                      "spectral_cut_worst", "witness_cut", "oracle_cut", "error_lower",
                                      "theorem_threshold", "upper_threshold", "theorem_applies", "passes_lower",
                                      "passes_upper"};
  std::vector<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
  EXPECT_EQ(got, keys);
  EXPECT_EQ(j["spectral_cut"], 9);
  EXPECT_EQ(j["oracle_cut"], 6);
  // 12 significant digits: 4 - sqrt(10) = 0.837722339832
  EXPECT_NE(text.find("0.837722339832"), std::string::npos);
  EXPECT_EQ(text.find("0.8377223398316"), std::string::npos);
}

TEST(ExportReport, JsonNullOracle) {
  ExperimentOptions o;
  o.use_oracle = false;
  const auto j = nlohmann::json::parse(export_report(run_gap_experiment(cycles(3), "cycle", o), ReportFormat::json));
  EXPECT_TRUE(j["oracle_cut"].is_null());
}

TEST(ExportReport, Csv) {
  const std::vector<GapReport> none;
  const std::string header = export_report(none, ReportFormat::csv);
  EXPECT_EQ(std::count(header.begin(), header.end(), '\n'), 1);
  EXPECT_EQ(header.rfind("base,n,m,k,", 0), 0u);

  ExperimentOptions o;
  o.use_oracle = false;
  const std::vector<GapReport> rs{run_gap_experiment(cycles(3), "cycle", o), run_gap_experiment(cycles(4), "cycle", o)};
  const std::string csv = export_report(rs, ReportFormat::csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("\ncycle,12,3,0,0.837722339832,"), std::string::npos);
  // empty oracle column
  EXPECT_NE(csv.find(",6,,3,"), std::string::npos);
}

TEST(ExportReport, UnknownFormat) {
  EXPECT_EQ(report_format("csv"), ReportFormat::csv);
  EXPECT_THROW(report_format("xml"), InvalidArgument);
}

TEST(ExportReport, Deterministic) {
  const auto a = export_report(verify_theorem_sweep({3, 13}, "cycle", {0, 1}), ReportFormat::json);
  const auto b = export_report(verify_theorem_sweep({3, 13}, "cycle", {0, 1}), ReportFormat::json);
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace specpart
