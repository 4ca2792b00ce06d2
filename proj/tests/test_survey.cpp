#include <gtest/gtest.h>

#include <sstream>

#include "spectral/families.hpp"
#include "spectral/isomorphism.hpp"
#include "spectral/survey.hpp"

using namespace spectral;

namespace {

SurveySummary survey(std::size_t lo, std::size_t hi, bool connected, std::size_t threads = 1, std::vector<std::string> checks = check_ids()) {
  SurveyConfig cfg;
  cfg.n_min = lo;
  cfg.n_max = hi;
  cfg.connected_only = connected;
  cfg.parallelism = threads;
  cfg.checks = std::move(checks);
  return run_survey(cfg);
}

bool contains_isomorphic(const std::vector<std::pair<std::string, ClassReport>>& census, const Graph& g) {
  for (const auto& [g6, r] : census)
    if (are_isomorphic(parse_graph6(g6), g)) return true;
  return false;
}

}  // namespace

TEST(Enumeration, LabeledCounts) {
  std::size_t all = 0, connected = 0;
  for (const Graph& g : enumerate_labeled(3, false)) all += g.order() == 3;
  for (const Graph& g : enumerate_labeled(3, true)) connected += is_connected(g);
  EXPECT_EQ(all, 8u);
  EXPECT_EQ(connected, 4u);
  std::size_t c4 = 0, c5 = 0;
  for (const Graph& g : enumerate_labeled(4, true)) c4 += is_connected(g);
  for (const Graph& g : enumerate_labeled(5, true)) c5 += is_connected(g);
  EXPECT_EQ(c4, 38u);
  EXPECT_EQ(c5, 728u);
  EXPECT_EQ(enumerate_labeled(4, false).total_masks(), 64u);
  EXPECT_THROW(enumerate_labeled(1, false), InvalidArgument);
  EXPECT_THROW(enumerate_labeled(9, false), InvalidArgument);
}

TEST(Enumeration, MaskBitsFollowGraph6Order) {
  // bit 0 is (0,1), bit 1 is (0,2), bit 2 is (1,2)
  EXPECT_TRUE(graph_from_mask(3, 0b100).adjacent(1, 2));
  EXPECT_TRUE(graph_from_mask(4, 0b1000).adjacent(0, 3));
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = graph_from_mask(4, mask);
    // graph6 payload for n=4 is the 6 edge bits, most significant first
    const std::string s = write_graph6(g);
    std::uint64_t bits = static_cast<std::uint64_t>(s[1] - 63), rev = 0;
    for (int k = 0; k < 6; ++k) rev |= ((bits >> (5 - k)) & 1u) << k;
    EXPECT_EQ(rev, mask);
  }
}

TEST(Survey, ConnectedSixVertexSweepHasNoFailures) {
  const SurveySummary s = survey(2, 6, true);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.per_order.at(2), 1u);
  EXPECT_EQ(s.per_order.at(3), 4u);
  EXPECT_EQ(s.per_order.at(4), 38u);
  EXPECT_EQ(s.per_order.at(5), 728u);
  EXPECT_EQ(s.per_order.at(6), 26704u);
  EXPECT_TRUE(s.h_members.empty());
  for (const auto& f : s.failures) ADD_FAILURE() << f.graph6 << " " << f.check << " " << f.detail;
}

TEST(Survey, ResultsDoNotDependOnWorkerCount) {
  const SurveySummary one = survey(2, 6, false, 1);
  const SurveySummary four = survey(2, 6, false, 4);
  const SurveySummary again = survey(2, 6, false, 3);
  EXPECT_TRUE(one.same_results(four));
  EXPECT_TRUE(one.same_results(again));
  EXPECT_EQ(to_json(one, false).dump(), to_json(four, false).dump());
  EXPECT_EQ(one.graphs_scanned, 2u + 8u + 64u + 1024u + 32768u);
}

TEST(Survey, ConfigurationErrors) {
  EXPECT_THROW(survey(1, 3, true), InvalidArgument);
  EXPECT_THROW(survey(4, 3, true), InvalidArgument);
  EXPECT_THROW(survey(2, 8, true), InvalidArgument);
  EXPECT_THROW(survey(2, 9, true), InvalidArgument);
  EXPECT_THROW(survey(2, 3, true, 1, {}), InvalidArgument);
  EXPECT_THROW(survey(2, 3, true, 1, {"nope"}), InvalidArgument);
  SurveyConfig cfg;
  cfg.source = SurveySource::Graph6Stream;
  EXPECT_THROW(run_survey(cfg), InvalidArgument);
}

TEST(Survey, OrderEightNeedsOptIn) {
  SurveyConfig cfg;
  cfg.n_min = cfg.n_max = 8;
  EXPECT_THROW(run_survey(cfg), InvalidArgument);
}

TEST(Survey, Graph6StreamReproducesCatalogSpectra) {
  std::stringstream in;
  in << ">>graph6<<\n# four-eigenvalue regular graphs\n";
  std::vector<std::string> want;
  for (const auto& e : table2_catalog()) {
    in << write_graph6(e.build()) << "\n";
    want.push_back(e.expected->to_string());
  }
  SurveyConfig cfg;
  cfg.source = SurveySource::Graph6Stream;
  cfg.input = &in;
  cfg.parallelism = 2;
  const SurveySummary s = run_survey(cfg);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.graphs_scanned, want.size());
  std::vector<std::string> got;
  for (const auto& m : s.g_members) got.push_back(m.spectrum);
  for (const auto& w : want) EXPECT_NE(std::find(got.begin(), got.end(), w), got.end()) << w;
}

TEST(Survey, MalformedStreamRecordsBecomeSkips) {
  std::stringstream in("C~\nnot graph6 at all\nD?\nD~{\n");
  SurveyConfig cfg;
  cfg.source = SurveySource::Graph6Stream;
  cfg.input = &in;
  const SurveySummary s = run_survey(cfg);
  EXPECT_EQ(s.graphs_scanned, 2u);
  ASSERT_EQ(s.skips.size(), 2u);
  EXPECT_EQ(s.skips[0].record, 2u);
  EXPECT_EQ(s.skips[1].record, 3u);
  EXPECT_FALSE(s.ok());
  EXPECT_TRUE(s.failures.empty());
}

TEST(Census, SmallOrdersMatchStructuralList) {
  const auto c4 = census_G(4);
  EXPECT_EQ(c4.size(), 3u);
  for (const Graph& g : {complete(4), complete_bipartite(1, 3), complete_bipartite(2, 2)}) EXPECT_TRUE(contains_isomorphic(c4, g));
  const auto c5 = census_G(5);
  EXPECT_EQ(c5.size(), 3u);
  for (const Graph& g : {complete(5), complete_bipartite(1, 4), complete_bipartite(2, 3)}) EXPECT_TRUE(contains_isomorphic(c5, g));
  const auto c6 = census_G(6);
  const std::vector<Graph> expect6 = {complete(6), complete_bipartite(1, 5), complete_bipartite(2, 4), complete_bipartite(3, 3),
                                      complete_multipartite({2, 2, 2})};
  EXPECT_EQ(c6.size(), expect6.size());
  for (const Graph& g : expect6) EXPECT_TRUE(contains_isomorphic(c6, g));
  for (const auto& [g6, r] : c6) {
    EXPECT_TRUE(r.in_G);
    EXPECT_FALSE(r.in_H);
    for (const auto& [id, v] : r.verdicts) EXPECT_FALSE(v.failed()) << g6 << " " << id;
  }
}
