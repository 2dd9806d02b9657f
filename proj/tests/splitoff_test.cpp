#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "hsplit/error.hpp"
#include "hsplit/oracle.hpp"
#include "hsplit/splitoff.hpp"
#include "test_support.hpp"

using ::testing::ElementsAre;
using ::testing::IsEmpty;

namespace hsplit {
namespace {

using testing::make_hypergraph;

// Brute-force λ over every pair of vertices other than s.
std::map<std::pair<std::uint32_t, std::uint32_t>, Capacity> oracle_lambdas(const Hypergraph& h, VertexId s) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, Capacity> out;
  for (VertexId u : h.vertices())
    for (VertexId v : h.vertices())
      if (u < v && u != s && v != s) out[{u.value, v.value}] = oracle::oracle_lambda(h, u, v);
  return out;
}

bool same_op(const SplitOffOp& a, const SplitOffOp& b) { return to_string(a) == to_string(b); }

void expect_log(const std::vector<SplitOffOp>& got, const std::vector<SplitOffOp>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_TRUE(same_op(got[i], want[i])) << to_string(got[i]);
}

TEST(BuildGadget, CliqueMatchesDegree) {
  const auto isolated = make_hypergraph({"s", "a", "b"}, {{"a", "b"}});
  const auto g0 = build_gadget(isolated, isolated.vertex("s"));
  EXPECT_THAT(g0.clique, IsEmpty());
  EXPECT_FALSE(g0.graph.alive(0));

  const auto one = make_hypergraph({"s", "a"}, {{"s", "a"}});
  const auto g1 = build_gadget(one, one.vertex("s"));
  ASSERT_EQ(g1.clique.size(), 1u);
  EXPECT_EQ(g1.graph.degree(g1.clique[0]), 1u);

  const auto five = make_hypergraph({"s", "a", "b", "c"},
                                    {{"s", "a"}, {"s", "b"}, {"s", "c"}, {"s", "a", "b"}, {"s", "b", "c"}, {"a", "c"}});
  const auto g5 = build_gadget(five, five.vertex("s"));
  ASSERT_EQ(g5.clique.size(), 5u);
  EXPECT_THAT(g5.incident, ElementsAre(HyperedgeId{0}, HyperedgeId{1}, HyperedgeId{2}, HyperedgeId{3}, HyperedgeId{4}));
  for (std::size_t i = 0; i < 5; ++i) {
    const NodeId x = g5.clique[i];
    EXPECT_FALSE(g5.graph.is_terminal(x));
    // Four clique neighbours plus its own hyperedge node.
    EXPECT_EQ(g5.graph.degree(x), 5u);
  }
  EXPECT_FALSE(g5.graph.alive(five.vertex("s").value));
  EXPECT_EQ(g5.graph.terminals().size(), 3u);
}

TEST(BuildGadget, UnknownVertex) {
  const auto h = make_hypergraph({"a", "b"}, {{"a", "b"}});
  EXPECT_THROW(build_gadget(h, VertexId{4}), UnknownVertex);
}

TEST(SplitOff, TwoEdgesMergeIntoOne) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"s", "a"}, {"s", "b"}});
  const auto s = h.vertex("s");
  const auto result = complete_split_off(h, s, {.keep_pipeline = true});
  EXPECT_TRUE(hypergraph_equal(result.h_star, make_hypergraph({"s", "a", "b"}, {{"a", "b"}})));
  expect_log(result.log, {Merge{HyperedgeId{0}, HyperedgeId{1}}, Trim{HyperedgeId{0}}});
  const auto& p = *result.pipeline;
  EXPECT_THAT(p.pruned_edges, IsEmpty());
  EXPECT_THAT(p.detached, IsEmpty());
  EXPECT_EQ(p.clique_remnants.size(), 1u);
  EXPECT_TRUE(result.certificate.passed());
}

TEST(SplitOff, DegreeOneIsASingleTrim) {
  const auto h = make_hypergraph({"s", "a", "b", "c"}, {{"a", "b"}, {"s", "a", "c"}});
  const auto result = complete_split_off(h, h.vertex("s"));
  expect_log(result.log, {Trim{HyperedgeId{1}}});
  EXPECT_TRUE(hypergraph_equal(result.h_star, make_hypergraph({"s", "a", "b", "c"}, {{"a", "b"}, {"a", "c"}})));
}

TEST(SplitOff, DegreeZeroChangesNothing) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"a", "b"}, {"a", "b"}});
  const auto result = complete_split_off(h, h.vertex("s"));
  EXPECT_THAT(result.log, IsEmpty());
  EXPECT_TRUE(hypergraph_equal(result.h_star, h));
}

TEST(SplitOff, PruningDetachesAHyperedge) {
  const auto h = make_hypergraph({"s", "a", "b", "c"}, {{"s", "c"}, {"s", "a"}, {"b", "c"}, {"s", "a", "b"}});
  const auto s = h.vertex("s");
  const auto result = complete_split_off(h, s, {.keep_pipeline = true});
  const auto& p = *result.pipeline;
  EXPECT_THAT(p.detached, ElementsAre(HyperedgeId{3}));
  EXPECT_EQ(p.pruned_edges.size(), 1u);
  expect_log(result.log, {Trim{HyperedgeId{3}}, Merge{HyperedgeId{0}, HyperedgeId{1}}, Trim{HyperedgeId{0}}});
  EXPECT_TRUE(hypergraph_equal(result.h_star,
                               make_hypergraph({"s", "a", "b", "c"}, {{"a", "c"}, {"b", "c"}, {"a", "b"}})));
  EXPECT_EQ(oracle_lambdas(result.h_star, s), oracle_lambdas(h, s));
}

TEST(SplitOff, DuplicateHyperedgesThroughSplitVertex) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"s", "a"}, {"s", "a"}, {"s", "b"}, {"s", "b"}});
  const auto s = h.vertex("s");
  const auto result = complete_split_off(h, s);
  EXPECT_EQ(result.h_star.degree(s), 0u);
  EXPECT_EQ(oracle_lambdas(result.h_star, s), oracle_lambdas(h, s));
  EXPECT_EQ(oracle::oracle_lambda(result.h_star, h.vertex("a"), h.vertex("b")), 2);
}

TEST(SplitOff, EdgesAwayFromSplitVertexSurvive) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto h = oracle::random_hypergraph({6, 8, 4, seed});
    const VertexId s{static_cast<std::uint32_t>(seed % 6)};
    const auto result = complete_split_off(h, s);
    for (const auto& [id, members] : h.hyperedges()) {
      if (std::find(members.begin(), members.end(), s) != members.end()) continue;
      ASSERT_TRUE(result.h_star.has_hyperedge(id)) << "seed " << seed;
      EXPECT_EQ(result.h_star.members(id), members);
    }
  }
}

TEST(SplitOff, UnknownVertex) {
  const auto h = make_hypergraph({"a", "b"}, {{"a", "b"}});
  EXPECT_THROW(complete_split_off(h, VertexId{3}), UnknownVertex);
}

TEST(SplitOff, CertifiedStagesShareOneTable) {
  const auto h = make_hypergraph({"s", "a", "b", "c"}, {{"s", "a", "b"}, {"s", "c"}, {"s", "b", "c"}, {"a", "c"}});
  const auto p = run_pipeline(h, h.vertex("s"), {.certify = true});
  ASSERT_TRUE(p.certified);
  for (const auto& stage : p.stages) {
    ASSERT_TRUE(stage.table.has_value());
    EXPECT_EQ(*stage.table, *p.stages[StagePipeline::kIncidence].table);
  }
  const auto off = run_pipeline(h, h.vertex("s"), {.certify = false});
  EXPECT_FALSE(off.certified);
  EXPECT_FALSE(off.stages[StagePipeline::kGadget].table.has_value());
}

class RandomSplitOff : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomSplitOff, PreservesEveryLambdaAndReplays) {
  const auto seed = GetParam();
  const std::size_t n = 3 + seed % 5;
  const auto h = oracle::random_hypergraph({n, 2 + seed % 10, std::min<std::size_t>(n, 2 + seed % 3), seed});
  const VertexId s{static_cast<std::uint32_t>(seed % n)};
  const auto result = complete_split_off(h, s, {.keep_pipeline = true});

  EXPECT_EQ(result.h_star.degree(s), 0u);
  EXPECT_EQ(oracle_lambdas(result.h_star, s), oracle_lambdas(h, s));
  EXPECT_TRUE(hypergraph_equal(replay(h, s, result.log), result.h_star));

  const auto& p = *result.pipeline;
  EXPECT_TRUE(p.certified);
  for (const Edge& e : p.stages[StagePipeline::kContracted].graph.edges()) {
    EXPECT_NE(p.stages[StagePipeline::kContracted].graph.is_terminal(e.u),
              p.stages[StagePipeline::kContracted].graph.is_terminal(e.v));
  }
  for (const auto& [id, members] : result.h_star.hyperedges()) EXPECT_GE(members.size(), 2u);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSplitOff, ::testing::Range<std::uint64_t>(0, 120));

}  // namespace
}  // namespace hsplit
