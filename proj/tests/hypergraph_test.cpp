#include <algorithm>
#include <random>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "hsplit/element_instance.hpp"
#include "hsplit/error.hpp"
#include "hsplit/hypergraph.hpp"
#include "hsplit/oracle.hpp"
#include "test_support.hpp"

using ::testing::ElementsAre;
using ::testing::IsEmpty;

namespace hsplit {
namespace {

using testing::make_hypergraph;

std::vector<VertexId> ids(const Hypergraph& h, std::initializer_list<std::string> names) {
  std::vector<VertexId> out;
  for (const auto& n : names) out.push_back(h.vertex(n));
  return out;
}

TEST(Hypergraph, RejectsSmallOrRepeatedHyperedges) {
  Hypergraph h;
  const auto a = h.add_vertex("a");
  const auto b = h.add_vertex("b");
  EXPECT_THROW(h.add_hyperedge({a}), InvalidHypergraph);
  EXPECT_THROW(h.add_hyperedge({a, a}), InvalidHypergraph);
  EXPECT_THROW(h.add_hyperedge({a, VertexId{7}}), InvalidHypergraph);
  EXPECT_THROW(h.add_vertex("a"), InvalidHypergraph);
  EXPECT_EQ(h.add_hyperedge({b, a}), HyperedgeId{0});
  EXPECT_THAT(h.members(HyperedgeId{0}), ElementsAre(a, b));
}

TEST(Delta, SingleHyperedgeCrosses) {
  const auto h = make_hypergraph({"a", "b", "c"}, {{"a", "b", "c"}});
  const auto side = ids(h, {"a"});
  EXPECT_THAT(delta(h, CutSide(h, side)), ElementsAre(HyperedgeId{0}));
}

TEST(Delta, BothEdgesCross) {
  const auto h = make_hypergraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const auto side = ids(h, {"a", "c"});
  EXPECT_THAT(delta(h, CutSide(h, side)), ElementsAre(HyperedgeId{0}, HyperedgeId{1}));
}

TEST(Delta, EdgesInsideEachSide) {
  const auto h = make_hypergraph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  const auto side = ids(h, {"a", "b"});
  EXPECT_THAT(delta(h, CutSide(h, side)), IsEmpty());
}

TEST(Delta, RejectsImproperCuts) {
  const auto h = make_hypergraph({"a", "b"}, {{"a", "b"}});
  EXPECT_THROW(CutSide(h, std::vector<VertexId>{}), InvalidCut);
  EXPECT_THROW(CutSide(h, ids(h, {"a", "b"})), InvalidCut);
}

TEST(Delta, ComplementGivesSameCut) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto h = oracle::random_hypergraph({6, 7, 4, seed});
    for (std::uint32_t mask = 1; mask + 1 < (1u << 6); ++mask) {
      std::vector<VertexId> side;
      std::vector<VertexId> rest;
      for (std::uint32_t v = 0; v < 6; ++v) ((mask >> v) & 1 ? side : rest).emplace_back(v);
      EXPECT_EQ(delta(h, CutSide(h, side)), delta(h, CutSide(h, rest)));
    }
  }
}

TEST(IncidenceGraph, SingleHyperedgeIsAStar) {
  const auto h = make_hypergraph({"a", "b", "c"}, {{"a", "b", "c"}});
  const auto g = incidence_graph(h);
  EXPECT_EQ(g.instance.num_nodes(), 4u);
  EXPECT_EQ(g.instance.terminals().size(), 3u);
  const NodeId center = g.hyperedge_node.at(HyperedgeId{0});
  EXPECT_FALSE(g.instance.is_terminal(center));
  EXPECT_EQ(g.instance.degree(center), 3u);
}

TEST(IncidenceGraph, NoHyperedgesGivesIsolatedTerminals) {
  const auto h = make_hypergraph({"a", "b"}, {});
  const auto g = incidence_graph(h);
  EXPECT_EQ(g.instance.num_nodes(), 2u);
  EXPECT_EQ(g.instance.num_edges(), 0u);
  EXPECT_EQ(g.instance.terminals().size(), 2u);
}

TEST(IncidenceGraph, ParallelHyperedgesStayDistinct) {
  const auto h = make_hypergraph({"a", "b"}, {{"a", "b"}, {"a", "b"}});
  const auto g = incidence_graph(h);
  EXPECT_EQ(g.instance.non_terminals().size(), 2u);
  for (NodeId x : g.instance.non_terminals()) {
    std::vector<NodeId> nbrs;
    for (const Edge& e : g.instance.incident_edges(x)) nbrs.push_back(e.other(x));
    EXPECT_THAT(nbrs, ElementsAre(0u, 1u));
  }
}

TEST(IncidenceGraph, BipartiteWithHyperedgeDegrees) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto h = oracle::random_hypergraph({7, 9, 5, seed});
    const auto g = incidence_graph(h);
    for (const Edge& e : g.instance.edges()) {
      EXPECT_NE(g.instance.is_terminal(e.u), g.instance.is_terminal(e.v));
    }
    for (const auto& [id, members] : h.hyperedges()) {
      EXPECT_EQ(g.instance.degree(g.hyperedge_node.at(id)), members.size());
    }
    for (VertexId v : h.vertices()) {
      EXPECT_EQ(g.vertex_node[v.value], v.value);
    }
  }
}

TEST(ApplyOp, TrimRemovesSplitVertex) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"s", "a", "b"}});
  const auto out = apply_op(h, h.vertex("s"), Trim{HyperedgeId{0}});
  EXPECT_TRUE(hypergraph_equal(out, make_hypergraph({"s", "a", "b"}, {{"a", "b"}})));
}

TEST(ApplyOp, MergeJoinsAlmostDisjointPair) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"s", "a"}, {"s", "b"}});
  const auto out = apply_op(h, h.vertex("s"), Merge{HyperedgeId{0}, HyperedgeId{1}});
  EXPECT_TRUE(hypergraph_equal(out, make_hypergraph({"s", "a", "b"}, {{"s", "a", "b"}})));
  EXPECT_TRUE(out.has_hyperedge(HyperedgeId{0}));
  EXPECT_FALSE(out.has_hyperedge(HyperedgeId{1}));
}

TEST(ApplyOp, TrimToSingletonDropsTheHyperedge) {
  const auto h = make_hypergraph({"s", "a"}, {{"s", "a"}});
  const auto out = apply_op(h, h.vertex("s"), Trim{HyperedgeId{0}});
  EXPECT_EQ(out.num_hyperedges(), 0u);
  EXPECT_EQ(out.num_vertices(), 2u);
}

TEST(ApplyOp, Errors) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"s", "a"}, {"s", "a", "b"}, {"a", "b"}});
  const auto s = h.vertex("s");
  EXPECT_THROW(apply_op(h, s, Merge{HyperedgeId{0}, HyperedgeId{1}}), MergeNotAlmostDisjoint);
  EXPECT_THROW(apply_op(h, s, Merge{HyperedgeId{0}, HyperedgeId{2}}), MergeNotAlmostDisjoint);
  EXPECT_THROW(apply_op(h, s, Merge{HyperedgeId{0}, HyperedgeId{0}}), MergeNotAlmostDisjoint);
  EXPECT_THROW(apply_op(h, s, Trim{HyperedgeId{2}}), TrimTargetLacksVertex);
  EXPECT_THROW(apply_op(h, s, Trim{HyperedgeId{9}}), MissingId);
  EXPECT_THROW(apply_op(h, s, Merge{HyperedgeId{0}, HyperedgeId{9}}), MissingId);
}

TEST(Replay, EmptyLogIsIdentity) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"s", "a"}, {"a", "b"}});
  EXPECT_TRUE(hypergraph_equal(replay(h, h.vertex("s"), {}), h));
}

TEST(Replay, MergeThenTrim) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"s", "a"}, {"s", "b"}});
  const std::vector<SplitOffOp> log{Merge{HyperedgeId{0}, HyperedgeId{1}}, Trim{HyperedgeId{0}}};
  const auto out = replay(h, h.vertex("s"), log);
  EXPECT_TRUE(hypergraph_equal(out, make_hypergraph({"s", "a", "b"}, {{"a", "b"}})));
  EXPECT_EQ(out.degree(h.vertex("s")), 0u);
}

TEST(Replay, ReportsFailingIndexAndLeavesInputAlone) {
  const auto h = make_hypergraph({"s", "a", "b"}, {{"s", "a"}, {"s", "b"}});
  const auto before = h;
  const std::vector<SplitOffOp> log{Trim{HyperedgeId{0}}, Trim{HyperedgeId{0}}};
  try {
    replay(h, h.vertex("s"), log);
    FAIL() << "expected ReplayError";
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  EXPECT_TRUE(hypergraph_equal(h, before));
  EXPECT_EQ(h.hyperedges(), before.hyperedges());
}

TEST(HypergraphEqual, Examples) {
  const auto h = make_hypergraph({"a", "b"}, {{"a", "b"}, {"a", "b"}});
  EXPECT_TRUE(hypergraph_equal(h, h));
  EXPECT_FALSE(hypergraph_equal(h, make_hypergraph({"a", "b"}, {{"a", "b"}})));

  Hypergraph relabeled;
  relabeled.add_vertex("b");
  relabeled.add_vertex("a");
  relabeled.add_hyperedge(HyperedgeId{10}, {VertexId{0}, VertexId{1}});
  relabeled.add_hyperedge(HyperedgeId{4}, {VertexId{1}, VertexId{0}});
  EXPECT_TRUE(hypergraph_equal(h, relabeled));
  EXPECT_FALSE(hypergraph_equal(h, make_hypergraph({"a", "b", "c"}, {{"a", "b"}, {"a", "b"}})));
}

TEST(ApplyOp, RandomOperationsKeepInvariants) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Hypergraph h = oracle::random_hypergraph({6, 8, 4, seed});
    const VertexId s{static_cast<std::uint32_t>(seed % 6)};
    for (int step = 0; step < 10; ++step) {
      const auto incident = h.incident(s);
      if (incident.empty()) break;
      const auto e = incident[rng() % incident.size()];
      const auto f = incident[rng() % incident.size()];
      const std::size_t before = h.num_hyperedges();
      if (rng() % 2 == 0) {
        const std::size_t old_size = h.members(e).size();
        h = apply_op(h, s, Trim{e});
        if (old_size == 2) {
          EXPECT_EQ(h.num_hyperedges(), before - 1);
        } else {
          EXPECT_EQ(h.num_hyperedges(), before);
        }
      } else {
        try {
          h = apply_op(h, s, Merge{e, f});
          EXPECT_EQ(h.num_hyperedges(), before - 1);
        } catch (const MergeNotAlmostDisjoint&) {
          EXPECT_EQ(h.num_hyperedges(), before);
        }
      }
      for (const auto& [id, members] : h.hyperedges()) EXPECT_GE(members.size(), 2u);
    }
  }
}

TEST(Hypergraph, WithoutIsolatedVertex) {
  const auto h = make_hypergraph({"a", "s", "b"}, {{"a", "b"}});
  const auto out = h.without_isolated_vertex(h.vertex("s"));
  EXPECT_TRUE(hypergraph_equal(out, make_hypergraph({"a", "b"}, {{"a", "b"}})));
  EXPECT_THROW(h.without_isolated_vertex(h.vertex("a")), InvalidHypergraph);
}

}  // namespace
}  // namespace hsplit
