#ifndef HSPLIT_SPLITOFF_HPP
#define HSPLIT_SPLITOFF_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsplit/element_instance.hpp"
#include "hsplit/flow.hpp"
#include "hsplit/hypergraph.hpp"
#include "hsplit/reduction.hpp"

namespace hsplit {

/// The incidence graph of H with the split vertex replaced by a clique of non-terminals.
struct GadgetInstance {
  ElementConnInstance graph;
  /// Clique nodes s_1..s_d, one per hyperedge through the split vertex.
  std::vector<NodeId> clique;
  /// Hyperedges through the split vertex, ascending; the i-th attaches to clique[i].
  std::vector<HyperedgeId> incident;
  /// Incidence-graph node of each hyperedge of H.
  std::map<HyperedgeId, NodeId> hyperedge_node;
  std::map<NodeId, HyperedgeId> node_hyperedge;
};

/**
 * Replaces the split vertex by a clique gadget.
 *
 * Terminals of the result are the vertices other than `s`. The node of `s`
 * stays dead, so vertex and hyperedge node ids match the incidence graph.
 */
GadgetInstance build_gadget(const Hypergraph& h, VertexId s);

struct Stage {
  ElementConnInstance graph;
  /// Pairwise κ′ over the vertices other than the split vertex; empty unless certified.
  std::optional<ConnTable> table;
};

/// Stages of the construction, from the incidence graph to the final bipartite minor.
struct StagePipeline {
  enum Index { kIncidence = 0, kGadget, kCliqueReduced, kPruned, kContracted };

  Hypergraph source;
  VertexId split_vertex;
  GadgetInstance gadget;
  std::array<Stage, 5> stages;
  /// Nodes left over from the clique after reduction, ascending.
  std::vector<NodeId> clique_remnants;
  /// Remnants that lost every edge in the pruning pass; removed before contraction.
  std::vector<NodeId> dropped_remnants;
  /// Hyperedges still attached to each remnant after pruning, ascending.
  std::map<NodeId, std::vector<HyperedgeId>> attached;
  /// Hyperedges through the split vertex attached to no remnant after pruning, ascending.
  std::vector<HyperedgeId> detached;
  MinorTrace clique_trace;
  std::vector<Edge> pruned_edges;
  bool certified = false;
};

struct PipelineOptions {
  /// Record stage tables and check them; nullopt means on when there are at most 64 terminals.
  std::optional<bool> certify;
};

StagePipeline run_pipeline(const Hypergraph& h, VertexId s, const PipelineOptions& options = {});

/// Hypergraph read off the last stage, with the split vertex kept isolated.
Hypergraph extract_h_star(const StagePipeline& p);

/// Trim/merge sequence turning H into extract_h_star(p). Every step is applied
/// while it is emitted; a merge that is not almost-disjoint raises InternalError.
std::vector<SplitOffOp> extract_op_log(const StagePipeline& p, const Hypergraph& h, VertexId s);

struct Certificate {
  ConnTable before;
  ConnTable after;
  bool tables_equal = false;
  bool replay_matches = false;

  bool passed() const noexcept { return tables_equal && replay_matches; }
};

struct SplitOffResult {
  Hypergraph h_star;
  std::vector<SplitOffOp> log;
  Certificate certificate;
  std::optional<StagePipeline> pipeline;
};

struct SplitOffOptions {
  std::optional<bool> certify;
  bool keep_pipeline = false;
};

/**
 * Complete connectivity-preserving splitting-off at `s`.
 *
 * Throws InternalError if the certificate fails; a returned result always has
 * equal before/after tables and a log that replays to h_star.
 */
SplitOffResult complete_split_off(const Hypergraph& h, VertexId s, const SplitOffOptions& options = {});

}  // namespace hsplit

#endif  // HSPLIT_SPLITOFF_HPP
