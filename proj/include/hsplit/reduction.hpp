#ifndef HSPLIT_REDUCTION_HPP
#define HSPLIT_REDUCTION_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hsplit/element_instance.hpp"
#include "hsplit/flow.hpp"

namespace hsplit {

enum class ReductionAction { Deleted, Contracted };

const char* to_string(ReductionAction action);

struct ReductionStep {
  EdgeId edge = 0;
  NodeId p = 0;
  NodeId q = 0;
  ReductionAction action = ReductionAction::Deleted;
  /// Surviving node, set only for contractions.
  std::optional<NodeId> merged_into;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct MinorTrace {
  std::vector<ReductionStep> steps;
  /// Live node -> original nodes it stands for.
  std::map<NodeId, std::vector<NodeId>> members;
};

struct ReducedEdge {
  ElementConnInstance instance;
  ReductionStep step;
};

struct StableReduction {
  ElementConnInstance instance;
  MinorTrace trace;
};

struct DeletionPass {
  ElementConnInstance instance;
  std::vector<Edge> deleted;
};

/// True iff removing the edge leaves every terminal-pair κ′ equal to `baseline`.
bool is_deletion_preserving(const ElementConnInstance& inst, EdgeId edge, const ConnTable& baseline);

/**
 * One reduction on an edge between two non-terminals.
 *
 * Deletion is preferred whenever it keeps the table. Otherwise the edge is
 * contracted, and the contracted table is checked against `baseline`; a
 * mismatch would contradict the delete-or-contract theorem and is reported as
 * InternalError.
 */
ReducedEdge reduce_edge(const ElementConnInstance& inst, EdgeId edge, const ConnTable& baseline);

/// Predicate selecting which non-terminal–non-terminal edges a reduction may touch.
using EdgeFilter = std::function<bool(const ElementConnInstance&, const Edge&)>;

/**
 * Reduces until no eligible edge joins two non-terminals. Edges are taken
 * smallest (min endpoint, max endpoint, id) first. With no filter, the
 * non-terminals of the result form a stable set.
 */
StableReduction reduce_to_stable(const ElementConnInstance& inst, const EdgeFilter& eligible = {});

/// One greedy pass over `candidates` in (min endpoint, max endpoint, id) order,
/// deleting each edge whose removal keeps the table computed on entry.
DeletionPass maximal_preserving_deletions(const ElementConnInstance& inst,
                                          std::vector<EdgeId> candidates);

/// Sort key used for every deterministic edge order in this module.
bool edge_order_less(const Edge& a, const Edge& b);

}  // namespace hsplit

#endif  // HSPLIT_REDUCTION_HPP
