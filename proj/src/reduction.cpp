#include "hsplit/reduction.hpp"

#include <algorithm>
#include <tuple>

#include "hsplit/error.hpp"

namespace hsplit {

const char* to_string(ReductionAction action) {
  return action == ReductionAction::Deleted ? "deleted" : "contracted";
}

bool edge_order_less(const Edge& a, const Edge& b) {
  return std::tie(a.u, a.v, a.id) < std::tie(b.u, b.v, b.id);
}

bool is_deletion_preserving(const ElementConnInstance& inst, EdgeId edge, const ConnTable& baseline) {
  ElementConnInstance trial = inst;
  trial.delete_edge(edge);
  return conn_table_elements(trial) == baseline;
}

ReducedEdge reduce_edge(const ElementConnInstance& inst, EdgeId edge, const ConnTable& baseline) {
  const Edge e = inst.edge(edge);
  if (inst.is_terminal(e.u) || inst.is_terminal(e.v)) {
    throw InvalidQuery("reduction edge " + std::to_string(edge) + " touches a terminal");
  }

  ReducedEdge out{inst, ReductionStep{edge, e.u, e.v, ReductionAction::Deleted, std::nullopt}};
  out.instance.delete_edge(edge);
  if (conn_table_elements(out.instance) == baseline) {
    return out;
  }

  out.instance = inst;
  out.step.action = ReductionAction::Contracted;
  out.step.merged_into = out.instance.contract_edge(edge);
  if (conn_table_elements(out.instance) != baseline) {
    throw InternalError("neither deleting nor contracting edge " + std::to_string(edge) +
                        " preserves element connectivity");
  }
  return out;
}

namespace {

std::optional<Edge> next_reducible(const ElementConnInstance& inst, const EdgeFilter& eligible) {
  std::optional<Edge> best;
  for (const Edge& e : inst.edges()) {
    if (inst.is_terminal(e.u) || inst.is_terminal(e.v)) continue;
    if (eligible && !eligible(inst, e)) continue;
    if (!best || edge_order_less(e, *best)) best = e;
  }
  return best;
}

}  // namespace

StableReduction reduce_to_stable(const ElementConnInstance& inst, const EdgeFilter& eligible) {
  StableReduction out{inst, {}};
  const ConnTable baseline = conn_table_elements(inst);
  while (auto e = next_reducible(out.instance, eligible)) {
    auto reduced = reduce_edge(out.instance, e->id, baseline);
    out.instance = std::move(reduced.instance);
    out.trace.steps.push_back(reduced.step);
  }
  for (NodeId x : out.instance.nodes()) {
    out.trace.members.emplace(x, out.instance.origin(x));
  }
  return out;
}

DeletionPass maximal_preserving_deletions(const ElementConnInstance& inst, std::vector<EdgeId> candidates) {
  std::vector<Edge> ordered;
  for (EdgeId id : candidates) {
    ordered.push_back(inst.edge(id));
  }
  std::sort(ordered.begin(), ordered.end(), edge_order_less);
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  DeletionPass out{inst, {}};
  const ConnTable baseline = conn_table_elements(inst);
  for (const Edge& e : ordered) {
    if (is_deletion_preserving(out.instance, e.id, baseline)) {
      out.instance.delete_edge(e.id);
      out.deleted.push_back(e);
    }
  }
  return out;
}

}  // namespace hsplit
