#include "hsplit/splitoff.hpp"

#include <algorithm>
#include <set>

#include "hsplit/error.hpp"

namespace hsplit {

namespace {

constexpr std::size_t kAutoCertifyLimit = 64;

const char* const kStageNames[] = {"incidence graph", "clique gadget", "clique reduction",
                                   "pruning pass", "final contraction"};

void require_vertex(const Hypergraph& h, VertexId s) {
  if (!h.has_vertex(s)) {
    throw UnknownVertex("split vertex " + std::to_string(s.value) + " is not in the hypergraph");
  }
}

bool has_non_terminal_edge(const ElementConnInstance& g) {
  return std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return !g.is_terminal(e.u) && !g.is_terminal(e.v);
  });
}

}  // namespace

GadgetInstance build_gadget(const Hypergraph& h, VertexId s) {
  require_vertex(h, s);
  IncidenceGraph inc = incidence_graph(h);
  GadgetInstance out;
  out.graph = std::move(inc.instance);
  out.hyperedge_node = std::move(inc.hyperedge_node);
  out.node_hyperedge = std::move(inc.node_hyperedge);
  out.incident = h.incident(s);

  out.graph.remove_node(inc.vertex_node[s.value]);
  for (std::size_t i = 0; i < out.incident.size(); ++i) {
    const NodeId si = out.graph.add_node(h.name(s) + "_" + std::to_string(i + 1), false);
    out.clique.push_back(si);
    out.graph.add_edge(out.hyperedge_node.at(out.incident[i]), si);
  }
  for (std::size_t i = 0; i < out.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < out.clique.size(); ++j) {
      out.graph.add_edge(out.clique[i], out.clique[j]);
    }
  }
  return out;
}

StagePipeline run_pipeline(const Hypergraph& h, VertexId s, const PipelineOptions& options) {
  require_vertex(h, s);
  StagePipeline p;
  p.source = h;
  p.split_vertex = s;
  p.certified = options.certify.value_or(h.num_vertices() - 1 <= kAutoCertifyLimit);

  p.stages[StagePipeline::kIncidence].graph = incidence_graph(h).instance;
  p.gadget = build_gadget(h, s);
  p.stages[StagePipeline::kGadget].graph = p.gadget.graph;

  // Clique reduction: only edges between two (merged) clique nodes are touched.
  // Contraction keeps the smaller id, so merged clique nodes keep clique ids.
  std::vector<bool> in_clique(p.gadget.graph.id_bound(), false);
  for (NodeId x : p.gadget.clique) {
    in_clique[x] = true;
  }
  auto reduced = reduce_to_stable(p.gadget.graph, [&](const ElementConnInstance&, const Edge& e) {
    return in_clique[e.u] && in_clique[e.v];
  });
  p.clique_trace = std::move(reduced.trace);
  p.stages[StagePipeline::kCliqueReduced].graph = std::move(reduced.instance);
  const ElementConnInstance& g2 = p.stages[StagePipeline::kCliqueReduced].graph;
  for (NodeId x : p.gadget.clique) {
    if (g2.alive(x)) {
      p.clique_remnants.push_back(x);
    }
  }

  std::vector<EdgeId> candidates;
  for (const Edge& e : g2.edges()) {
    if (in_clique[e.u] || in_clique[e.v]) {
      candidates.push_back(e.id);
    }
  }
  auto pruned = maximal_preserving_deletions(g2, std::move(candidates));
  p.pruned_edges = std::move(pruned.deleted);
  p.stages[StagePipeline::kPruned].graph = std::move(pruned.instance);
  const ElementConnInstance& g3 = p.stages[StagePipeline::kPruned].graph;

  std::set<HyperedgeId> seen;
  for (NodeId a : p.clique_remnants) {
    std::vector<HyperedgeId> attached;
    for (const Edge& e : g3.incident_edges(a)) {
      auto it = p.gadget.node_hyperedge.find(e.other(a));
      if (it == p.gadget.node_hyperedge.end()) {
        throw InternalError("clique remnant adjacent to a node that is not a hyperedge");
      }
      if (!seen.insert(it->second).second) {
        throw InternalError("hyperedge " + std::to_string(it->second.value) +
                            " attached to two clique remnants");
      }
      attached.push_back(it->second);
    }
    std::sort(attached.begin(), attached.end());
    if (attached.empty()) {
      p.dropped_remnants.push_back(a);
    } else {
      p.attached.emplace(a, std::move(attached));
    }
  }
  for (HyperedgeId e : p.gadget.incident) {
    if (!seen.contains(e)) {
      p.detached.push_back(e);
    }
  }

  ElementConnInstance g4 = g3;
  for (NodeId a : p.dropped_remnants) {
    g4.remove_node(a);
  }
  std::optional<ConnTable> baseline;
  if (p.certified) {
    baseline = conn_table_elements(g3);
  }
  for (const auto& [a, attached] : p.attached) {
    std::vector<Edge> star = g4.incident_edges(a);
    std::sort(star.begin(), star.end(), edge_order_less);
    for (const Edge& f : star) {
      if (!g4.has_edge(f.id)) {
        continue;
      }
      g4.contract_edge(f.id);
      if (baseline && conn_table_elements(g4) != *baseline) {
        throw InternalError("contracting edge " + std::to_string(f.id) +
                            " changed element connectivity");
      }
    }
  }
  if (has_non_terminal_edge(g4)) {
    throw InternalError("final stage still has an edge between two non-terminals");
  }
  p.stages[StagePipeline::kContracted].graph = std::move(g4);

  if (p.certified) {
    for (std::size_t i = 0; i < p.stages.size(); ++i) {
      p.stages[i].table = conn_table_elements(p.stages[i].graph).without(s.value);
      if (*p.stages[i].table != *p.stages[0].table) {
        throw InternalError(std::string("connectivity changed at stage: ") + kStageNames[i]);
      }
    }
  }
  return p;
}

Hypergraph extract_h_star(const StagePipeline& p) {
  const ElementConnInstance& g4 = p.stages[StagePipeline::kContracted].graph;
  if (has_non_terminal_edge(g4)) {
    throw InternalError("final stage still has an edge between two non-terminals");
  }
  Hypergraph out;
  for (VertexId v : p.source.vertices()) {
    out.add_vertex(p.source.name(v));
  }
  for (NodeId x : g4.non_terminals()) {
    std::optional<HyperedgeId> label;
    for (NodeId o : g4.origin(x)) {
      auto it = p.gadget.node_hyperedge.find(o);
      if (it != p.gadget.node_hyperedge.end() && (!label || it->second < *label)) {
        label = it->second;
      }
    }
    if (!label) {
      throw InternalError("final-stage node " + std::to_string(x) + " carries no hyperedge");
    }
    std::set<VertexId> members;
    for (const Edge& e : g4.incident_edges(x)) {
      members.insert(VertexId{e.other(x)});
    }
    if (members.size() >= 2) {
      out.add_hyperedge(*label, {members.begin(), members.end()});
    }
  }
  return out;
}

std::vector<SplitOffOp> extract_op_log(const StagePipeline& p, const Hypergraph& h, VertexId s) {
  std::vector<SplitOffOp> log;
  Hypergraph current = h;
  auto emit = [&](SplitOffOp op) {
    try {
      current = apply_op(current, s, op);
    } catch (const MergeNotAlmostDisjoint& e) {
      throw InternalError(std::string("extracted merge is not almost-disjoint: ") + e.what());
    }
    log.push_back(op);
  };

  for (HyperedgeId e : p.detached) {
    emit(Trim{e});
  }
  for (const auto& [a, attached] : p.attached) {
    for (std::size_t k = 1; k < attached.size(); ++k) {
      emit(Merge{attached.front(), attached[k]});
    }
    emit(Trim{attached.front()});
  }
  return log;
}

SplitOffResult complete_split_off(const Hypergraph& h, VertexId s, const SplitOffOptions& options) {
  require_vertex(h, s);
  StagePipeline pipeline = run_pipeline(h, s, PipelineOptions{options.certify});

  SplitOffResult out;
  out.h_star = extract_h_star(pipeline);
  out.log = extract_op_log(pipeline, h, s);
  if (out.h_star.degree(s) != 0) {
    throw InternalError("split vertex still has incident hyperedges");
  }

  out.certificate.before = conn_table_hyper(h).without(s.value);
  out.certificate.after = conn_table_hyper(out.h_star).without(s.value);
  out.certificate.tables_equal = out.certificate.before == out.certificate.after;
  out.certificate.replay_matches = hypergraph_equal(replay(h, s, out.log), out.h_star);
  if (!out.certificate.tables_equal) {
    throw InternalError("certificate failed: connectivity tables differ");
  }
  if (!out.certificate.replay_matches) {
    throw InternalError("certificate failed: operation log does not replay to the result");
  }
  if (options.keep_pipeline) {
    out.pipeline = std::move(pipeline);
  }
  return out;
}

}  // namespace hsplit
