#ifndef HSPLIT_ELEMENT_INSTANCE_HPP
#define HSPLIT_ELEMENT_INSTANCE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsplit/hypergraph.hpp"

namespace hsplit {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge with a stable id. Endpoints are stored with u < v.
struct Edge {
  EdgeId id = 0;
  NodeId u = 0;
  NodeId v = 0;

  NodeId other(NodeId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Undirected multigraph with a terminal set, the input to element-connectivity
 * queries.
 *
 * Node ids are never reused. Contracting an edge keeps the smaller endpoint
 * id and marks the other node dead; edge ids survive deletions and
 * contractions of other edges. Each live node remembers the set of original
 * node ids it absorbed, which is what makes the current graph readable as a
 * minor of the one it started from.
 */
class ElementConnInstance {
 public:
  ElementConnInstance() = default;

  NodeId add_node(std::string label, bool terminal);
  /// Throws InvalidQuery on self-loops or dead endpoints.
  EdgeId add_edge(NodeId a, NodeId b);

  std::size_t id_bound() const noexcept { return nodes_.size(); }
  std::size_t num_nodes() const noexcept { return live_count_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  bool alive(NodeId x) const noexcept { return x < nodes_.size() && nodes_[x].alive; }
  bool is_terminal(NodeId x) const;
  const std::string& label(NodeId x) const;
  /// Original node ids merged into `x`, sorted.
  const std::vector<NodeId>& origin(NodeId x) const;

  std::vector<NodeId> nodes() const;
  std::vector<NodeId> terminals() const;
  std::vector<NodeId> non_terminals() const;

  /// Edges in increasing id order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(EdgeId id) const;
  /// Throws MissingId.
  const Edge& edge(EdgeId id) const;
  std::vector<Edge> incident_edges(NodeId x) const;
  std::size_t degree(NodeId x) const;

  void delete_edge(EdgeId id);
  /// Contracts an edge between two non-terminals; returns the surviving node.
  /// Loops that appear are dropped, parallel edges are kept.
  NodeId contract_edge(EdgeId id);
  /// Kills a node together with its incident edges.
  void remove_node(NodeId x);
  void set_terminal(NodeId x, bool terminal);

 private:
  struct Node {
    std::string label;
    bool terminal = false;
    bool alive = true;
    std::vector<NodeId> origin;
  };

  const Node& node(NodeId x) const;

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::size_t live_count_ = 0;
  EdgeId next_edge_id_ = 0;
};

/// Incidence graph of a hypergraph together with the vertex and hyperedge node maps.
struct IncidenceGraph {
  ElementConnInstance instance;
  /// Vertex v lives at node v.value; hyperedge nodes follow.
  std::vector<NodeId> vertex_node;
  std::map<HyperedgeId, NodeId> hyperedge_node;
  std::map<NodeId, HyperedgeId> node_hyperedge;
};

/// Bipartite incidence graph: vertices become terminals, hyperedges non-terminals.
IncidenceGraph incidence_graph(const Hypergraph& h);

}  // namespace hsplit

#endif  // HSPLIT_ELEMENT_INSTANCE_HPP
