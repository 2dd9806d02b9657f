#ifndef HSPLIT_FLOW_HPP
#define HSPLIT_FLOW_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hsplit/element_instance.hpp"
#include "hsplit/hypergraph.hpp"

namespace hsplit {

using Capacity = std::int64_t;

struct Arc {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  Capacity capacity = 0;
};

// Directed network with integer capacities. Antiparallel arcs are fine.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t num_nodes) : num_nodes_(num_nodes) {}

  /// Returns the index of the new arc. Throws InvalidQuery on a negative capacity.
  std::size_t add_arc(std::uint32_t from, std::uint32_t to, Capacity capacity);
  void set_terminals(std::uint32_t source, std::uint32_t sink);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::uint32_t source() const noexcept { return source_; }
  std::uint32_t sink() const noexcept { return sink_; }

 private:
  std::size_t num_nodes_;
  std::vector<Arc> arcs_;
  std::uint32_t source_ = 0;
  std::uint32_t sink_ = 0;
};

struct FlowResult {
  Capacity value = 0;
  /// Flow on each arc, indexed like FlowNetwork::arcs().
  std::vector<Capacity> arc_flow;
};

/// Dinic's algorithm. Throws InvalidQuery if source == sink.
FlowResult solve_max_flow(const FlowNetwork& net);
Capacity max_flow(const FlowNetwork& net);

/**
 * Pairwise connectivity values keyed by unordered id pairs.
 *
 * Ids are raw node or vertex indices. Incidence graphs place vertex v at node
 * v.value, so a hypergraph table and the table of any graph derived from its
 * incidence graph compare directly.
 */
class ConnTable {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  void set(std::uint32_t a, std::uint32_t b, Capacity value);
  /// Throws MissingId when the pair has no entry.
  Capacity at(std::uint32_t a, std::uint32_t b) const;
  bool contains(std::uint32_t a, std::uint32_t b) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<Key, Capacity>& entries() const noexcept { return entries_; }

  /// Entries that do not mention `id`.
  ConnTable without(std::uint32_t id) const;

  friend bool operator==(const ConnTable&, const ConnTable&) = default;

 private:
  static Key key(std::uint32_t a, std::uint32_t b);
  std::map<Key, Capacity> entries_;
};

/// Node-split network for κ′(u, v); node x maps to 2x (in) and 2x+1 (out).
FlowNetwork element_flow_network(const ElementConnInstance& inst, NodeId u, NodeId v);

Capacity element_connectivity(const ElementConnInstance& inst, NodeId u, NodeId v);

/// Pairwise element-disjoint u-v paths (node sequences) read off an integral maximum flow.
std::vector<std::vector<NodeId>> element_disjoint_paths(const ElementConnInstance& inst, NodeId u,
                                                         NodeId v);

/// λ_H(u, v) through the incidence graph.
Capacity hyperedge_connectivity(const Hypergraph& h, VertexId u, VertexId v);

/// κ′ for every pair of live terminals. Fewer than two terminals gives an empty table.
ConnTable conn_table_elements(const ElementConnInstance& inst);
/// λ for every vertex pair, keyed by VertexId::value.
ConnTable conn_table_hyper(const Hypergraph& h);

}  // namespace hsplit

#endif  // HSPLIT_FLOW_HPP
