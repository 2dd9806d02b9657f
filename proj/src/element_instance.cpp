#include "hsplit/element_instance.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

#include "hsplit/error.hpp"

namespace hsplit {

NodeId ElementConnInstance::add_node(std::string label, bool terminal) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{std::move(label), terminal, true, {id}});
  ++live_count_;
  return id;
}

EdgeId ElementConnInstance::add_edge(NodeId a, NodeId b) {
  if (!alive(a) || !alive(b)) {
    throw InvalidQuery("edge endpoint is not a live node");
  }
  if (a == b) {
    throw InvalidQuery("self-loops are not allowed");
  }
  const EdgeId id = next_edge_id_++;
  edges_.push_back(Edge{id, std::min(a, b), std::max(a, b)});
  return id;
}

const ElementConnInstance::Node& ElementConnInstance::node(NodeId x) const {
  if (!alive(x)) {
    throw MissingId("no live node with id " + std::to_string(x));
  }
  return nodes_[x];
}

bool ElementConnInstance::is_terminal(NodeId x) const { return node(x).terminal; }

const std::string& ElementConnInstance::label(NodeId x) const { return node(x).label; }

const std::vector<NodeId>& ElementConnInstance::origin(NodeId x) const { return node(x).origin; }

std::vector<NodeId> ElementConnInstance::nodes() const {
  std::vector<NodeId> out;
  for (NodeId x = 0; x < nodes_.size(); ++x) {
    if (nodes_[x].alive) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<NodeId> ElementConnInstance::terminals() const {
  std::vector<NodeId> out;
  for (NodeId x = 0; x < nodes_.size(); ++x) {
    if (nodes_[x].alive && nodes_[x].terminal) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<NodeId> ElementConnInstance::non_terminals() const {
  std::vector<NodeId> out;
  for (NodeId x = 0; x < nodes_.size(); ++x) {
    if (nodes_[x].alive && !nodes_[x].terminal) {
      out.push_back(x);
    }
  }
  return out;
}

bool ElementConnInstance::has_edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId key) { return e.id < key; });
  return it != edges_.end() && it->id == id;
}

const Edge& ElementConnInstance::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) {
    throw MissingId("no edge with id " + std::to_string(id));
  }
  return *it;
}

std::vector<Edge> ElementConnInstance::incident_edges(NodeId x) const {
  std::vector<Edge> out;
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(out),
               [x](const Edge& e) { return e.u == x || e.v == x; });
  return out;
}

std::size_t ElementConnInstance::degree(NodeId x) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [x](const Edge& e) { return e.u == x || e.v == x; }));
}

void ElementConnInstance::delete_edge(EdgeId id) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) {
    throw MissingId("no edge with id " + std::to_string(id));
  }
  edges_.erase(it);
}

NodeId ElementConnInstance::contract_edge(EdgeId id) {
  const Edge e = edge(id);
  const NodeId keep = e.u;
  const NodeId gone = e.v;
  if (nodes_[keep].terminal || nodes_[gone].terminal) {
    throw InvalidQuery("only edges between two non-terminals can be contracted");
  }
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (Edge f : edges_) {
    if (f.u == gone) f.u = keep;
    if (f.v == gone) f.v = keep;
    if (f.u == f.v) {
      continue;
    }
    if (f.u > f.v) std::swap(f.u, f.v);
    kept.push_back(f);
  }
  edges_ = std::move(kept);

  auto& merged = nodes_[keep].origin;
  const auto& absorbed = nodes_[gone].origin;
  std::vector<NodeId> joined;
  std::merge(merged.begin(), merged.end(), absorbed.begin(), absorbed.end(), std::back_inserter(joined));
  merged = std::move(joined);
  nodes_[gone].alive = false;
  nodes_[gone].origin.clear();
  --live_count_;
  return keep;
}

void ElementConnInstance::remove_node(NodeId x) {
  node(x);
  std::erase_if(edges_, [x](const Edge& e) { return e.u == x || e.v == x; });
  nodes_[x].alive = false;
  --live_count_;
}

void ElementConnInstance::set_terminal(NodeId x, bool terminal) {
  node(x);
  nodes_[x].terminal = terminal;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  IncidenceGraph out;
  for (VertexId v : h.vertices()) {
    out.vertex_node.push_back(out.instance.add_node(h.name(v), true));
  }
  for (const auto& [id, members] : h.hyperedges()) {
    const NodeId x = out.instance.add_node("e" + std::to_string(id.value), false);
    out.hyperedge_node.emplace(id, x);
    out.node_hyperedge.emplace(x, id);
    for (VertexId v : members) {
      out.instance.add_edge(out.vertex_node[v.value], x);
    }
  }
  return out;
}

}  // namespace hsplit
