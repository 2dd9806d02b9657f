#include "hsplit/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "hsplit/error.hpp"

namespace hsplit {

std::size_t FlowNetwork::add_arc(std::uint32_t from, std::uint32_t to, Capacity capacity) {
  if (from >= num_nodes_ || to >= num_nodes_) {
    throw InvalidQuery("arc endpoint out of range");
  }
  if (capacity < 0) {
    throw InvalidQuery("negative arc capacity");
  }
  arcs_.push_back(Arc{from, to, capacity});
  return arcs_.size() - 1;
}

void FlowNetwork::set_terminals(std::uint32_t source, std::uint32_t sink) {
  if (source >= num_nodes_ || sink >= num_nodes_) {
    throw InvalidQuery("source or sink out of range");
  }
  source_ = source;
  sink_ = sink;
}

namespace {

// Residual graph for Dinic. Arc 2i is forward arc i, 2i+1 its reverse.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : adjacency_(net.num_nodes()), level_(net.num_nodes()), cursor_(net.num_nodes()) {
    to_.reserve(2 * net.arcs().size());
    residual_.reserve(2 * net.arcs().size());
    for (const Arc& a : net.arcs()) {
      adjacency_[a.from].push_back(to_.size());
      to_.push_back(a.to);
      residual_.push_back(a.capacity);
      adjacency_[a.to].push_back(to_.size());
      to_.push_back(a.from);
      residual_.push_back(0);
    }
  }

  Capacity run(std::uint32_t source, std::uint32_t sink) {
    Capacity total = 0;
    while (build_levels(source, sink)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (Capacity pushed = augment(source, sink, std::numeric_limits<Capacity>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  Capacity flow_on(std::size_t arc) const { return residual_[2 * arc + 1]; }

 private:
  bool build_levels(std::uint32_t source, std::uint32_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::uint32_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop();
      for (std::size_t r : adjacency_[x]) {
        if (residual_[r] > 0 && level_[to_[r]] < 0) {
          level_[to_[r]] = level_[x] + 1;
          queue.push(to_[r]);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Capacity augment(std::uint32_t x, std::uint32_t sink, Capacity limit) {
    if (x == sink) {
      return limit;
    }
    for (auto& i = cursor_[x]; i < adjacency_[x].size(); ++i) {
      const std::size_t r = adjacency_[x][i];
      const auto y = to_[r];
      if (residual_[r] <= 0 || level_[y] != level_[x] + 1) {
        continue;
      }
      if (Capacity pushed = augment(y, sink, std::min(limit, residual_[r]))) {
        residual_[r] -= pushed;
        residual_[r ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::uint32_t> to_;
  std::vector<Capacity> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

FlowResult solve_max_flow(const FlowNetwork& net) {
  if (net.source() == net.sink()) {
    throw InvalidQuery("source and sink coincide");
  }
  Dinic dinic(net);
  FlowResult result;
  result.value = dinic.run(net.source(), net.sink());
  result.arc_flow.resize(net.arcs().size());
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    result.arc_flow[i] = dinic.flow_on(i);
  }
  return result;
}

Capacity max_flow(const FlowNetwork& net) { return solve_max_flow(net).value; }

ConnTable::Key ConnTable::key(std::uint32_t a, std::uint32_t b) {
  if (a == b) {
    throw InvalidQuery("connectivity pair needs two distinct ids");
  }
  return a < b ? Key{a, b} : Key{b, a};
}

void ConnTable::set(std::uint32_t a, std::uint32_t b, Capacity value) { entries_[key(a, b)] = value; }

Capacity ConnTable::at(std::uint32_t a, std::uint32_t b) const {
  auto it = entries_.find(key(a, b));
  if (it == entries_.end()) {
    throw MissingId("no table entry for pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  return it->second;
}

bool ConnTable::contains(std::uint32_t a, std::uint32_t b) const {
  return a != b && entries_.contains(key(a, b));
}

ConnTable ConnTable::without(std::uint32_t id) const {
  ConnTable out;
  for (const auto& [k, value] : entries_) {
    if (k.first != id && k.second != id) {
      out.entries_.emplace(k, value);
    }
  }
  return out;
}

namespace {

constexpr std::uint32_t in_node(NodeId x) { return 2 * x; }
constexpr std::uint32_t out_node(NodeId x) { return 2 * x + 1; }

void check_endpoints(const ElementConnInstance& inst, NodeId u, NodeId v) {
  if (u == v) {
    throw InvalidQuery("element connectivity needs two distinct terminals");
  }
  for (NodeId x : {u, v}) {
    if (!inst.alive(x)) {
      throw UnknownVertex("node " + std::to_string(x) + " is not in the instance");
    }
    if (!inst.is_terminal(x)) {
      throw InvalidQuery("node '" + inst.label(x) + "' is not a terminal");
    }
  }
}

}  // namespace

FlowNetwork element_flow_network(const ElementConnInstance& inst, NodeId u, NodeId v) {
  check_endpoints(inst, u, v);
  FlowNetwork net(2 * inst.id_bound());
  for (NodeId x : inst.nodes()) {
    const Capacity through = inst.is_terminal(x) ? static_cast<Capacity>(inst.degree(x)) : 1;
    net.add_arc(in_node(x), out_node(x), through);
  }
  for (const Edge& e : inst.edges()) {
    net.add_arc(out_node(e.u), in_node(e.v), 1);
    net.add_arc(out_node(e.v), in_node(e.u), 1);
  }
  net.set_terminals(out_node(u), in_node(v));
  return net;
}

Capacity element_connectivity(const ElementConnInstance& inst, NodeId u, NodeId v) {
  return max_flow(element_flow_network(inst, u, v));
}

std::vector<std::vector<NodeId>> element_disjoint_paths(const ElementConnInstance& inst, NodeId u,
                                                         NodeId v) {
  const FlowNetwork net = element_flow_network(inst, u, v);
  FlowResult flow = solve_max_flow(net);

  std::vector<std::vector<std::size_t>> leaving(net.num_nodes());
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    leaving[net.arcs()[i].from].push_back(i);
  }

  auto next_arc = [&](std::uint32_t x) -> std::size_t {
    for (std::size_t i : leaving[x]) {
      if (flow.arc_flow[i] > 0) {
        return i;
      }
    }
    throw InternalError("flow conservation violated during path decomposition");
  };

  std::vector<std::vector<NodeId>> paths;
  for (Capacity unit = 0; unit < flow.value; ++unit) {
    // Walk positive-flow arcs from the source, cancelling any cycle we close.
    std::vector<std::uint32_t> stack{net.source()};
    std::vector<std::size_t> used;
    while (stack.back() != net.sink()) {
      const std::size_t arc = next_arc(stack.back());
      const std::uint32_t y = net.arcs()[arc].to;
      auto seen = std::find(stack.begin(), stack.end(), y);
      if (seen == stack.end()) {
        stack.push_back(y);
        used.push_back(arc);
        continue;
      }
      const auto keep = static_cast<std::size_t>(seen - stack.begin());
      --flow.arc_flow[arc];
      for (std::size_t k = keep; k < used.size(); ++k) {
        --flow.arc_flow[used[k]];
      }
      stack.resize(keep + 1);
      used.resize(keep);
    }
    for (std::size_t arc : used) {
      --flow.arc_flow[arc];
    }
    std::vector<NodeId> path;
    for (std::uint32_t x : stack) {
      const NodeId node = x / 2;
      if (path.empty() || path.back() != node) {
        path.push_back(node);
      }
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

Capacity hyperedge_connectivity(const Hypergraph& h, VertexId u, VertexId v) {
  if (!h.has_vertex(u) || !h.has_vertex(v)) {
    throw UnknownVertex("connectivity query mentions an unknown vertex");
  }
  if (u == v) {
    throw InvalidQuery("hyperedge connectivity needs two distinct vertices");
  }
  const IncidenceGraph g = incidence_graph(h);
  return element_connectivity(g.instance, g.vertex_node[u.value], g.vertex_node[v.value]);
}

ConnTable conn_table_elements(const ElementConnInstance& inst) {
  ConnTable table;
  const auto terminals = inst.terminals();
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      table.set(terminals[i], terminals[j], element_connectivity(inst, terminals[i], terminals[j]));
    }
  }
  return table;
}

ConnTable conn_table_hyper(const Hypergraph& h) {
  // Vertex v sits at node v.value, so the element table is already keyed by vertex.
  return conn_table_elements(incidence_graph(h).instance);
}

}  // namespace hsplit
