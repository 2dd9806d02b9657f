#include "hsplit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "hsplit/error.hpp"

namespace hsplit::oracle {

Capacity oracle_lambda(const Hypergraph& h, VertexId u, VertexId v) {
  const std::size_t n = h.num_vertices();
  if (n > kMaxCutVertices) {
    throw InstanceTooLarge("cut enumeration is limited to " + std::to_string(kMaxCutVertices) +
                           " vertices");
  }
  if (!h.has_vertex(u) || !h.has_vertex(v)) {
    throw UnknownVertex("oracle query mentions an unknown vertex");
  }
  if (u == v) {
    throw InvalidQuery("oracle query needs two distinct vertices");
  }

  std::vector<std::uint32_t> edge_masks;
  for (const auto& [id, members] : h.hyperedges()) {
    std::uint32_t mask = 0;
    for (VertexId x : members) mask |= 1u << x.value;
    edge_masks.push_back(mask);
  }

  // Every other vertex is free; u is always inside, v always outside.
  std::vector<std::uint32_t> free_bits;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (x != u.value && x != v.value) free_bits.push_back(x);
  }

  Capacity best = static_cast<Capacity>(edge_masks.size());
  const std::uint32_t combos = 1u << free_bits.size();
  for (std::uint32_t pick = 0; pick < combos; ++pick) {
    std::uint32_t side = 1u << u.value;
    for (std::size_t i = 0; i < free_bits.size(); ++i) {
      if (pick & (1u << i)) side |= 1u << free_bits[i];
    }
    Capacity crossing = 0;
    for (std::uint32_t e : edge_masks) {
      if ((e & side) != 0 && (e & ~side) != 0) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

namespace {

// u and v stay connected once the masked elements are gone?
bool connected_without(const ElementConnInstance& inst, NodeId u, NodeId v,
                       const std::vector<NodeId>& element_node, const std::vector<Edge>& edges,
                       std::uint32_t removed) {
  const std::size_t node_elements = element_node.size();
  std::vector<bool> blocked(inst.id_bound(), false);
  for (std::size_t i = 0; i < node_elements; ++i) {
    if (removed & (1u << i)) blocked[element_node[i]] = true;
  }
  std::vector<bool> reached(inst.id_bound(), false);
  std::vector<NodeId> frontier{u};
  reached[u] = true;
  while (!frontier.empty()) {
    const NodeId x = frontier.back();
    frontier.pop_back();
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (removed & (1u << (node_elements + j))) continue;
      const Edge& e = edges[j];
      if (e.u != x && e.v != x) continue;
      const NodeId y = e.other(x);
      if (reached[y] || blocked[y]) continue;
      if (y == v) return true;
      reached[y] = true;
      frontier.push_back(y);
    }
  }
  return false;
}

}  // namespace

Capacity oracle_element_conn(const ElementConnInstance& inst, NodeId u, NodeId v) {
  const std::vector<NodeId> element_node = inst.non_terminals();
  const std::vector<Edge>& edges = inst.edges();
  const std::size_t count = element_node.size() + edges.size();
  if (count > kMaxElements) {
    throw InstanceTooLarge("element enumeration is limited to " + std::to_string(kMaxElements) +
                           " elements");
  }
  if (u == v) {
    throw InvalidQuery("oracle query needs two distinct terminals");
  }
  for (NodeId x : {u, v}) {
    if (!inst.alive(x)) throw UnknownVertex("node " + std::to_string(x) + " is not in the instance");
    if (!inst.is_terminal(x)) throw InvalidQuery("node '" + inst.label(x) + "' is not a terminal");
  }

  // Ascending subset size; removing every element always separates u from v.
  for (std::size_t k = 0; k <= count; ++k) {
    if (k == 0) {
      if (!connected_without(inst, u, v, element_node, edges, 0)) return 0;
      continue;
    }
    const std::uint32_t limit = 1u << count;
    std::uint32_t mask = (1u << k) - 1;
    while (mask < limit) {
      if (!connected_without(inst, u, v, element_node, edges, mask)) {
        return static_cast<Capacity>(k);
      }
      // Next mask with the same popcount (Gosper).
      const std::uint32_t low = mask & (~mask + 1);
      const std::uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  throw InternalError("element enumeration found no separating set");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw InvalidParams("empty sampling range");
  }
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) {
    x = engine_();
  }
  return x % bound;
}

namespace {

std::vector<std::uint32_t> sample_subset(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.below(n - i)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

}  // namespace

Hypergraph random_hypergraph(const GenParams& p) {
  if (p.n < 2 || p.r < 2) {
    throw InvalidParams("need n >= 2 and r >= 2");
  }
  if (p.r > p.n) {
    throw InvalidParams("maximum hyperedge size exceeds the vertex count");
  }
  if (p.n > 62) {
    throw InvalidParams("vertex count too large for the subset-size weights");
  }
  Rng rng(p.seed);
  Hypergraph h;
  for (std::size_t i = 0; i < p.n; ++i) {
    h.add_vertex("v" + std::to_string(i));
  }
  // Size k is drawn with weight C(n, k), which makes the subset uniform overall.
  std::vector<std::uint64_t> weight;
  std::uint64_t total = 0;
  for (std::size_t k = 2; k <= p.r; ++k) {
    weight.push_back(binomial(p.n, k));
    total += weight.back();
  }
  for (std::size_t i = 0; i < p.m; ++i) {
    std::uint64_t ticket = rng.below(total);
    std::size_t k = 2;
    while (ticket >= weight[k - 2]) {
      ticket -= weight[k - 2];
      ++k;
    }
    std::vector<VertexId> members;
    for (std::uint32_t x : sample_subset(rng, p.n, k)) {
      members.emplace_back(x);
    }
    h.add_hyperedge(std::move(members));
  }
  return h;
}

ElementConnInstance random_element_instance(const GenParams& p) {
  if (p.n < 2) {
    throw InvalidParams("need at least two nodes");
  }
  Rng rng(p.seed);
  const std::size_t terminal_count = rng.between(2, p.n);
  std::vector<bool> terminal(p.n, false);
  for (std::uint32_t x : sample_subset(rng, p.n, terminal_count)) {
    terminal[x] = true;
  }
  ElementConnInstance inst;
  for (std::size_t i = 0; i < p.n; ++i) {
    inst.add_node("x" + std::to_string(i), terminal[i]);
  }
  for (std::size_t i = 0; i < p.m; ++i) {
    const auto a = static_cast<NodeId>(rng.below(p.n));
    auto b = static_cast<NodeId>(rng.below(p.n - 1));
    if (b >= a) ++b;
    inst.add_edge(a, b);
  }
  return inst;
}

}  // namespace hsplit::oracle
