#ifndef HSPLIT_ORACLE_HPP
#define HSPLIT_ORACLE_HPP

#include <cstdint>
#include <random>

#include "hsplit/element_instance.hpp"
#include "hsplit/flow.hpp"
#include "hsplit/hypergraph.hpp"

// Brute-force ground truth for small instances and seeded instance generators.
// Nothing here goes through the flow code.
namespace hsplit::oracle {

inline constexpr std::size_t kMaxCutVertices = 20;
inline constexpr std::size_t kMaxElements = 24;

/// Minimum |δ(S)| over all S holding exactly one of u, v.
Capacity oracle_lambda(const Hypergraph& h, VertexId u, VertexId v);

/// Smallest set of non-terminals and edges whose removal separates u from v.
Capacity oracle_element_conn(const ElementConnInstance& inst, NodeId u, NodeId v);

struct GenParams {
  std::size_t n = 2;           // vertices
  std::size_t m = 0;           // hyperedges (edges for element instances)
  std::size_t r = 2;           // maximum hyperedge size
  std::uint64_t seed = 0;
};

/**
 * Portable generator: std::mt19937_64 seeded with `seed`, with bounded draws
 * done by rejection sampling rather than std::uniform_int_distribution, whose
 * output differs between standard libraries.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// Vertices v0..v{n-1}; each hyperedge uniform over all subsets of size 2..r.
Hypergraph random_hypergraph(const GenParams& p);

/// Nodes x0..x{n-1}, m uniformly random edges (parallels allowed, no loops),
/// and a uniformly random terminal set of uniformly random size in [2, n].
ElementConnInstance random_element_instance(const GenParams& p);

}  // namespace hsplit::oracle

#endif  // HSPLIT_ORACLE_HPP
