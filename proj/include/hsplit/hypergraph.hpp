#ifndef HSPLIT_HYPERGRAPH_HPP
#define HSPLIT_HYPERGRAPH_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace hsplit {

template <typename Tag>
struct StrongId {
  std::uint32_t value = 0;

  constexpr StrongId() = default;
  constexpr explicit StrongId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(StrongId, StrongId) = default;
  friend std::ostream& operator<<(std::ostream& os, StrongId id) { return os << id.value; }
};

using VertexId = StrongId<struct VertexTag>;
using HyperedgeId = StrongId<struct HyperedgeTag>;

/**
 * Multi-hypergraph on a dense, named vertex set.
 *
 * Vertices are numbered 0..n-1 in insertion order and carry the names they
 * were read with. Hyperedges are kept in a map keyed by id; each member list
 * is sorted, duplicate-free, and has at least two vertices. Parallel
 * hyperedges are distinct entries.
 */
class Hypergraph {
 public:
  using EdgeMap = std::map<HyperedgeId, std::vector<VertexId>>;

  Hypergraph() = default;

  /// Adds a named vertex. Throws InvalidHypergraph if the name is taken.
  VertexId add_vertex(std::string name);

  /// Adds a hyperedge under the next free id.
  HyperedgeId add_hyperedge(std::vector<VertexId> members);
  /// Adds a hyperedge under an explicit id, which must be unused.
  HyperedgeId add_hyperedge(HyperedgeId id, std::vector<VertexId> members);

  void remove_hyperedge(HyperedgeId id);
  void replace_hyperedge(HyperedgeId id, std::vector<VertexId> members);

  std::size_t num_vertices() const noexcept { return names_.size(); }
  std::size_t num_hyperedges() const noexcept { return edges_.size(); }

  std::vector<VertexId> vertices() const;
  const std::string& name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Like find_vertex, but throws UnknownVertex.
  VertexId vertex(std::string_view name) const;
  bool has_vertex(VertexId v) const noexcept { return v.value < names_.size(); }

  const EdgeMap& hyperedges() const noexcept { return edges_; }
  bool has_hyperedge(HyperedgeId id) const { return edges_.contains(id); }
  /// Members of a hyperedge. Throws MissingId.
  const std::vector<VertexId>& members(HyperedgeId id) const;

  std::vector<HyperedgeId> incident(VertexId v) const;
  std::size_t degree(VertexId v) const;

  /// Copy of this hypergraph without vertex `v`, which must be isolated.
  /// Later vertices shift down by one; hyperedge ids are kept.
  Hypergraph without_isolated_vertex(VertexId v) const;

 private:
  std::vector<VertexId> checked_members(std::vector<VertexId> members) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  EdgeMap edges_;
  std::uint32_t next_edge_id_ = 0;
};

/// Proper nonempty vertex subset of a particular hypergraph.
class CutSide {
 public:
  /// Throws InvalidCut unless the subset is proper and nonempty.
  CutSide(const Hypergraph& h, std::span<const VertexId> side);

  bool contains(VertexId v) const { return v.value < in_.size() && in_[v.value]; }
  std::size_t size() const noexcept { return count_; }

 private:
  std::vector<bool> in_;
  std::size_t count_ = 0;
};

/// Hyperedges with a member on each side of the cut.
std::vector<HyperedgeId> delta(const Hypergraph& h, const CutSide& side);

struct Trim {
  HyperedgeId edge;
  friend bool operator==(const Trim&, const Trim&) = default;
};

struct Merge {
  HyperedgeId keep;
  HyperedgeId absorb;
  friend bool operator==(const Merge&, const Merge&) = default;
};

/// One h-splitting-off step at a fixed vertex.
using SplitOffOp = std::variant<Trim, Merge>;

std::string to_string(const SplitOffOp& op);

/**
 * Applies one splitting-off step at `s` and returns the new hypergraph.
 *
 * Trim removes `s` from the target; a target left with a single vertex is
 * dropped. Merge requires the two hyperedges to meet exactly in {s}; the
 * union is stored under `keep` and `absorb` disappears.
 */
Hypergraph apply_op(const Hypergraph& h, VertexId s, const SplitOffOp& op);

/// Left fold of apply_op. Failures are rethrown as ReplayError carrying the log index.
Hypergraph replay(const Hypergraph& h, VertexId s, std::span<const SplitOffOp> log);

/// Same vertex names and the same multiset of hyperedges (by member names). Ids are ignored.
bool hypergraph_equal(const Hypergraph& a, const Hypergraph& b);

}  // namespace hsplit

template <typename Tag>
struct std::hash<hsplit::StrongId<Tag>> {
  std::size_t operator()(hsplit::StrongId<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // HSPLIT_HYPERGRAPH_HPP
