#include "hsplit/hypergraph.hpp"

#include <algorithm>
#include <utility>

#include "hsplit/error.hpp"

namespace hsplit {

VertexId Hypergraph::add_vertex(std::string name) {
  if (name.empty()) {
    throw InvalidHypergraph("empty vertex name");
  }
  if (index_.contains(name)) {
    throw InvalidHypergraph("duplicate vertex '" + name + "'");
  }
  const VertexId id{static_cast<std::uint32_t>(names_.size())};
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

std::vector<VertexId> Hypergraph::checked_members(std::vector<VertexId> members) const {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw InvalidHypergraph("hyperedge lists a vertex twice");
  }
  if (members.size() < 2) {
    throw InvalidHypergraph("hyperedge needs at least two vertices");
  }
  for (VertexId v : members) {
    if (!has_vertex(v)) {
      throw InvalidHypergraph("hyperedge refers to unknown vertex " + std::to_string(v.value));
    }
  }
  return members;
}

HyperedgeId Hypergraph::add_hyperedge(std::vector<VertexId> members) {
  return add_hyperedge(HyperedgeId{next_edge_id_}, std::move(members));
}

HyperedgeId Hypergraph::add_hyperedge(HyperedgeId id, std::vector<VertexId> members) {
  if (edges_.contains(id)) {
    throw InvalidHypergraph("hyperedge id " + std::to_string(id.value) + " already in use");
  }
  edges_.emplace(id, checked_members(std::move(members)));
  next_edge_id_ = std::max(next_edge_id_, id.value + 1);
  return id;
}

void Hypergraph::remove_hyperedge(HyperedgeId id) {
  if (edges_.erase(id) == 0) {
    throw MissingId("no hyperedge with id " + std::to_string(id.value));
  }
}

void Hypergraph::replace_hyperedge(HyperedgeId id, std::vector<VertexId> members) {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw MissingId("no hyperedge with id " + std::to_string(id.value));
  }
  it->second = checked_members(std::move(members));
}

std::vector<VertexId> Hypergraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(names_.size());
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    out.emplace_back(i);
  }
  return out;
}

const std::string& Hypergraph::name(VertexId v) const {
  if (!has_vertex(v)) {
    throw UnknownVertex("no vertex with id " + std::to_string(v.value));
  }
  return names_[v.value];
}

std::optional<VertexId> Hypergraph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

VertexId Hypergraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) {
    return *v;
  }
  throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
}

const std::vector<VertexId>& Hypergraph::members(HyperedgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw MissingId("no hyperedge with id " + std::to_string(id.value));
  }
  return it->second;
}

std::vector<HyperedgeId> Hypergraph::incident(VertexId v) const {
  std::vector<HyperedgeId> out;
  for (const auto& [id, members] : edges_) {
    if (std::binary_search(members.begin(), members.end(), v)) {
      out.push_back(id);
    }
  }
  return out;
}

std::size_t Hypergraph::degree(VertexId v) const { return incident(v).size(); }

Hypergraph Hypergraph::without_isolated_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    throw UnknownVertex("no vertex with id " + std::to_string(v.value));
  }
  if (degree(v) != 0) {
    throw InvalidHypergraph("vertex '" + names_[v.value] + "' is not isolated");
  }
  Hypergraph out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (i != v.value) {
      out.add_vertex(names_[i]);
    }
  }
  for (const auto& [id, members] : edges_) {
    std::vector<VertexId> shifted;
    for (VertexId m : members) {
      shifted.emplace_back(m.value > v.value ? m.value - 1 : m.value);
    }
    out.add_hyperedge(id, std::move(shifted));
  }
  out.next_edge_id_ = next_edge_id_;
  return out;
}

CutSide::CutSide(const Hypergraph& h, std::span<const VertexId> side) : in_(h.num_vertices(), false) {
  for (VertexId v : side) {
    if (!h.has_vertex(v)) {
      throw InvalidCut("cut mentions unknown vertex " + std::to_string(v.value));
    }
    if (!in_[v.value]) {
      in_[v.value] = true;
      ++count_;
    }
  }
  if (count_ == 0 || count_ == h.num_vertices()) {
    throw InvalidCut("cut side must be a proper nonempty subset");
  }
}

std::vector<HyperedgeId> delta(const Hypergraph& h, const CutSide& side) {
  std::vector<HyperedgeId> out;
  for (const auto& [id, members] : h.hyperedges()) {
    const auto inside = std::count_if(members.begin(), members.end(),
                                      [&](VertexId v) { return side.contains(v); });
    if (inside > 0 && static_cast<std::size_t>(inside) < members.size()) {
      out.push_back(id);
    }
  }
  return out;
}

std::string to_string(const SplitOffOp& op) {
  if (const auto* trim = std::get_if<Trim>(&op)) {
    return "trim(" + std::to_string(trim->edge.value) + ")";
  }
  const auto& merge = std::get<Merge>(op);
  return "merge(" + std::to_string(merge.keep.value) + ", " + std::to_string(merge.absorb.value) + ")";
}

namespace {

bool contains(const std::vector<VertexId>& members, VertexId v) {
  return std::binary_search(members.begin(), members.end(), v);
}

}  // namespace

Hypergraph apply_op(const Hypergraph& h, VertexId s, const SplitOffOp& op) {
  Hypergraph out = h;
  if (const auto* trim = std::get_if<Trim>(&op)) {
    const auto& members = h.members(trim->edge);
    if (!contains(members, s)) {
      throw TrimTargetLacksVertex("hyperedge " + std::to_string(trim->edge.value) +
                                  " does not contain the split vertex");
    }
    std::vector<VertexId> rest;
    std::copy_if(members.begin(), members.end(), std::back_inserter(rest),
                 [&](VertexId v) { return v != s; });
    if (rest.size() < 2) {
      out.remove_hyperedge(trim->edge);
    } else {
      out.replace_hyperedge(trim->edge, std::move(rest));
    }
    return out;
  }

  const auto& merge = std::get<Merge>(op);
  if (merge.keep == merge.absorb) {
    throw MergeNotAlmostDisjoint("cannot merge hyperedge " + std::to_string(merge.keep.value) +
                                 " with itself");
  }
  const auto& keep = h.members(merge.keep);
  const auto& absorb = h.members(merge.absorb);
  std::vector<VertexId> common;
  std::set_intersection(keep.begin(), keep.end(), absorb.begin(), absorb.end(),
                        std::back_inserter(common));
  if (common.size() != 1 || common.front() != s) {
    throw MergeNotAlmostDisjoint("hyperedges " + std::to_string(merge.keep.value) + " and " +
                                 std::to_string(merge.absorb.value) +
                                 " do not meet exactly in the split vertex");
  }
  std::vector<VertexId> joined;
  std::set_union(keep.begin(), keep.end(), absorb.begin(), absorb.end(), std::back_inserter(joined));
  out.remove_hyperedge(merge.absorb);
  out.replace_hyperedge(merge.keep, std::move(joined));
  return out;
}

Hypergraph replay(const Hypergraph& h, VertexId s, std::span<const SplitOffOp> log) {
  if (!h.has_vertex(s)) {
    throw UnknownVertex("split vertex " + std::to_string(s.value) + " is not in the hypergraph");
  }
  Hypergraph current = h;
  for (std::size_t i = 0; i < log.size(); ++i) {
    try {
      current = apply_op(current, s, log[i]);
    } catch (const Error& e) {
      throw ReplayError(i, e.what());
    }
  }
  return current;
}

namespace {

std::vector<std::vector<std::string>> canonical_edges(const Hypergraph& h) {
  std::vector<std::vector<std::string>> out;
  out.reserve(h.num_hyperedges());
  for (const auto& [id, members] : h.hyperedges()) {
    std::vector<std::string> names;
    for (VertexId v : members) {
      names.push_back(h.name(v));
    }
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted_names(const Hypergraph& h) {
  std::vector<std::string> out;
  for (VertexId v : h.vertices()) {
    out.push_back(h.name(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool hypergraph_equal(const Hypergraph& a, const Hypergraph& b) {
  return a.num_vertices() == b.num_vertices() && a.num_hyperedges() == b.num_hyperedges() &&
         sorted_names(a) == sorted_names(b) && canonical_edges(a) == canonical_edges(b);
}

}  // namespace hsplit
