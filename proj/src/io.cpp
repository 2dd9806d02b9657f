#include "hsplit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hsplit/error.hpp"

namespace hsplit::io {

using nlohmann::json;
using nlohmann::ordered_json;

Format detect_format(const std::filesystem::path& path) {
  return path.extension() == ".json" ? Format::Json : Format::Text;
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

VertexId intern(Hypergraph& h, const std::string& name) {
  if (auto v = h.find_vertex(name)) {
    return *v;
  }
  return h.add_vertex(name);
}

void add_named_hyperedge(Hypergraph& h, const std::vector<std::string>& names, std::size_t index) {
  std::vector<VertexId> members;
  for (const auto& name : names) {
    members.push_back(intern(h, name));
  }
  try {
    h.add_hyperedge(std::move(members));
  } catch (const InvalidHypergraph& e) {
    throw ParseError("hyperedge " + std::to_string(index) + ": " + e.what());
  }
}

std::vector<std::string> member_names(const Hypergraph& h, const std::vector<VertexId>& members) {
  std::vector<std::string> out;
  for (VertexId v : members) {
    out.push_back(h.name(v));
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    throw ParseError("hypergraph JSON must be an object");
  }
  Hypergraph h;
  try {
    if (doc.contains("vertices")) {
      for (const auto& name : doc.at("vertices")) {
        if (h.find_vertex(name.get<std::string>())) {
          throw ParseError("vertex '" + name.get<std::string>() + "' listed twice");
        }
        h.add_vertex(name.get<std::string>());
      }
    }
    if (doc.contains("hyperedges")) {
      std::size_t index = 0;
      for (const auto& edge : doc.at("hyperedges")) {
        add_named_hyperedge(h, edge.get<std::vector<std::string>>(), index++);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad hypergraph JSON: ") + e.what());
  } catch (const InvalidHypergraph& e) {
    throw ParseError(e.what());
  }
  return h;
}

std::string write_hypergraph_json(const Hypergraph& h) {
  ordered_json doc;
  doc["vertices"] = json::array();
  for (VertexId v : h.vertices()) {
    doc["vertices"].push_back(h.name(v));
  }
  doc["hyperedges"] = json::array();
  for (const auto& [id, members] : h.hyperedges()) {
    doc["hyperedges"].push_back(member_names(h, members));
  }
  return doc.dump(2) + "\n";
}

Hypergraph parse_hypergraph_text(std::string_view text) {
  Hypergraph h;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t index = 0;
  std::size_t line_number = 0;
  constexpr std::string_view kHeader = "#vertices:";
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::vector<std::string> names;
    if (line.rfind(kHeader, 0) == 0) {
      tokens.ignore(static_cast<std::streamsize>(kHeader.size()));
      for (std::string name; tokens >> name;) {
        try {
          intern(h, name);
        } catch (const InvalidHypergraph& e) {
          throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
        }
      }
      continue;
    }
    for (std::string name; tokens >> name;) {
      names.push_back(name);
    }
    if (names.empty() || names.front().front() == '#') {
      continue;
    }
    try {
      add_named_hyperedge(h, names, index++);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return h;
}

std::string write_hypergraph_text(const Hypergraph& h) {
  std::ostringstream out;
  out << "#vertices:";
  for (VertexId v : h.vertices()) {
    out << ' ' << h.name(v);
  }
  out << '\n';
  for (const auto& [id, members] : h.hyperedges()) {
    const auto names = member_names(h, members);
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << (i ? " " : "") << names[i];
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph parse_hypergraph(std::string_view text, Format format) {
  return format == Format::Json ? parse_hypergraph_json(text) : parse_hypergraph_text(text);
}

std::string write_hypergraph(const Hypergraph& h, Format format) {
  return format == Format::Json ? write_hypergraph_json(h) : write_hypergraph_text(h);
}

ElementConnInstance parse_element_instance(std::string_view text) {
  const json doc = parse_json(text);
  ElementConnInstance inst;
  try {
    const auto nodes = doc.at("nodes").get<std::vector<std::string>>();
    const auto terminals = doc.at("terminals").get<std::vector<std::string>>();
    std::map<std::string, NodeId> index;
    for (const auto& name : nodes) {
      if (index.contains(name)) {
        throw ParseError("node '" + name + "' listed twice");
      }
      const bool terminal = std::find(terminals.begin(), terminals.end(), name) != terminals.end();
      index.emplace(name, inst.add_node(name, terminal));
    }
    for (const auto& name : terminals) {
      if (!index.contains(name)) {
        throw ParseError("terminal '" + name + "' is not a node");
      }
    }
    if (doc.contains("edges")) {
      for (const auto& edge : doc.at("edges")) {
        const auto ends = edge.get<std::vector<std::string>>();
        if (ends.size() != 2) {
          throw ParseError("every edge needs exactly two endpoints");
        }
        if (!index.contains(ends[0]) || !index.contains(ends[1])) {
          throw ParseError("edge mentions an unknown node");
        }
        if (ends[0] == ends[1]) {
          throw ParseError("self-loop on '" + ends[0] + "'");
        }
        inst.add_edge(index.at(ends[0]), index.at(ends[1]));
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad element instance JSON: ") + e.what());
  }
  return inst;
}

std::string write_element_instance(const ElementConnInstance& inst) {
  ordered_json doc;
  doc["nodes"] = json::array();
  doc["terminals"] = json::array();
  for (NodeId x : inst.nodes()) {
    doc["nodes"].push_back(inst.label(x));
    if (inst.is_terminal(x)) {
      doc["terminals"].push_back(inst.label(x));
    }
  }
  doc["edges"] = json::array();
  for (const Edge& e : inst.edges()) {
    doc["edges"].push_back({inst.label(e.u), inst.label(e.v)});
  }
  return doc.dump(2) + "\n";
}

std::string write_op_log(const Hypergraph& h, VertexId s, const std::vector<SplitOffOp>& log) {
  ordered_json doc;
  doc["split_vertex"] = h.name(s);
  doc["hyperedges"] = json::array();
  for (const auto& [id, members] : h.hyperedges()) {
    ordered_json entry;
    entry["id"] = id.value;
    entry["vertices"] = member_names(h, members);
    doc["hyperedges"].push_back(std::move(entry));
  }
  doc["ops"] = json::array();
  for (const auto& op : log) {
    ordered_json entry;
    if (const auto* trim = std::get_if<Trim>(&op)) {
      entry["op"] = "trim";
      entry["edge"] = trim->edge.value;
    } else {
      const auto& merge = std::get<Merge>(op);
      entry["op"] = "merge";
      entry["keep"] = merge.keep.value;
      entry["absorb"] = merge.absorb.value;
    }
    doc["ops"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

OpLog parse_op_log(std::string_view text) {
  const json doc = parse_json(text);
  OpLog out;
  try {
    out.split_vertex = doc.at("split_vertex").get<std::string>();
    for (const auto& entry : doc.at("hyperedges")) {
      out.header.emplace_back(HyperedgeId{entry.at("id").get<std::uint32_t>()},
                              entry.at("vertices").get<std::vector<std::string>>());
    }
    for (const auto& entry : doc.at("ops")) {
      const auto kind = entry.at("op").get<std::string>();
      if (kind == "trim") {
        out.ops.emplace_back(Trim{HyperedgeId{entry.at("edge").get<std::uint32_t>()}});
      } else if (kind == "merge") {
        out.ops.emplace_back(Merge{HyperedgeId{entry.at("keep").get<std::uint32_t>()},
                                   HyperedgeId{entry.at("absorb").get<std::uint32_t>()}});
      } else {
        throw ParseError("unknown operation '" + kind + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad operation log: ") + e.what());
  }
  return out;
}

void check_op_log_header(const OpLog& log, const Hypergraph& h) {
  if (log.header.size() != h.num_hyperedges()) {
    throw ParseError("operation log header lists " + std::to_string(log.header.size()) +
                     " hyperedges, the hypergraph has " + std::to_string(h.num_hyperedges()));
  }
  auto it = h.hyperedges().begin();
  for (const auto& [id, names] : log.header) {
    auto expected = member_names(h, it->second);
    auto listed = names;
    std::sort(expected.begin(), expected.end());
    std::sort(listed.begin(), listed.end());
    if (id != it->first || expected != listed) {
      throw ParseError("operation log header does not match hyperedge " + std::to_string(id.value));
    }
    ++it;
  }
}

std::string write_trace(const ElementConnInstance& original, const ElementConnInstance& reduced,
                        const MinorTrace& trace) {
  ordered_json doc;
  doc["steps"] = json::array();
  for (const auto& step : trace.steps) {
    ordered_json entry;
    entry["edge"] = step.edge;
    entry["endpoints"] = {original.label(step.p), original.label(step.q)};
    entry["action"] = to_string(step.action);
    if (step.merged_into) {
      entry["merged_into"] = original.label(*step.merged_into);
    }
    doc["steps"].push_back(std::move(entry));
  }
  ordered_json members = ordered_json::object();
  for (const auto& [node, origin] : trace.members) {
    std::vector<std::string> names;
    for (NodeId o : origin) {
      names.push_back(original.label(o));
    }
    members[reduced.label(node)] = names;
  }
  doc["members"] = std::move(members);
  return doc.dump(2) + "\n";
}

std::string write_table(const ConnTable& table,
                        const std::function<std::string(std::uint32_t)>& name_of) {
  ordered_json doc;
  doc["pairs"] = json::array();
  for (const auto& [key, value] : table.entries()) {
    ordered_json entry;
    entry["u"] = name_of(key.first);
    entry["v"] = name_of(key.second);
    entry["value"] = value;
    doc["pairs"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string write_incidence_dot(const Hypergraph& h) {
  const IncidenceGraph g = incidence_graph(h);
  std::ostringstream out;
  out << "graph incidence {\n";
  for (NodeId x : g.instance.nodes()) {
    out << "  n" << x << " [label=" << dot_quote(g.instance.label(x))
        << ", shape=" << (g.instance.is_terminal(x) ? "box" : "circle") << "];\n";
  }
  for (const Edge& e : g.instance.edges()) {
    out << "  n" << e.u << " -- n" << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << contents;
}

}  // namespace hsplit::io
