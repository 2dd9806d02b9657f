// hsplit: connectivity queries, element-connectivity reduction and complete
// splitting-off for multi-hypergraphs.
//
// Exit codes: 0 success, 1 verify mismatch, 2 bad input or usage, 3 unknown
// vertex, 4 internal error (failed certificate), 5 invalid operation in a log.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsplit/error.hpp"
#include "hsplit/flow.hpp"
#include "hsplit/io.hpp"
#include "hsplit/oracle.hpp"
#include "hsplit/reduction.hpp"
#include "hsplit/splitoff.hpp"

namespace fs = std::filesystem;
using namespace hsplit;

namespace {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kBadInput = 2,
  kUnknownVertex = 3,
  kInternal = 4,
  kBadOperation = 5,
};

io::Format resolve_format(const fs::path& path, const std::string& forced) {
  if (forced == "json") return io::Format::Json;
  if (forced == "text") return io::Format::Text;
  return io::detect_format(path);
}

Hypergraph load_hypergraph(const fs::path& path, const std::string& forced) {
  return io::parse_hypergraph(io::read_file(path), resolve_format(path, forced));
}

NodeId find_node(const ElementConnInstance& inst, const std::string& name) {
  for (NodeId x : inst.nodes()) {
    if (inst.label(x) == name) return x;
  }
  throw UnknownVertex("unknown node '" + name + "'");
}

void emit(const std::optional<fs::path>& out, const std::string& contents) {
  if (out) {
    io::write_file(*out, contents);
  } else {
    std::cout << contents;
  }
}

fs::path with_suffix(const fs::path& input, const std::string& suffix, const fs::path& ext) {
  fs::path out = input;
  out.replace_filename(input.stem().string() + suffix);
  out += ext;
  return out;
}

struct ConnArgs {
  std::string file;
  std::vector<std::string> pair;
  bool all_pairs = false;
  bool json = false;
  std::string format;
};

int run_conn(const ConnArgs& args) {
  const Hypergraph h = load_hypergraph(args.file, args.format);
  if (!args.all_pairs) {
    if (args.pair.size() != 2) {
      throw InvalidQuery("give two vertices or --all-pairs");
    }
    const VertexId u = h.vertex(args.pair[0]);
    const VertexId v = h.vertex(args.pair[1]);
    std::cout << hyperedge_connectivity(h, u, v) << "\n";
    return kOk;
  }
  const ConnTable table = conn_table_hyper(h);
  if (args.json) {
    std::cout << io::write_table(table, [&](std::uint32_t id) { return h.name(VertexId{id}); });
  } else {
    for (const auto& [key, value] : table.entries()) {
      std::cout << h.name(VertexId{key.first}) << " " << h.name(VertexId{key.second}) << " "
                << value << "\n";
    }
  }
  return kOk;
}

int run_econn(const ConnArgs& args) {
  const ElementConnInstance inst = io::parse_element_instance(io::read_file(args.file));
  if (!args.all_pairs) {
    if (args.pair.size() != 2) {
      throw InvalidQuery("give two terminals or --all-pairs");
    }
    std::cout << element_connectivity(inst, find_node(inst, args.pair[0]), find_node(inst, args.pair[1]))
              << "\n";
    return kOk;
  }
  const ConnTable table = conn_table_elements(inst);
  if (args.json) {
    std::cout << io::write_table(table, [&](std::uint32_t id) { return inst.label(id); });
  } else {
    for (const auto& [key, value] : table.entries()) {
      std::cout << inst.label(key.first) << " " << inst.label(key.second) << " " << value << "\n";
    }
  }
  return kOk;
}

struct ReduceArgs {
  std::string file;
  std::optional<std::string> out;
  std::optional<std::string> trace_out;
};

int run_reduce(const ReduceArgs& args) {
  const ElementConnInstance inst = io::parse_element_instance(io::read_file(args.file));
  const auto reduced = reduce_to_stable(inst);
  std::size_t contracted = 0;
  for (const auto& step : reduced.trace.steps) {
    contracted += step.action == ReductionAction::Contracted;
  }
  if (args.out) {
    io::write_file(*args.out, io::write_element_instance(reduced.instance));
  }
  if (args.trace_out) {
    io::write_file(*args.trace_out, io::write_trace(inst, reduced.instance, reduced.trace));
  }
  std::cout << "steps: " << reduced.trace.steps.size() << " (deleted "
            << reduced.trace.steps.size() - contracted << ", contracted " << contracted << ")\n";
  if (!args.out) {
    std::cout << io::write_element_instance(reduced.instance);
  }
  return kOk;
}

struct SplitArgs {
  std::string file;
  std::string vertex;
  std::optional<std::string> out;
  std::optional<std::string> log_out;
  bool certify = false;
  bool no_certify = false;
  bool drop_s = false;
  std::string format;
};

int run_split(const SplitArgs& args) {
  const fs::path input = args.file;
  const io::Format format = resolve_format(input, args.format);
  const Hypergraph h = io::parse_hypergraph(io::read_file(input), format);
  const VertexId s = h.vertex(args.vertex);

  SplitOffOptions options;
  if (args.certify) options.certify = true;
  if (args.no_certify) options.certify = false;
  options.keep_pipeline = true;
  const SplitOffResult result = complete_split_off(h, s, options);

  const Hypergraph written = args.drop_s ? result.h_star.without_isolated_vertex(s) : result.h_star;
  const fs::path out = args.out ? fs::path(*args.out)
                                : with_suffix(input, ".hstar", format == io::Format::Json ? ".json" : ".he");
  const fs::path log_out = args.log_out ? fs::path(*args.log_out) : with_suffix(input, ".log", ".json");
  io::write_file(out, io::write_hypergraph(written, format));
  io::write_file(log_out, io::write_op_log(h, s, result.log));

  std::size_t merges = 0;
  for (const auto& op : result.log) {
    merges += std::holds_alternative<Merge>(op);
  }
  std::cout << "split vertex: " << args.vertex << " (degree " << h.degree(s) << ")\n"
            << "operations: " << result.log.size() << " (merge " << merges << ", trim "
            << result.log.size() - merges << ")\n"
            << "hyperedges: " << h.num_hyperedges() << " -> " << result.h_star.num_hyperedges() << "\n"
            << "stages certified: " << (result.pipeline && result.pipeline->certified ? "yes" : "no") << "\n"
            << "pairs checked: " << result.certificate.before.size() << "\n"
            << "all equal: " << (result.certificate.passed() ? "true" : "false") << "\n"
            << "wrote: " << out.string() << ", " << log_out.string() << "\n";
  return result.certificate.passed() ? kOk : kInternal;
}

struct ReplayArgs {
  std::string file;
  std::string log;
  std::optional<std::string> out;
  std::optional<std::string> vertex;
  std::string format;
};

int run_replay(const ReplayArgs& args) {
  const fs::path input = args.file;
  const io::Format format = resolve_format(input, args.format);
  const Hypergraph h = io::parse_hypergraph(io::read_file(input), format);
  const io::OpLog log = io::parse_op_log(io::read_file(args.log));
  if (args.vertex && *args.vertex != log.split_vertex) {
    throw InvalidQuery("log was recorded for split vertex '" + log.split_vertex + "'");
  }
  io::check_op_log_header(log, h);
  const Hypergraph result = replay(h, h.vertex(log.split_vertex), log.ops);
  emit(args.out ? std::optional<fs::path>(*args.out) : std::nullopt, io::write_hypergraph(result, format));
  return kOk;
}

struct VerifyArgs {
  std::string a;
  std::string b;
  bool conn = false;
  std::vector<std::string> exclude;
  std::string format;
};

int run_verify(const VerifyArgs& args) {
  const Hypergraph a = load_hypergraph(args.a, args.format);
  const Hypergraph b = load_hypergraph(args.b, args.format);
  if (!args.conn) {
    const bool equal = hypergraph_equal(a, b);
    std::cout << (equal ? "equal" : "different") << "\n";
    return equal ? kOk : kMismatch;
  }
  // Compare λ over vertices present in both and not excluded, by name.
  std::vector<std::string> common;
  for (VertexId v : a.vertices()) {
    const auto& name = a.name(v);
    if (b.find_vertex(name) &&
        std::find(args.exclude.begin(), args.exclude.end(), name) == args.exclude.end()) {
      common.push_back(name);
    }
  }
  const ConnTable ta = conn_table_hyper(a);
  const ConnTable tb = conn_table_hyper(b);
  std::size_t mismatches = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < common.size(); ++i) {
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      ++pairs;
      const auto va = ta.at(a.vertex(common[i]).value, a.vertex(common[j]).value);
      const auto vb = tb.at(b.vertex(common[i]).value, b.vertex(common[j]).value);
      if (va != vb) {
        ++mismatches;
        std::cerr << "mismatch " << common[i] << " " << common[j] << ": " << va << " vs " << vb << "\n";
      }
    }
  }
  std::cout << "pairs checked: " << pairs << "\nmismatches: " << mismatches << "\n";
  return mismatches == 0 ? kOk : kMismatch;
}

struct OracleArgs {
  std::string file;
  std::vector<std::string> pair;
  std::string format;
  oracle::GenParams gen;
  bool element = false;
};

int run_oracle_query(const OracleArgs& args) {
  const fs::path input = args.file;
  const std::string text = io::read_file(input);
  if (args.pair.size() != 2) {
    throw InvalidQuery("give two vertices");
  }
  if (resolve_format(input, args.format) == io::Format::Json &&
      text.find("\"terminals\"") != std::string::npos) {
    const ElementConnInstance inst = io::parse_element_instance(text);
    std::cout << oracle::oracle_element_conn(inst, find_node(inst, args.pair[0]),
                                             find_node(inst, args.pair[1]))
              << "\n";
    return kOk;
  }
  const Hypergraph h = io::parse_hypergraph(text, resolve_format(input, args.format));
  std::cout << oracle::oracle_lambda(h, h.vertex(args.pair[0]), h.vertex(args.pair[1])) << "\n";
  return kOk;
}

int run_oracle_gen(const OracleArgs& args) {
  if (args.element) {
    std::cout << io::write_element_instance(oracle::random_element_instance(args.gen));
  } else {
    const auto format = args.format == "text" ? io::Format::Text : io::Format::Json;
    std::cout << io::write_hypergraph(oracle::random_hypergraph(args.gen), format);
  }
  return kOk;
}

int run_export_dot(const std::string& file, const std::string& format, const std::optional<std::string>& out) {
  const Hypergraph h = load_hypergraph(file, format);
  emit(out ? std::optional<fs::path>(*out) : std::nullopt, io::write_incidence_dot(h));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph connectivity and complete splitting-off"};
  app.require_subcommand(1);

  std::string format;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Input format override")->check(CLI::IsMember({"json", "text"}));
  };

  ConnArgs conn;
  auto* conn_cmd = app.add_subcommand("conn", "Hyperedge connectivity λ between vertices");
  conn_cmd->add_option("file", conn.file)->required();
  conn_cmd->add_option("vertices", conn.pair, "Two vertex names")->expected(0, 2);
  conn_cmd->add_flag("--all-pairs", conn.all_pairs);
  conn_cmd->add_flag("--json", conn.json);
  add_format(conn_cmd);

  ConnArgs econn;
  auto* econn_cmd = app.add_subcommand("econn", "Element connectivity κ′ in a graph with terminals");
  econn_cmd->add_option("file", econn.file)->required();
  econn_cmd->add_option("terminals", econn.pair, "Two terminal names")->expected(0, 2);
  econn_cmd->add_flag("--all-pairs", econn.all_pairs);
  econn_cmd->add_flag("--json", econn.json);

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce until non-terminals form a stable set");
  reduce_cmd->add_option("file", reduce.file)->required();
  reduce_cmd->add_option("--out", reduce.out);
  reduce_cmd->add_option("--trace-out", reduce.trace_out);

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Complete splitting-off at a vertex");
  split_cmd->add_option("file", split.file)->required();
  split_cmd->add_option("vertex", split.vertex)->required();
  split_cmd->add_option("--out", split.out, "Where to write H*");
  split_cmd->add_option("--log-out", split.log_out, "Where to write the operation log");
  auto* certify_flag = split_cmd->add_flag("--certify", split.certify, "Check every stage table");
  split_cmd->add_flag("--no-certify", split.no_certify, "Skip stage tables")->excludes(certify_flag);
  split_cmd->add_flag("--drop-s", split.drop_s, "Omit the isolated split vertex from H*");
  add_format(split_cmd);

  ReplayArgs replay_args;
  auto* replay_cmd = app.add_subcommand("replay", "Apply an operation log to a hypergraph");
  replay_cmd->add_option("file", replay_args.file)->required();
  replay_cmd->add_option("log", replay_args.log)->required();
  replay_cmd->add_option("--vertex", replay_args.vertex, "Expected split vertex");
  replay_cmd->add_option("--out", replay_args.out);
  add_format(replay_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare two hypergraphs");
  verify_cmd->add_option("a", verify.a)->required();
  verify_cmd->add_option("b", verify.b)->required();
  verify_cmd->add_flag("--conn", verify.conn, "Compare λ tables over common vertices instead");
  verify_cmd->add_option("--exclude", verify.exclude, "Vertices left out of --conn");
  add_format(verify_cmd);

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force checks and instance generation");
  oracle_cmd->require_subcommand(1);
  auto* query_cmd = oracle_cmd->add_subcommand("query", "λ or κ′ by exhaustive enumeration");
  query_cmd->add_option("file", oracle_args.file)->required();
  query_cmd->add_option("vertices", oracle_args.pair)->expected(2);
  add_format(query_cmd);
  auto* gen_cmd = oracle_cmd->add_subcommand("gen", "Seeded random instance");
  gen_cmd->add_option("--n", oracle_args.gen.n)->required();
  gen_cmd->add_option("--m", oracle_args.gen.m)->required();
  gen_cmd->add_option("--r", oracle_args.gen.r);
  gen_cmd->add_option("--seed", oracle_args.gen.seed)->required();
  gen_cmd->add_flag("--element", oracle_args.element, "Element instance instead of a hypergraph");
  add_format(gen_cmd);

  std::string dot_file;
  std::optional<std::string> dot_out;
  auto* dot_cmd = app.add_subcommand("export-dot", "Incidence graph in DOT");
  dot_cmd->add_option("file", dot_file)->required();
  dot_cmd->add_option("--out", dot_out);
  add_format(dot_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*conn_cmd) {
      conn.format = format;
      return run_conn(conn);
    }
    if (*econn_cmd) return run_econn(econn);
    if (*reduce_cmd) return run_reduce(reduce);
    if (*split_cmd) {
      split.format = format;
      return run_split(split);
    }
    if (*replay_cmd) {
      replay_args.format = format;
      return run_replay(replay_args);
    }
    if (*verify_cmd) {
      verify.format = format;
      return run_verify(verify);
    }
    if (*query_cmd) {
      oracle_args.format = format;
      return run_oracle_query(oracle_args);
    }
    if (*gen_cmd) {
      oracle_args.format = format;
      return run_oracle_gen(oracle_args);
    }
    if (*dot_cmd) return run_export_dot(dot_file, format, dot_out);
  } catch (const ReplayError& e) {
    std::cerr << "error: invalid operation at index " << e.index() << ": " << e.what() << "\n";
    return kBadOperation;
  } catch (const UnknownVertex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownVertex;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
