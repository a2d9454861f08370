#include "sepmc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepmc/bounds.hpp"
#include "sepmc/errors.hpp"
#include "sepmc/generators.hpp"
#include "sepmc/graph.hpp"
#include "sepmc/io.hpp"
#include "sepmc/modular.hpp"
#include "sepmc/mwis.hpp"
#include "sepmc/pmc.hpp"
#include "sepmc/recognition.hpp"
#include "sepmc/separators.hpp"

namespace sepmc {

namespace {

using nlohmann::json;

struct CliState {
  std::string input_path;
  std::string family_spec;
  std::string format = "edgelist";
  std::string algo = "generic";
  int k = -1;  // -1: use the exact clique number
  std::string weights_path;
  bool as_json = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int pt = 6;
  std::string kind = "strong";
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const CliState& st) {
  if (!st.family_spec.empty()) {
    GenSpec spec = parse_gen_spec(st.family_spec);
    if (spec.family == Family::Gnp && !spec.seed_in_spec && st.seed_given) spec.seed = st.seed;
    return make_graph(spec);
  }
  if (st.input_path.empty())
    throw std::runtime_error("no graph given: pass --input PATH or --family SPEC");
  const std::string text = slurp(st.input_path);
  if (st.format == "graph6") return parse_graph6(text);
  return parse_edge_list(text);
}

std::vector<long long> load_weights(const CliState& st, int n) {
  std::vector<long long> weights(n, 1);
  if (st.weights_path.empty()) return weights;
  std::istringstream in(slurp(st.weights_path));
  std::string line;
  int lineno = 0, v = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long long w;
    if (!(ls >> w)) throw ParseError("expected one integer weight", lineno);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing token '" + rest + "'", lineno);
    if (v >= n) throw ParseError("more weights than vertices", lineno);
    weights[v++] = w;
  }
  if (v != n)
    throw std::runtime_error("weight file has " + std::to_string(v) + " entries for " +
                             std::to_string(n) + " vertices");
  return weights;
}

int effective_k(const CliState& st, const Graph& g) {
  return st.k >= 0 ? st.k : clique_number(g);
}

void print_sets(const std::vector<VertexSet>& sets, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = json::array();
    for (const auto& s : sets) doc.push_back(s);
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& s : sets) {
    for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

std::vector<SeparatorRecord> run_minsep_algo(const CliState& st, const Graph& g) {
  if (st.algo == "brute") return enumerate_minseps_brute(g);
  if (st.algo == "p6free") return enumerate_minseps_p6free(g, effective_k(st, g));
  return enumerate_minseps_generic(g);
}

int cmd_minseps(const CliState& st, std::ostream& out) {
  Graph g = load_graph(st);
  std::vector<VertexSet> sets;
  for (const auto& rec : run_minsep_algo(st, g)) sets.push_back(rec.separator);
  print_sets(sets, st.as_json, out);
  return 0;
}

int cmd_pmcs(const CliState& st, std::ostream& out) {
  Graph g = load_graph(st);
  std::vector<VertexSet> sets;
  if (st.algo == "brute") {
    for (const auto& rec : enumerate_pmcs_brute(g)) sets.push_back(rec.members);
  } else {
    for (const auto& rec : enumerate_pmcs_from_minseps(g, run_minsep_algo(st, g)))
      sets.push_back(rec.members);
  }
  print_sets(sets, st.as_json, out);
  return 0;
}

int cmd_modules(const CliState& st, std::ostream& out) {
  Graph g = load_graph(st);
  std::vector<VertexSet> sets;
  if (st.kind == "connected")
    sets = connected_modules(g, effective_k(st, g));
  else
    sets = strong_modules(g);
  print_sets(sets, st.as_json, out);
  return 0;
}

int cmd_verify_bounds(const CliState& st, std::ostream& out) {
  Graph g = load_graph(st);
  BoundsReport report = verify_bounds(g);
  out << (st.as_json ? to_json(report) : to_text(report));
  return required_checks_pass(report) ? 0 : 1;
}

int cmd_mwis(const CliState& st, std::ostream& out) {
  Graph g = load_graph(st);
  WeightedGraph wg{g, load_weights(st, g.vertex_count())};
  MwisResult result;
  if (st.algo == "brute") {
    result = mwis_brute(wg);
  } else {
    auto minseps = st.algo == "p6free" ? enumerate_minseps_p6free(g, effective_k(st, g))
                                       : enumerate_minseps_generic(g);
    result = mwis_pmc(wg, enumerate_pmcs_from_minseps(g, minseps), minseps);
  }
  if (st.as_json) {
    json doc;
    doc["weight"] = result.weight;
    doc["members"] = result.members;
    out << doc.dump() << '\n';
  } else {
    out << "weight " << result.weight << '\n';
    out << "members";
    for (int v : result.members) out << ' ' << v;
    out << '\n';
  }
  return 0;
}

int cmd_check_free(const CliState& st, std::ostream& out) {
  Graph g = load_graph(st);
  auto witness = find_induced_path(g, st.pt);
  if (st.as_json) {
    json doc;
    doc["free"] = !witness.has_value();
    if (witness) doc["path"] = *witness;
    out << doc.dump() << '\n';
  } else if (witness) {
    for (size_t i = 0; i < witness->size(); ++i) out << (i ? " " : "") << (*witness)[i];
    out << '\n';
  } else {
    out << "FREE\n";
  }
  return witness ? 1 : 0;
}

int cmd_generate(const CliState& st, std::ostream& out) {
  if (st.family_spec.empty()) throw std::runtime_error("generate requires --family SPEC");
  Graph g = load_graph(st);
  if (st.as_json) {
    json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = json::array();
    for (auto [u, v] : g.edges()) doc["edges"].push_back(json::array({u, v}));
    out << doc.dump() << '\n';
  } else if (st.format == "graph6") {
    out << to_graph6(g) << '\n';
  } else {
    out << to_edge_list(g);
  }
  return 0;
}

void add_io_options(CLI::App* cmd, CliState& st, bool input_graph = true) {
  if (input_graph) {
    cmd->add_option("--input", st.input_path, "Read the graph from a file");
    cmd->add_option("--family", st.family_spec,
                    "Generate the graph (prism:N, path:N, cycle:N, complete:N, edgeless:N, "
                    "gnp:N:P[:SEED])");
  }
  cmd->add_option("--format", st.format, "Graph file format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_flag("--json", st.as_json, "Emit JSON instead of text");
  cmd->add_option("--seed", st.seed, "Seed for gnp specs that omit one")
      ->each([&st](const std::string&) { st.seed_given = true; });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal separators, potential maximal cliques and MWIS for P6-free graphs"};
  app.require_subcommand(1);
  CliState st;

  auto* minseps = app.add_subcommand("minseps", "List all minimal separators");
  add_io_options(minseps, st);
  minseps->add_option("--algo", st.algo, "Enumeration algorithm")
      ->check(CLI::IsMember({"brute", "generic", "p6free"}));
  minseps->add_option("--k", st.k, "Clique-number bound for --algo p6free (default: exact)");

  auto* pmcs = app.add_subcommand("pmcs", "List all potential maximal cliques");
  add_io_options(pmcs, st);
  pmcs->add_option("--algo", st.algo, "Minimal-separator source feeding the PMC recipe")
      ->check(CLI::IsMember({"brute", "generic", "p6free"}));
  pmcs->add_option("--k", st.k, "Clique-number bound for --algo p6free (default: exact)");

  auto* modules = app.add_subcommand("modules", "List strong or connected modules");
  add_io_options(modules, st);
  modules->add_option("--kind", st.kind, "Which modules to list")
      ->check(CLI::IsMember({"strong", "connected"}));
  modules->add_option("--k", st.k, "Clique-number bound for --kind connected (default: exact)");

  auto* verify = app.add_subcommand("verify-bounds", "Count structures and check every bound");
  add_io_options(verify, st);

  auto* mwis = app.add_subcommand("mwis", "Maximum weight independent set");
  add_io_options(mwis, st);
  mwis->add_option("--algo", st.algo, "brute oracle, or the PMC pipeline over generic/p6free")
      ->check(CLI::IsMember({"brute", "generic", "p6free"}));
  mwis->add_option("--k", st.k, "Clique-number bound for --algo p6free (default: exact)");
  mwis->add_option("--weights", st.weights_path, "Weight file: one integer per line, vertex order");

  auto* check = app.add_subcommand("check-free", "Report an induced P_t or FREE");
  add_io_options(check, st);
  check->add_option("--pt", st.pt, "Forbidden induced path length (vertices)")
      ->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "Emit a generator-family graph");
  add_io_options(generate, st, false);
  generate->add_option("--family", st.family_spec, "Family descriptor")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (minseps->parsed()) return cmd_minseps(st, out);
    if (pmcs->parsed()) return cmd_pmcs(st, out);
    if (modules->parsed()) return cmd_modules(st, out);
    if (verify->parsed()) return cmd_verify_bounds(st, out);
    if (mwis->parsed()) return cmd_mwis(st, out);
    if (check->parsed()) return cmd_check_free(st, out);
    if (generate->parsed()) return cmd_generate(st, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace sepmc
