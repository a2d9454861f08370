#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "corpus.hpp"
#include "sepmc/cli.hpp"
#include "sepmc/generators.hpp"
#include "sepmc/io.hpp"
#include "sepmc/recognition.hpp"

using namespace sepmc;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& content)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream stream(path, std::ios::binary);
    stream << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

int line_count(const std::string& text) {
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("minseps command") {
  CliResult r = run({"minseps", "--family", "prism:3", "--algo", "brute"});
  CHECK(r.code == 0);
  CHECK(line_count(r.out) == 6);

  CliResult js = run({"minseps", "--family", "cycle:4", "--json"});
  CHECK(js.code == 0);
  CHECK(js.out == "[[0,2],[1,3]]\n");

  CliResult empty = run({"minseps", "--family", "complete:4"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
}

TEST_CASE("pmcs command") {
  CliResult r = run({"pmcs", "--family", "path:4", "--algo", "brute"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1\n1 2\n2 3\n");
  CliResult recipe = run({"pmcs", "--family", "path:4", "--algo", "generic"});
  CHECK(recipe.out == r.out);
}

TEST_CASE("the three separator algorithms agree byte for byte") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : testsupport::nonisomorphic_graphs(n)) {
      if (!is_pt_free(g, 6)) continue;
      TempFile f("sepmc_cli_corpus.edges", to_edge_list(g));
      CliResult brute = run({"minseps", "--input", f.str(), "--algo", "brute"});
      CliResult generic = run({"minseps", "--input", f.str(), "--algo", "generic"});
      CliResult p6free = run({"minseps", "--input", f.str(), "--algo", "p6free"});
      REQUIRE(brute.code == 0);
      CHECK(brute.out == generic.out);
      CHECK(brute.out == p6free.out);
      CliResult pmc_brute = run({"pmcs", "--input", f.str(), "--algo", "brute"});
      CliResult pmc_p6free = run({"pmcs", "--input", f.str(), "--algo", "p6free"});
      CHECK(pmc_brute.out == pmc_p6free.out);
    }
}

TEST_CASE("modules command") {
  CliResult strong = run({"modules", "--family", "path:4"});
  CHECK(strong.code == 0);
  CHECK(line_count(strong.out) == 5);  // four singletons plus everything
  CliResult connected = run({"modules", "--family", "path:4", "--kind", "connected"});
  CHECK(connected.code == 0);
  CHECK(line_count(connected.out) == 5);
  CliResult bogus = run({"modules", "--family", "path:4", "--kind", "weak"});
  CHECK(bogus.code == 2);
}

TEST_CASE("verify-bounds command") {
  CliResult text = run({"verify-bounds", "--family", "path:4"});
  CHECK(text.code == 0);
  CHECK(text.out.find("MINSEP_MAIN") != std::string::npos);
  CHECK(text.out.find("FAIL") == std::string::npos);

  CliResult js = run({"verify-bounds", "--family", "edgeless:5", "--json"});
  CHECK(js.code == 0);
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["a"] == 0);
  CHECK(doc["b"] == 5);
  for (const auto& check : doc["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("mwis command") {
  auto doc = nlohmann::json::parse(run({"mwis", "--family", "path:4", "--json"}).out);
  CHECK(doc["weight"] == 2);
  CHECK(doc["members"].size() == 2);

  CliResult brute = run({"mwis", "--family", "cycle:5", "--algo", "brute"});
  CHECK(brute.code == 0);
  CHECK(brute.out.find("weight 2\n") == 0);

  TempFile weights("sepmc_cli_weights.txt", "5\n1\n1\n1\n");
  CliResult weighted =
      run({"mwis", "--family", "complete:4", "--weights", weights.str(), "--json"});
  auto wdoc = nlohmann::json::parse(weighted.out);
  CHECK(wdoc["weight"] == 5);
  CHECK(wdoc["members"] == nlohmann::json::array({0}));
}

TEST_CASE("mwis weight file validation") {
  TempFile extra("sepmc_cli_w_extra.txt", "1\n1\n1\n1\n1\n");
  CHECK(run({"mwis", "--family", "path:4", "--weights", extra.str()}).code == 2);
  TempFile missing("sepmc_cli_w_missing.txt", "1\n1\n");
  CHECK(run({"mwis", "--family", "path:4", "--weights", missing.str()}).code == 2);
  TempFile garbage("sepmc_cli_w_garbage.txt", "1\nx\n1\n1\n");
  CliResult r = run({"mwis", "--family", "path:4", "--weights", garbage.str()});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("check-free command") {
  CliResult free_run = run({"check-free", "--family", "prism:4", "--pt", "5"});
  CHECK(free_run.code == 0);
  CHECK(free_run.out == "FREE\n");

  CliResult witness = run({"check-free", "--family", "path:6", "--pt", "6"});
  CHECK(witness.code == 1);
  CHECK(witness.out == "0 1 2 3 4 5\n");

  auto doc = nlohmann::json::parse(run({"check-free", "--family", "path:6", "--pt", "6",
                                        "--json"}).out);
  CHECK(doc["free"] == false);
  CHECK(doc["path"] == nlohmann::json::array({0, 1, 2, 3, 4, 5}));
  auto free_doc = nlohmann::json::parse(run({"check-free", "--family", "cycle:6", "--pt", "6",
                                             "--json"}).out);
  CHECK(free_doc["free"] == true);
  CHECK(free_doc.count("path") == 0);
}

TEST_CASE("generate command") {
  CliResult edges = run({"generate", "--family", "prism:3"});
  CHECK(edges.code == 0);
  CHECK(edges.out == to_edge_list(prism(3)));
  CHECK(parse_edge_list(edges.out) == prism(3));

  CliResult g6 = run({"generate", "--family", "gnp:8:0.4:42", "--format", "graph6"});
  CHECK(g6.code == 0);
  CHECK(g6.out == to_graph6(gnp(8, 0.4, 42)) + "\n");

  // --seed fills in only when the spec omits one
  CliResult seeded = run({"generate", "--family", "gnp:8:0.4", "--seed", "42"});
  CHECK(seeded.out == run({"generate", "--family", "gnp:8:0.4:42"}).out);
  CliResult spec_wins = run({"generate", "--family", "gnp:8:0.4:7", "--seed", "42"});
  CHECK(spec_wins.out == run({"generate", "--family", "gnp:8:0.4:7"}).out);

  auto doc = nlohmann::json::parse(run({"generate", "--family", "path:3", "--json"}).out);
  CHECK(doc["n"] == 3);
  CHECK(doc["edges"] == nlohmann::json::array({{0, 1}, {1, 2}}));
}

TEST_CASE("graph input handling") {
  TempFile k2("sepmc_cli_k2.edges", "2 1\n0 1\n");
  CHECK(run({"minseps", "--input", k2.str()}).code == 0);

  TempFile c5("sepmc_cli_c5.g6", to_graph6(cycle(5)) + "\n");
  CliResult from_g6 = run({"minseps", "--input", c5.str(), "--format", "graph6"});
  CHECK(from_g6.code == 0);
  CHECK(line_count(from_g6.out) == 5);

  TempFile bad("sepmc_cli_bad.edges", "2 1\n0 5\n");
  CliResult malformed = run({"minseps", "--input", bad.str()});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("error:") != std::string::npos);
}

TEST_CASE("exit codes on bad invocations") {
  CHECK(run({"frobnicate"}).code == 2);                                // unknown command
  CHECK(run({}).code == 2);                                           // no command
  CHECK(run({"minseps", "--bogus"}).code == 2);                       // unknown flag
  CHECK(run({"minseps"}).code == 2);                                  // no graph source
  CHECK(run({"minseps", "--input", "/nonexistent.edges"}).code == 2); // missing file
  CHECK(run({"minseps", "--family", "frob:3"}).code == 2);            // unknown family
  CHECK(run({"minseps", "--family", "path:25", "--algo", "brute"}).code == 2);  // oracle limit
  CHECK(run({"minseps", "--family", "path:4", "--algo", "magic"}).code == 2);
  CHECK(run({"generate"}).code == 2);                                 // --family required
  CHECK(run({"check-free", "--family", "path:4", "--pt", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--help"}).out.find("minseps") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  std::vector<std::string> args{"verify-bounds", "--family", "gnp:9:0.3:5", "--json"};
  CliResult first = run(args);
  CliResult second = run(args);
  CHECK(first.code == second.code);
  CHECK(first.out == second.out);
}
