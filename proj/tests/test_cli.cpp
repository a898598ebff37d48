#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gkm/catalog.hpp"
#include "gkm/checks/acceptance.hpp"
#include "gkm/cli.hpp"
#include "gkm/connection.hpp"
#include "gkm/moment.hpp"
#include "gkm/parse.hpp"

using namespace gkm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gkm_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("example8 has no signed connection, both ways") {
  CHECK_FALSE(exists_signed_structure_with_connection(catalog("example8").graph).witness);
  const Run r = invoke({"connections", "builtin:example8", "--signed"});
  CHECK(r.code == cli::kNegative);
  CHECK(r.out.find("no signed structure admits a connection") != std::string::npos);
}

TEST_CASE("example8 has no realization, both ways") {
  CHECK_FALSE(realize_any_signs(catalog("example8").graph).first);
  const Run r = invoke({"realize", "builtin:example8", "--any-signs", "--json"});
  CHECK(r.code == cli::kNegative);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["feasible"] == false);
}

TEST_CASE("x-rays of CP^1 x CP^3 and Y agree, both ways") {
  const Run r = invoke({"xray", "builtin:cp1xcp3", "--compare", "builtin:hamiltonian_y", "--normalized"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "x-rays coincide\n");
}

TEST_CASE("files and builtins give the same report") {
  const CatalogEntry e = catalog("cp2");
  const std::string path = write_temp("cp2.gkm", serialize_graph(e.graph, e.signs));
  const Run a = invoke({"integrate", path, "--expr", "c1^2", "--json"});
  const Run b = invoke({"integrate", "builtin:cp2", "--expr", "c1^2", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["results"]["value"] == "9");
  CHECK(j["input_digest"].get<std::string>().size() == 16);
}

TEST_CASE("reports are deterministic and ordered") {
  const Run a = invoke({"strata", "builtin:example8", "--json"});
  const Run b = invoke({"strata", "builtin:example8", "--json"});
  CHECK(a.out == b.out);
  const auto j = nlohmann::ordered_json::parse(a.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "input_digest", "exit_code", "results", "violations",
                                         "warnings"});
  CHECK(j["results"]["elements"].size() == 22);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"validate", "builtin:cp3"}).code == cli::kOk);
  CHECK(invoke({"betti", "/nonexistent/file.gkm"}).code == cli::kInputError);
  CHECK(invoke({"integrate", "builtin:cp2", "--expr", "c1 +"}).code == cli::kInputError);
  CHECK(invoke({"frobnicate"}).code == cli::kInputError);
  CHECK(invoke({"iso", "builtin:example8", "builtin:cp3"}).code == cli::kNegative);
  CHECK(invoke({"iso", "builtin:example8", "builtin:product_s2s6"}).code == cli::kOk);
  CHECK(invoke({"--help"}).code == cli::kOk);

  const std::string bad = write_temp("bad.gkm", "rank 2\nvertex a\nvertex b\nedge a b (1,0)\nedge a b (2,0)\n");
  CHECK(invoke({"validate", bad}).code == cli::kNegative);

  // A triangle with labels of a single circle: the graded ranks do not sum
  // to the vertex count.
  const std::string tri = write_temp(
      "tri.gkm", "rank 1\nvertex a\nvertex b\nvertex c\nedge a b (1)\nedge b c (1)\nedge a c (1)\nedge a b (1)\n"
                 "edge b c (1)\nedge a c (1)\n");
  const int code = invoke({"betti", tri}).code;
  CHECK((code == cli::kInconsistent || code == cli::kInputError));
}

TEST_CASE("digest") {
  CHECK(cli::digest("") == "cbf29ce484222325");
  CHECK(cli::digest("a") == "af63dc4c8601ec8c");
}

}
