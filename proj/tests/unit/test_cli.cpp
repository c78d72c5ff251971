#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "twodist/cli.hpp"
#include "twodist/graph.hpp"

using namespace twodist;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;

  std::vector<json> records() const {
    std::vector<json> r;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) r.push_back(json::parse(line));
    }
    return r;
  }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "twodist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string g6(const Graph& g) { return to_graph6(g); }
Graph k(std::vector<int> parts) { return complete_multipartite(MultipartiteSignature(std::move(parts))); }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze the square") {
    const Run r = run({"analyze", g6(k({2, 2}))});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["dim_e"] == 2);
    CHECK(j["dim_s"] == 2);
    CHECK(j["dim_j"] == 2);
    CHECK(j["mu"] == 1);
    CHECK(j["r_squared"] == "1/2");
    CHECK(j["tau1"][0] == j["tau1"][1]);
    CHECK(j["tau1"][0].get<double>() == 2.0);
  }

  TEST_CASE("analyze the pentagon") {
    const json j = json::parse(run({"analyze", g6(Graph::cycle(5))}).out);
    CHECK(j["dim_e"] == 2);
    CHECK(j["dim_s"] == 2);
    CHECK(j["dim_j"] == 4);
    CHECK(j["r_squared"].is_array());
  }

  TEST_CASE("record field order") {
    const auto j = nlohmann::ordered_json::parse(run({"analyze", g6(Graph::path(3))}).out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"input", "n", "dim_e", "dim_s", "dim_j", "tau1", "mu", "r_squared",
                                           "beta_star", "factors"});
  }

  TEST_CASE("edge list files") {
    const auto p = temp_file("twodist_p3.txt", "3\n0 1\n1 2\n");
    const Run r = run({"analyze", "--format", "edgelist", p.string()});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["dim_e"] == 1);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"analyze", "A"}).code == 2);
    CHECK(run({"analyze", "R" + std::string(29, '?')}).code == 3);
    CHECK(run({"analyze", "--max-n", "20", "R" + std::string(29, '?')}).code == 0);
    CHECK(run({"catalog", "--max-n", "9"}).code == 3);
    CHECK(run({"embed", g6(Graph::complete(3)), "--model", "jspherical"}).code == 6);
    CHECK(run({"embed", g6(Graph::path(3)), "--b", "3"}).code == 5);
    CHECK(run({"catalog", "--max-n", "4", "--filter", "dim_x=1"}).code == 1);
  }

  TEST_CASE("embed") {
    const json oct = json::parse(run({"embed", g6(k({2, 2, 2})), "--model", "jspherical"}).out);
    CHECK(oct["points"].size() == 6);
    CHECK(oct["rank"] == 3);
    CHECK(oct["radius"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    const json p3 = json::parse(run({"embed", g6(Graph::path(3)), "--model", "euclidean"}).out);
    CHECK(p3["rank"] == 1);
    CHECK(p3["b"].get<double>() == doctest::Approx(2.0));
  }

  TEST_CASE("decompose") {
    const json j = json::parse(run({"decompose", g6(Graph::path(3))}).out);
    CHECK(j["k"] == 1);
    CHECK(j["factors"].size() == 2);
    CHECK(j["factors"][1]["beta_star"] == "inf");
    CHECK(j["points"]["k"] == 1);
  }

  TEST_CASE("batch keeps input order and reports bad lines") {
    std::string text;
    std::vector<std::string> inputs;
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : enumerate_graphs(n)) inputs.push_back(g6(g));
    }
    inputs.insert(inputs.begin() + 7, "not-graph6");
    for (const auto& s : inputs) text += s + "\n";
    const auto p = temp_file("twodist_batch.g6", text);
    const Run r = run({"batch", p.string(), "--output", "jsonl", "--jobs", "4"});
    REQUIRE(r.code == 0);
    const auto records = r.records();
    REQUIRE(records.size() == inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) CHECK(records[i]["input"] == inputs[i]);
    CHECK(records[7].contains("error"));
    CHECK(records[7]["code"] == 2);
  }

  TEST_CASE("batch csv") {
    const auto p = temp_file("twodist_csv.g6", g6(Graph::cycle(5)) + "\n" + g6(Graph::path(3)) + "\n");
    const Run r = run({"batch", p.string(), "--output", "csv"});
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("input,n,dim_e,dim_s,dim_j", 0) == 0);
    int rows = 0;
    for (std::string line; std::getline(in, line);) rows += line.empty() ? 0 : 1;
    CHECK(rows == 2);
  }

  TEST_CASE("catalog filters") {
    const auto cliques = run({"catalog", "--min-n", "4", "--max-n", "4", "--filter", "dim_e=n-1"}).records();
    CHECK(cliques.size() == 5);
    const auto half = run({"catalog", "--min-n", "6", "--max-n", "6", "--filter", "dim_j=n/2"}).records();
    REQUIRE(half.size() == 1);
    CHECK(isomorphic(parse_graph6(half[0]["input"].get<std::string>()), k({2, 2, 2})));
    const auto planar = run({"catalog", "--max-n", "5", "--filter", "dim_e=2", "--jobs", "3"}).records();
    bool square = false;
    bool pentagon = false;
    for (const auto& r : planar) {
      const Graph g = parse_graph6(r["input"].get<std::string>());
      square = square || isomorphic(g, k({2, 2}));
      pentagon = pentagon || isomorphic(g, Graph::cycle(5));
    }
    CHECK(square);
    CHECK(pentagon);
  }

  TEST_CASE("verify") {
    const Run r = run({"verify", g6(Graph::cycle(5))});
    CHECK(r.code == 0);
    CHECK(r.records().size() == 2);
    CHECK(run({"verify", "--all-up-to", "4"}).code == 0);
  }
}
