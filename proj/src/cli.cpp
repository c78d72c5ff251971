#include "twodist/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "twodist/error.hpp"
#include "twodist/geometry.hpp"
#include "twodist/join.hpp"
#include "twodist/oracle.hpp"
#include "twodist/record.hpp"

namespace twodist {

namespace {

constexpr int kCatalogLimit = 8;

struct Config {
  std::string format = "graph6";
  std::string output = "json";
  double tol = Tolerances{}.distance;
  int precision_bits = 40;
  int max_n = kDefaultMaxN;
  int jobs = 1;

  Tolerances tolerances() const {
    Tolerances t;
    t.distance = tol;
    return t;
  }
  RecordOptions record_options() const {
    RecordOptions r;
    r.precision_bits = precision_bits;
    r.tol = tolerances();
    return r;
  }
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::SizeLimit:
      return 3;
    case ErrorKind::Undecidable:
      return 4;
    case ErrorKind::Infeasible:
      return 5;
    case ErrorKind::CompleteGraph:
      return 6;
    default:
      return 1;
  }
}

void load_environment(Config& c) {
  if (const char* v = std::getenv("TWODIST_TOL")) c.tol = std::stod(v);
  if (const char* v = std::getenv("TWODIST_MAX_N")) c.max_n = std::stoi(v);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw Error(ErrorKind::Parse, "no graph in input");
}

Graph read_graph(const std::string& input, const Config& c) {
  if (c.format == "edgelist") return parse_edge_list(read_text(input), c.max_n);
  if (c.format != "graph6") throw Error(ErrorKind::InvalidArgument, "unknown format " + c.format);
  std::error_code ec;
  if (input == "-" || std::filesystem::is_regular_file(input, ec)) {
    return parse_graph6(first_line(read_text(input)), c.max_n);
  }
  return parse_graph6(input, c.max_n);
}

void add_common(CLI::App* cmd, Config& c, bool with_output) {
  cmd->add_option("--format", c.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--tol", c.tol, "Distance tolerance");
  cmd->add_option("--precision-bits", c.precision_bits, "Enclosure width 2^-bits")->check(CLI::Range(8, 4096));
  cmd->add_option("--max-n", c.max_n, "Largest accepted vertex count")->check(CLI::Range(1, kHardMaxN));
  if (with_output) {
    cmd->add_option("--output", c.output, "Output format")->check(CLI::IsMember({"json", "jsonl", "csv"}));
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256));
  }
}

void emit(std::ostream& out, const Json& record, const std::string& output) {
  if (output == "csv") {
    out << csv_row(record) << '\n';
  } else {
    out << record.dump() << '\n';
  }
}

// Runs f(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) f(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

Json analyse_line(const std::string& line, const Config& c) {
  try {
    return analysis_record(parse_graph6(line, c.max_n), c.record_options());
  } catch (const Error& e) {
    return error_record(line, e.what(), exit_code(e.kind()));
  } catch (const std::exception& e) {
    return error_record(line, e.what(), 1);
  }
}

double max_distance_error(const PointConfig& p, const Graph& g) {
  double worst = 0.0;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      const double want = g.adjacent(i, j) ? p.a : p.b;
      worst = std::max(worst, std::abs((p.points.row(i) - p.points.row(j)).norm() - want));
    }
  }
  return worst;
}

// Radius spread of the least-squares circumsphere; zero for spherical sets.
double sphere_spread(const Eigen::MatrixXd& p) {
  const int n = static_cast<int>(p.rows());
  if (n <= 1) return 0.0;
  Eigen::MatrixXd a(n - 1, p.cols());
  Eigen::VectorXd rhs(n - 1);
  for (int i = 1; i < n; ++i) {
    a.row(i - 1) = 2 * (p.row(i) - p.row(0));
    rhs(i - 1) = p.row(i).squaredNorm() - p.row(0).squaredNorm();
  }
  const Eigen::VectorXd c = a.completeOrthogonalDecomposition().solve(rhs);
  const Eigen::VectorXd d = (p.rowwise() - c.transpose()).rowwise().norm();
  return d.maxCoeff() - d.minCoeff();
}

PointConfig embed(const Graph& g, const std::string& model, std::optional<double> b, const Config& c) {
  const Tolerances tol = c.tolerances();
  const ExactInvariants inv = exact_invariants(g, c.precision_bits);
  if (model == "jspherical") {
    if (g.is_complete()) throw Error(ErrorKind::CompleteGraph, "complete graphs have no J-spherical representation");
    return jspherical_embedding(g, inv, tol);
  }
  if (b) return realize(g, inv, *b, 1.0, tol);
  if (model == "euclidean") {
    return inv.t.tau1 ? realize_at_tau1(g, inv, tol) : realize(g, inv, std::sqrt(2.0), 1.0, tol);
  }
  if (inv.r_squared.kind != RSquaredKind::Infinite) return realize_at_tau1(g, inv, tol);
  // dim_s = n - 1: any interior t gives a simplex, which is spherical.
  const double t = inv.t.tau1 ? (1.0 + inv.t.tau1->to_double()) / 2 : 2.0;
  return realize(g, inv, std::sqrt(t), 1.0, tol);
}

int cmd_embed(const Graph& g, const std::string& model, std::optional<double> b, const Config& c, std::ostream& out) {
  const PointConfig p = embed(g, model, b, c);
  if (max_distance_error(p, g) > 1e-7 * std::max(p.b, 1.0)) {
    throw Error(ErrorKind::Geometry, "realized distances do not match the graph");
  }
  if (model != "euclidean" && sphere_spread(p.points) > 1e-7) {
    throw Error(ErrorKind::Infeasible, "configuration at this b is not spherical");
  }
  const Ball ball = min_enclosing_ball(p.points, c.tolerances());
  Json j;
  j["input"] = to_graph6(g);
  j["model"] = model;
  j["n"] = g.order();
  j["a"] = p.a;
  j["b"] = p.b;
  j["rank"] = p.rank;
  j["radius"] = ball.radius;
  j["points"] = points_json(p.points);
  out << j.dump() << '\n';
  return 0;
}

int cmd_decompose(const Graph& g, const Config& c, std::ostream& out) {
  const Tolerances tol = c.tolerances();
  const JoinFactorization f = join_decompose(g, tol);
  Json j;
  j["input"] = to_graph6(g);
  j["n"] = g.order();
  j["k"] = f.k;
  j["factors"] = Json::array();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const JoinFactor& x = f.factors[i];
    Json fj;
    fj["vertices"] = x.vertices;
    fj["size"] = x.graph.order();
    fj["graph6"] = to_graph6(x.graph);
    fj["beta_star"] = x.beta_star ? Json(*x.beta_star) : Json("inf");
    fj["exact"] = x.beta_squared_exact.has_value();
    fj["type"] = g.is_complete() ? Json(nullptr) : Json(static_cast<int>(i) < f.k ? "I" : "II");
    j["factors"].push_back(fj);
  }
  if (!g.is_complete()) {
    const PointConfig w = jspherical_embedding(g, tol);
    const PointFactorization pf = kuperberg_decompose(w, tol);
    Json pj;
    pj["dimension"] = pf.dimension;
    pj["k"] = pf.k;
    pj["factors"] = Json::array();
    for (const auto& x : pf.factors) {
      pj["factors"].push_back(
          {{"indices", x.indices}, {"type", x.type == FactorType::I ? "I" : "II"}, {"boundary", x.boundary}});
    }
    j["points"] = pj;
  }
  out << j.dump() << '\n';
  return 0;
}

int cmd_batch(const std::string& path, const Config& c, std::ostream& out) {
  std::vector<std::string> lines;
  {
    std::istringstream in(read_text(path));
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }
  std::vector<Json> records(lines.size());
  parallel_for(lines.size(), c.jobs, [&](std::size_t i) { records[i] = analyse_line(lines[i], c); });
  if (c.output == "csv") out << csv_header() << '\n';
  for (const auto& r : records) emit(out, r, c.output);
  return 0;
}

struct Filter {
  std::string key;
  // value = a * n / b + offset
  int a = 0;
  int b = 1;
  int offset = 0;

  bool matches(const ExactInvariants& inv) const {
    std::optional<int> v;
    if (key == "dim_e") v = inv.dim_e;
    if (key == "dim_s") v = inv.dim_s;
    if (key == "dim_j") v = inv.dim_j;
    if (!v) return false;
    return b * (*v - offset) == a * inv.n;
  }
};

Filter parse_filter(const std::string& text) {
  static const std::regex re(R"(\s*(dim_e|dim_s|dim_j)\s*=\s*(?:(n)\s*(?:(/)\s*(\d+)|([+-])\s*(\d+))?|(\d+))\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorKind::InvalidArgument, "bad filter: " + text);
  Filter f;
  f.key = m[1];
  if (m[7].matched) {
    f.offset = std::stoi(m[7]);
  } else {
    f.a = 1;
    if (m[3].matched) f.b = std::stoi(m[4]);
    if (m[5].matched) f.offset = (m[5] == "-" ? -1 : 1) * std::stoi(m[6]);
  }
  if (f.b == 0) throw Error(ErrorKind::InvalidArgument, "bad filter: division by zero");
  return f;
}

int cmd_catalog(int min_n, int max_n, const std::string& filter, const Config& c, std::ostream& out) {
  if (max_n > kCatalogLimit) {
    throw Error(ErrorKind::SizeLimit, "catalog is limited to n <= " + std::to_string(kCatalogLimit));
  }
  if (min_n < 1 || min_n > max_n) throw Error(ErrorKind::InvalidArgument, "catalog: need 1 <= min-n <= max-n");
  std::optional<Filter> f;
  if (!filter.empty()) f = parse_filter(filter);
  if (c.output == "csv") out << csv_header() << '\n';
  for (int n = min_n; n <= max_n; ++n) {
    const std::vector<Graph> graphs = enumerate_graphs(n);
    std::vector<std::optional<Json>> records(graphs.size());
    parallel_for(graphs.size(), c.jobs, [&](std::size_t i) {
      if (f && !f->matches(exact_invariants(graphs[i], c.precision_bits))) return;
      records[i] = analysis_record(graphs[i], c.record_options());
    });
    for (const auto& r : records) {
      if (r) emit(out, *r, c.output);
    }
  }
  return 0;
}

int verify_one(const Graph& g, const Config& c, std::ostream& out) {
  const ExactInvariants inv = exact_invariants(g, c.precision_bits);
  const OracleReport a = verify_profile(g, inv, c.tolerances());
  const OracleReport b = reciprocal_check(g);
  out << a.to_json_line() << '\n' << b.to_json_line() << '\n';
  return a.ok() && b.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-distance representation numbers of graphs", "twodist"};
  app.require_subcommand(1);
  Config c;
  load_environment(c);

  std::string input;
  std::string model = "euclidean";
  std::optional<double> b;
  int min_n = 1;
  int catalog_max = 6;
  std::string filter;
  int all_up_to = 0;

  auto* analyze = app.add_subcommand("analyze", "Invariants and representation numbers of one graph");
  analyze->add_option("input", input, "graph6 word, graph6 file, or edge-list file ('-' for stdin)")->required();
  add_common(analyze, c, false);

  auto* embed_cmd = app.add_subcommand("embed", "Coordinates of a two-distance representation");
  embed_cmd->add_option("input", input)->required();
  embed_cmd->add_option("--model", model)->check(CLI::IsMember({"euclidean", "spherical", "jspherical"}));
  embed_cmd->add_option("--b", b, "Long distance (short distance is 1)");
  add_common(embed_cmd, c, false);

  auto* decompose = app.add_subcommand("decompose", "Join factors and the Kuperberg decomposition");
  decompose->add_option("input", input)->required();
  add_common(decompose, c, false);

  auto* batch = app.add_subcommand("batch", "Analyse a file of graph6 lines");
  batch->add_option("path", input)->required();
  add_common(batch, c, true);

  auto* catalog = app.add_subcommand("catalog", "Enumerate small graphs matching a filter");
  catalog->add_option("--max-n", catalog_max, "Largest order (at most 8)");
  catalog->add_option("--min-n", min_n, "Smallest order");
  catalog->add_option("--filter", filter, "dim_e=K, dim_s=n-c, dim_j=n/2, ...");
  catalog->add_option("--output", c.output)->check(CLI::IsMember({"json", "jsonl", "csv"}));
  catalog->add_option("--jobs", c.jobs)->check(CLI::Range(1, 256));
  catalog->add_option("--precision-bits", c.precision_bits)->check(CLI::Range(8, 4096));
  catalog->add_option("--tol", c.tol);

  auto* verify = app.add_subcommand("verify", "Run the oracle cross-checks");
  verify->add_option("input", input);
  verify->add_option("--all-up-to", all_up_to, "Check every graph with at most this many vertices")
      ->check(CLI::Range(1, kCatalogLimit));
  add_common(verify, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (analyze->parsed()) {
      out << analysis_record(read_graph(input, c), c.record_options()).dump() << '\n';
      return 0;
    }
    if (embed_cmd->parsed()) return cmd_embed(read_graph(input, c), model, b, c, out);
    if (decompose->parsed()) return cmd_decompose(read_graph(input, c), c, out);
    if (batch->parsed()) return cmd_batch(input, c, out);
    if (catalog->parsed()) return cmd_catalog(min_n, catalog_max, filter, c, out);
    if (verify->parsed()) {
      if (all_up_to > 0) {
        int code = 0;
        for (int n = 1; n <= all_up_to; ++n) {
          for (const Graph& g : enumerate_graphs(n)) code = std::max(code, verify_one(g, c, out));
        }
        return code;
      }
      if (input.empty()) throw Error(ErrorKind::InvalidArgument, "verify: give an input graph or --all-up-to");
      return verify_one(read_graph(input, c), c, out);
    }
  } catch (const Error& e) {
    err << "twodist: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "twodist: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace twodist
