#include "twodist/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "twodist/error.hpp"
#include "twodist/geometry.hpp"

namespace twodist {

namespace {

Eigen::MatrixXd numeric_cm(const Graph& g, double t, bool bordered) {
  const int n = g.order();
  const int off = bordered ? 1 : 0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + off, n + off);
  if (bordered) {
    m.row(0).setOnes();
    m.col(0).setOnes();
    m(0, 0) = 0.0;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) m(i + off, j + off) = g.adjacent(i, j) ? 1.0 : t;
    }
  }
  return m;
}

void add(OracleReport& r, std::string name, bool pass, std::string detail, double residual = 0.0) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
  if (std::isfinite(residual)) r.worst_residual = std::max(r.worst_residual, residual);
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

// Centre equidistant from all rows (least squares) and the spread of the
// distances to it.
std::pair<double, double> circumsphere_fit(const Eigen::MatrixXd& p) {
  const int n = static_cast<int>(p.rows());
  if (n == 1) return {0.0, 0.0};
  Eigen::MatrixXd a(n - 1, p.cols());
  Eigen::VectorXd rhs(n - 1);
  for (int i = 1; i < n; ++i) {
    a.row(i - 1) = 2 * (p.row(i) - p.row(0));
    rhs(i - 1) = p.row(i).squaredNorm() - p.row(0).squaredNorm();
  }
  const Eigen::VectorXd c = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(a).solve(rhs);
  const Eigen::VectorXd d = (p.rowwise() - c.transpose()).rowwise().norm();
  return {d.mean(), d.maxCoeff() - d.minCoeff()};
}

}  // namespace

bool OracleReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.pass; });
}

const OracleCheck* OracleReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string OracleReport::to_json_line() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["ok"] = ok();
  j["worst_residual"] = worst_residual;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump();
}

OracleReport verify_profile(const Graph& g, const ExactInvariants& p, const Tolerances& tol, std::uint64_t seed) {
  OracleReport r;
  r.subject = to_graph6(g);
  const int n = g.order();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 5000);
  std::uniform_int_distribution<int> den(1, 1000);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    Rational t(num(rng), den(rng));
    t = Rational(1, 2) + t / 1000;  // t in (1/2, 5.5]
    const double td = t.convert_to<double>();
    const double c_num = numeric_cm(g, td, true).determinant();
    const double m_num = numeric_cm(g, td, false).determinant();
    const double c_ex = p.poly.c.evaluate(t).convert_to<double>();
    const double m_ex = p.poly.m.evaluate(t).convert_to<double>();
    worst = std::max(worst, std::abs(c_num - c_ex) / std::max(std::abs(c_ex), 1.0));
    worst = std::max(worst, std::abs(m_num - m_ex) / std::max(std::abs(m_ex), 1.0));
  }
  add(r, "cm_numeric", worst <= 1e-8, "max relative deviation " + fmt(worst), worst);

  PointConfig config;
  if (p.t.tau1) {
    config = realize_at_tau1(g, p, tol);
  } else {
    config = realize_unchecked(g, std::sqrt(2.0), 1.0, tol);
  }
  add(r, "rank_at_tau1", config.rank == p.dim_e,
      "rank " + std::to_string(config.rank) + " vs n - mu - 1 = " + std::to_string(p.dim_e));

  if (p.r_squared.kind != RSquaredKind::Infinite) {
    const auto [radius, spread] = circumsphere_fit(config.points);
    const double lo = p.r_squared.enclosure.lower_double();
    const double hi = p.r_squared.enclosure.upper_double();
    const double r2 = radius * radius;
    const double miss = std::max({0.0, lo - r2, r2 - hi});
    add(r, "spherical_at_tau1", spread <= 1e-7 && miss <= 1e-7,
        "radius " + fmt(radius) + ", spread " + fmt(spread) + ", miss " + fmt(miss), std::max(spread, miss));
    add(r, "r_squared_at_least_half", p.r_squared.enclosure.lo >= Rational(1, 2),
        "lower end " + fmt(lo));
  }

  if (n >= 2) {
    const bool eb = 2 * n <= (p.dim_e + 1) * (p.dim_e + 2);
    const bool sb = n <= p.dim_s * (p.dim_s + 3) / 2;
    add(r, "cardinality_bounds", eb && sb,
        "dim_e " + std::to_string(p.dim_e) + ", dim_s " + std::to_string(p.dim_s));
  }
  return r;
}

ReciprocalRule calibrate_reciprocal_rule(int max_n) {
  std::set<std::pair<int, int>> candidates;
  bool first = true;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const IntPolynomial c = cm_polynomials(g).c;
      const IntPolynomial cc = cm_polynomials(complement(g)).c;
      std::set<std::pair<int, int>> fits;
      for (int e = std::max(c.degree(), 0); e <= n + 2; ++e) {
        const IntPolynomial rev = c.reversed(e);
        if (rev == cc) fits.insert({1, e - n});
        if (-rev == cc) fits.insert({-1, e - n});
      }
      if (first) {
        candidates = fits;
        first = false;
      } else {
        std::set<std::pair<int, int>> keep;
        std::set_intersection(candidates.begin(), candidates.end(), fits.begin(), fits.end(),
                              std::inserter(keep, keep.begin()));
        candidates = keep;
      }
    }
  }
  if (candidates.size() != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "calibrate_reciprocal_rule: " + std::to_string(candidates.size()) + " rules fit");
  }
  return {candidates.begin()->first, candidates.begin()->second};
}

OracleReport reciprocal_check(const Graph& g, ReciprocalRule rule) {
  OracleReport r;
  r.subject = to_graph6(g);
  const int n = g.order();
  const IntPolynomial c = cm_polynomials(g).c;
  const IntPolynomial cc = cm_polynomials(complement(g)).c;
  const int e = n + rule.shift;
  if (e < c.degree()) {
    add(r, "reciprocal", false, "exponent " + std::to_string(e) + " below deg C = " + std::to_string(c.degree()));
    return r;
  }
  IntPolynomial rev = c.reversed(e);
  if (rule.sign < 0) rev = -rev;
  add(r, "reciprocal", rev == cc, "C = " + c.to_string() + ", C(complement) = " + cc.to_string());
  return r;
}

OracleReport probe_f_monotonicity(const Graph& g, int grid) {
  if (grid < 3) throw Error(ErrorKind::InvalidArgument, "probe_f_monotonicity: grid must be at least 3");
  const CmPolynomials poly = cm_polynomials(g);
  const Tau1 t = tau1_mu(poly.c);
  if (!t.tau1) throw Error(ErrorKind::InvalidArgument, "probe_f_monotonicity: tau1 is infinite");
  OracleReport r;
  r.subject = to_graph6(g);
  const double tau1 = t.tau1->to_double();
  std::vector<double> f(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    const double x = 1.0 + (tau1 - 1.0) * (i + 1) / (grid + 1);
    f[static_cast<std::size_t>(i)] = -poly.m.evaluate(x) / (2 * poly.c.evaluate(x));
  }
  int drops = 0;
  int bends = 0;
  for (int i = 1; i < grid; ++i) {
    if (f[i] < f[i - 1] - 1e-9) ++drops;
    if (i + 1 < grid && f[i + 1] - 2 * f[i] + f[i - 1] < -1e-9) ++bends;
  }
  add(r, "monotone", drops == 0, std::to_string(drops) + " decreasing steps");
  add(r, "convex", bends == 0, std::to_string(bends) + " concave second differences");
  return r;
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
  const int n = g.order();
  SrgParameters s{n, n > 0 ? g.degree(0) : 0, -1, -1};
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != s.k) return std::nullopt;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int common = std::popcount(g.neighbors(u) & g.neighbors(v));
      int& slot = g.adjacent(u, v) ? s.lambda : s.mu;
      if (slot < 0) slot = common;
      if (slot != common) return std::nullopt;
    }
  }
  s.lambda = std::max(s.lambda, 0);
  s.mu = std::max(s.mu, 0);
  return s;
}

bool is_primitive_srg(const Graph& g) {
  return g.order() >= 2 && srg_parameters(g).has_value() && is_connected(g) && is_connected(complement(g));
}

}  // namespace twodist
