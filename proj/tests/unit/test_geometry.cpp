#include <doctest.h>

#include <cmath>
#include <random>

#include "twodist/error.hpp"
#include "twodist/geometry.hpp"

using namespace twodist;

namespace {

Graph k(std::vector<int> parts) { return complete_multipartite(MultipartiteSignature(std::move(parts))); }
Graph kbar(std::vector<int> parts) { return disjoint_cliques(MultipartiteSignature(std::move(parts))); }

double distance_error(const PointConfig& p, const Graph& g) {
  double worst = 0.0;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      const double want = g.adjacent(i, j) ? p.a : p.b;
      worst = std::max(worst, std::abs((p.points.row(i) - p.points.row(j)).norm() - want));
    }
  }
  return worst;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() % 2) e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("unit square") {
    const PointConfig p = realize(k({2, 2}), std::sqrt(2.0));
    CHECK(p.rank == 2);
    CHECK(distance_error(p, k({2, 2})) < 1e-12);
  }

  TEST_CASE("collinear path") {
    const PointConfig p = realize(Graph::path(3), 2.0);
    CHECK(p.rank == 1);
    CHECK(distance_error(p, Graph::path(3)) < 1e-12);
  }

  TEST_CASE("outside the window") {
    CHECK_THROWS_AS(realize(Graph::path(3), 2.5), Error);
    CHECK_THROWS_AS(realize_unchecked(Graph::path(3), 2.5), Error);
    CHECK_THROWS_AS(realize(Graph::path(3), -1.0), Error);
  }

  TEST_CASE("minimal Euclidean representation has rank dim_e") {
    for (int n = 3; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        const ExactInvariants inv = exact_invariants(g);
        if (!inv.t.tau1) continue;
        const PointConfig p = realize_at_tau1(g, inv);
        CAPTURE(to_graph6(g));
        CHECK(p.rank == inv.dim_e);
        CHECK(distance_error(p, g) < 1e-6);
      }
    }
  }

  TEST_CASE("enclosing ball of simple sets") {
    Eigen::MatrixXd tri(3, 2);
    tri << 1, 0, -1, 0, 0, 1;
    const Ball b = min_enclosing_ball(tri);
    CHECK(b.radius == doctest::Approx(1.0));
    CHECK(b.center.norm() < 1e-10);
    // An obtuse triangle: the ball is spanned by the long side.
    Eigen::MatrixXd obtuse(3, 2);
    obtuse << -1, 0, 1, 0, 0, 0.2;
    const Ball c = min_enclosing_ball(obtuse);
    CHECK(c.radius == doctest::Approx(1.0));
    CHECK(c.support == std::vector<int>{0, 1});
    CHECK(c.gap < 1e-12);
  }

  TEST_CASE("enclosing ball against random point clouds") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 12);
      const int d = 1 + static_cast<int>(rng() % 5);
      Eigen::MatrixXd p(n, d);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) p(i, j) = normal(rng);
      }
      const Ball b = min_enclosing_ball(p);
      // Every point is enclosed, the support lies on the sphere and the
      // centre is the weighted mean of the support.
      const Eigen::VectorXd dist = (p.rowwise() - b.center.transpose()).rowwise().norm();
      CHECK(dist.maxCoeff() <= b.radius + 1e-9);
      for (int s : b.support) CHECK(dist(s) == doctest::Approx(b.radius).epsilon(1e-7));
      CHECK((p.transpose() * b.weights - b.center).norm() < 1e-8);
      CHECK(b.weights.sum() == doctest::Approx(1.0));
      CHECK(b.weights.minCoeff() >= -1e-12);
    }
  }

  TEST_CASE("min norm point of a hull") {
    Eigen::MatrixXd seg(2, 2);
    seg << -1, 1, 1, 1;
    const Eigen::VectorXd w = min_norm_hull_weights(seg);
    CHECK(w(0) == doctest::Approx(0.5));
    CHECK(w(1) == doctest::Approx(0.5));
  }

  TEST_CASE("Phi at the regular simplex and worked values") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
      const int n = g.order();
      CHECK(phi(g, std::sqrt(2.0)) == doctest::Approx(std::sqrt((n - 1.0) / n)).epsilon(1e-12));
    }
    CHECK(phi(Graph::path(3), 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phi(Graph::empty(3), std::sqrt(3.0)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("solve_phi inverts Phi") {
    CHECK(solve_phi(Graph::empty(3), 1.0).x == doctest::Approx(std::sqrt(3.0)).epsilon(1e-11));
    CHECK(solve_phi(k({2, 2}), 1.0).x == doctest::Approx(2.0).epsilon(1e-11));
    for (int n = 2; n <= 7; ++n) {
      const PhiRoot r = solve_phi(Graph::empty(n), 1.0);
      CHECK(r.x == doctest::Approx(std::sqrt(2.0 * n / (n - 1))).epsilon(1e-11));
    }
    CHECK_THROWS_AS(solve_phi(Graph::path(3), 0.5), Error);
  }

  TEST_CASE("beta star examples") {
    CHECK(beta_star_numeric(kbar({2, 2})).value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-11));
    CHECK(beta_star_numeric(kbar({4, 4})).value == doctest::Approx(std::sqrt(2.5)).epsilon(1e-11));
    CHECK(beta_star_numeric(Graph::path(3)).value == doctest::Approx(2.0).epsilon(1e-11));
    const BetaStar sq = beta_star_numeric(k({2, 2}));
    CHECK(sq.exact);
    CHECK(sq.value == doctest::Approx(2.0));
  }

  TEST_CASE("J-spherical embeddings") {
    const PointConfig oct = jspherical_embedding(k({2, 2, 2}));
    CHECK(oct.rank == 3);
    CHECK(distance_error(oct, k({2, 2, 2})) < 1e-9);
    for (int i = 0; i < 6; ++i) CHECK(oct.points.row(i).norm() == doctest::Approx(1.0).epsilon(1e-9));
    const PointConfig c5 = jspherical_embedding(Graph::cycle(5));
    CHECK(c5.rank == 4);
    CHECK(c5.points.rows() == 5);
    CHECK(distance_error(c5, Graph::cycle(5)) < 1e-9);
    CHECK_THROWS_AS(jspherical_embedding(Graph::complete(3)), Error);
  }

  TEST_CASE("decomposition of the right isosceles triangle") {
    PointConfig s;
    s.points.resize(3, 2);
    s.points << 1, 0, -1, 0, 0, 1;
    s.a = std::sqrt(2.0);
    s.b = 2.0;
    s.rank = 2;
    const PointFactorization f = kuperberg_decompose(s);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.k == 1);
    CHECK(f.dimension == 2);
    CHECK(f.factors[0].indices == std::vector<int>{0, 1});
    CHECK(f.factors[0].type == FactorType::I);
    CHECK(f.factors[1].indices == std::vector<int>{2});
    CHECK(f.factors[1].type == FactorType::II);
  }

  TEST_CASE("octahedron splits into three antipodal pairs") {
    const PointFactorization f = kuperberg_decompose(jspherical_embedding(k({2, 2, 2})));
    CHECK(f.factors.size() == 3);
    CHECK(f.k == 3);
    for (const auto& x : f.factors) {
      CHECK(x.indices.size() == 2);
      CHECK(x.type == FactorType::I);
    }
  }

  TEST_CASE("short distance graph recovers the input") {
    for (const Graph& g : enumerate_graphs(5)) {
      if (g.is_complete()) continue;
      const PointConfig p = jspherical_embedding(g);
      CHECK(short_distance_graph(p.points, 1e-7) == g);
    }
  }
}
