#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "twodist/error.hpp"
#include "twodist/graph.hpp"

using namespace twodist;

namespace {

// Straightforward graph6 writer used as a reference for the library encoder.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string s(1, static_cast<char>(63 + n));
  int bits = 0;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        s.push_back(static_cast<char>(63 + value));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits > 0) s.push_back(static_cast<char>(63 + (value << (6 - bits))));
  return s;
}

Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("graph6 of a single edge") {
    const Graph g = parse_graph6("A_");
    CHECK(g.order() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(to_graph6(g) == "A_");
    CHECK(to_graph6(Graph::complete(4)) == "C~");
  }

  TEST_CASE("graph6 round trip against a reference encoder") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const Graph g = random_graph(rng, n);
      const std::string word = to_graph6(g);
      CHECK(word == reference_graph6(g));
      CHECK(parse_graph6(word) == g);
    }
  }

  TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), Error);
    CHECK_THROWS_AS(parse_graph6("A"), Error);
    CHECK_THROWS_AS(parse_graph6("A_x"), Error);
    try {
      parse_graph6("R" + std::string(29, '?'), 16);
      FAIL("expected a size error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SizeLimit);
    }
  }

  TEST_CASE("edge list input") {
    const Graph g = parse_edge_list("# path\n3\n0 1\n1 2\n");
    CHECK(g == Graph::path(3));
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), Error);
  }

  TEST_CASE("pentagon is self-complementary") {
    const Graph c5 = Graph::cycle(5);
    const Graph c = complement(c5);
    CHECK_FALSE(c == c5);
    CHECK(isomorphic(c, c5));
    // Explicit map i -> 2i mod 5 takes C5 to its complement.
    const std::vector<int> perm{0, 2, 4, 1, 3};
    CHECK(relabel(c5, perm) == c);
  }

  TEST_CASE("complement of the path on three vertices") {
    const auto parts = complement_components(Graph::path(3));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == Graph::empty(2));
    CHECK(parts[1] == Graph::empty(1));
  }

  TEST_CASE("join is the complement of the disjoint union of complements") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 5));
      const Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 5));
      CHECK(join(a, b) == complement(disjoint_union(complement(a), complement(b))));
      CHECK(complement(complement(a)) == a);
    }
  }

  TEST_CASE("multipartite and disjoint cliques") {
    const MultipartiteSignature sig({2, 2, 2});
    const Graph oct = complete_multipartite(sig);
    CHECK(oct.edge_count() == 12);
    CHECK(is_complete_multipartite(oct));
    CHECK_FALSE(is_disjoint_clique_union(oct));
    CHECK(complement(oct) == disjoint_cliques(sig));
    CHECK(is_disjoint_clique_union(disjoint_cliques(MultipartiteSignature({3, 1}))));
    CHECK_FALSE(is_complete_multipartite(Graph::path(4)));
    CHECK(is_complete_multipartite(Graph::path(3)));
  }

  TEST_CASE("components") {
    const Graph g = disjoint_union(Graph::path(3), Graph::complete(2));
    const auto cc = connected_components(g);
    REQUIRE(cc.size() == 2);
    CHECK(cc[0] == std::vector<int>{0, 1, 2});
    CHECK(cc[1] == std::vector<int>{3, 4});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(Graph::cycle(6)));
  }

  TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 9);
      const Graph g = random_graph(rng, n, 0.3 + 0.4 * static_cast<double>(rng() % 2));
      const Graph h = relabel(g, random_perm(rng, n));
      CHECK(canonical_form(g) == canonical_form(h));
      CHECK(isomorphic(canonical_form(g), g));
    }
    CHECK_FALSE(isomorphic(Graph::path(4), parse_graph6("Cr")));
  }

  TEST_CASE("enumeration counts") {
    const int expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(n);
      CHECK(enumerate_graphs(n).size() == static_cast<std::size_t>(expected[n - 1]));
    }
  }

  TEST_CASE("enumeration is deterministic and duplicate free") {
    const auto a = enumerate_graphs(6);
    const auto b = enumerate_graphs(6);
    CHECK(a == b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(canonical_form(a[i]) == canonical_form(a[j]));
    }
  }
}
