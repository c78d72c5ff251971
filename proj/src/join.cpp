#include "twodist/join.hpp"

#include <algorithm>
#include <cmath>

#include "twodist/error.hpp"
#include "twodist/geometry.hpp"
#include "twodist/invariants.hpp"

namespace twodist {

namespace {

JoinFactor make_factor(const Graph& g, std::vector<int> vertices, const Tolerances& tol) {
  JoinFactor f{induced_subgraph(g, vertices), std::move(vertices), std::nullopt, 0.0, std::nullopt};
  if (f.graph.is_complete()) return f;
  const ExactInvariants inv = exact_invariants(f.graph);
  const BetaStar b = beta_star_numeric(f.graph, inv, tol);
  f.beta_star = b.value;
  f.error = b.error;
  if (b.exact) f.beta_squared_exact = inv.t.tau1->scaled(2);
  return f;
}

void sharpen(JoinFactor& f, const Tolerances& tol) {
  if (!f.beta_star || f.beta_squared_exact || f.error <= 1e-12 * *f.beta_star) return;
  Tolerances fine = tol;
  fine.bisection = 1e-13;
  const BetaStar b = beta_star_numeric(f.graph, fine);
  f.beta_star = b.value;
  f.error = b.error;
}

// Whether two finite factors share the same beta*.
bool tied(JoinFactor& a, JoinFactor& b, const Tolerances& tol) {
  if (!a.beta_star || !b.beta_star) return !a.beta_star && !b.beta_star;
  if (a.beta_squared_exact && b.beta_squared_exact) return compare(*a.beta_squared_exact, *b.beta_squared_exact) == 0;
  const double scale = std::max(*a.beta_star, *b.beta_star);
  double diff = std::abs(*a.beta_star - *b.beta_star);
  if (diff > tol.tie * scale && diff <= tol.near_tie * scale) {
    sharpen(a, tol);
    sharpen(b, tol);
    diff = std::abs(*a.beta_star - *b.beta_star);
  }
  return diff <= tol.tie * scale;
}

}  // namespace

JoinFactorization join_decompose(const Graph& g, const Tolerances& tol) {
  JoinFactorization out;
  for (auto& part : complement_component_vertices(g)) out.factors.push_back(make_factor(g, std::move(part), tol));
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const JoinFactor& a, const JoinFactor& b) {
    if (!b.beta_star) return a.beta_star.has_value();
    if (!a.beta_star) return false;
    return *a.beta_star < *b.beta_star;
  });
  out.k = 1;
  for (std::size_t i = 1; i < out.factors.size(); ++i) {
    if (!tied(out.factors[0], out.factors[i], tol)) break;
    ++out.k;
  }
  return out;
}

RepresentationDims dims_via_join(const Graph& g, const JoinFactorization& f) {
  const int n = g.order();
  if (g.is_complete()) return {std::max(n - 1, 0), std::max(n - 1, 0), std::nullopt};
  if (f.factors.size() == 1) {
    const ExactInvariants inv = exact_invariants(g);
    return {inv.dim_e, inv.dim_s, inv.dim_j};
  }
  int dim_j = 0;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const JoinFactor& factor = f.factors[i];
    if (static_cast<int>(i) < f.k) {
      dim_j += *exact_invariants(factor.graph).dim_j;
    } else {
      dim_j += factor.graph.order();
    }
  }
  return {std::min(dim_j, n - 2), dim_j, dim_j};
}

RepresentationDims dims_via_join(const Graph& g, const Tolerances& tol) {
  return dims_via_join(g, join_decompose(g, tol));
}

RepresentationDims multipartite_dims(const MultipartiteSignature& sig) {
  if (sig.part_count() < 2) throw Error(ErrorKind::InvalidArgument, "multipartite_dims: need at least two parts");
  const auto parts = sig.parts();
  const int n = sig.total();
  if (parts.front() == 1) return {n - 1, n - 1, std::nullopt};
  const int k = static_cast<int>(std::count(parts.begin(), parts.end(), parts.front()));
  return {std::min(n - k, n - 2), n - k, n - k};
}

}  // namespace twodist
