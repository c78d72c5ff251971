#pragma once

#include <optional>
#include <vector>

#include "twodist/algebraic.hpp"
#include "twodist/graph.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

struct JoinFactor {
  Graph graph;
  // Vertices of the factor in the input graph.
  std::vector<int> vertices;
  // Empty for complete factors (beta* = infinity).
  std::optional<double> beta_star;
  double error = 0.0;
  // beta*^2 = 2 tau1 exactly, when known.
  std::optional<AlgebraicReal> beta_squared_exact;
};

/// Join-prime factors sorted by beta*, the k minimal ones first.
struct JoinFactorization {
  std::vector<JoinFactor> factors;
  int k = 0;
};

JoinFactorization join_decompose(const Graph& g, const Tolerances& tol = {});

struct RepresentationDims {
  int dim_e = 0;
  int dim_s = 0;
  // Empty for complete graphs.
  std::optional<int> dim_j;

  friend bool operator==(const RepresentationDims&, const RepresentationDims&) = default;
};

/// Representation numbers from the join structure; a single factor falls
/// back to the exact invariants. Applies the join formula as stated:
/// dim_j = sum of dim_j over the k minimal factors plus the orders of the
/// rest, dim_s = dim_j, dim_e = min(dim_j, n - 2). dim_j and beta* agree
/// with the direct computation; for k = 1 the dim_s and dim_e values can
/// overstate the truth (the gem K1 + P4 has dim_s 3, not 4), so use
/// exact_invariants when those two numbers matter.
RepresentationDims dims_via_join(const Graph& g, const Tolerances& tol = {});
RepresentationDims dims_via_join(const Graph& g, const JoinFactorization& f);

/// Closed form for complete multipartite graphs; requires at least two parts.
RepresentationDims multipartite_dims(const MultipartiteSignature& sig);

}  // namespace twodist
