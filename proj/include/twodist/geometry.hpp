#pragma once

#include <Eigen/Dense>
#include <vector>

#include "twodist/graph.hpp"
#include "twodist/invariants.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

/// Realized two-distance configuration: one point per row.
struct PointConfig {
  Eigen::MatrixXd points;
  double a = 1.0;
  double b = 1.0;
  int rank = 0;
  double tol = 0.0;
};

struct Ball {
  Eigen::VectorXd center;
  double radius = 0.0;
  // Points within tolerance of the sphere, ascending.
  std::vector<int> support;
  // Dual weights (a probability vector); center = sum of weights * points.
  Eigen::VectorXd weights;
  // Squared-radius duality gap of the final certificate.
  double gap = 0.0;
};

/// Classical scaling of the squared-distance matrix (a^2 on edges, b^2 on
/// non-edges). Checks t = (b/a)^2 against [tau0, tau1] unless the window
/// is advisory, then the Gram matrix for negative eigenvalues.
PointConfig realize(const Graph& g, double b, double a = 1.0, const Tolerances& tol = {});
PointConfig realize(const Graph& g, const ExactInvariants& inv, double b, double a = 1.0, const Tolerances& tol = {});
/// Gram feasibility check only.
PointConfig realize_unchecked(const Graph& g, double b, double a = 1.0, const Tolerances& tol = {});
/// Minimal Euclidean representation (a = 1, t at tau1). Requires finite tau1.
PointConfig realize_at_tau1(const Graph& g, const ExactInvariants& inv, const Tolerances& tol = {});

Ball min_enclosing_ball(const Eigen::MatrixXd& points, const Tolerances& tol = {});

/// Minimum-norm point of the convex hull of the rows; returns the convex weights.
Eigen::VectorXd min_norm_hull_weights(const Eigen::MatrixXd& points);

/// Enclosing-ball radius of the configuration with distances sqrt(2) and x.
double phi(const Graph& g, double x, const Tolerances& tol = {});

struct PhiRoot {
  double x = 0.0;
  // Half-width of the final bracket.
  double error = 0.0;
  int iterations = 0;
  // Phi looked locally constant around the root.
  bool plateau = false;
};

/// The x with Phi_G(x) = r, for sqrt((n-1)/n) < r <= 1 and G not complete.
PhiRoot solve_phi(const Graph& g, double r, const Tolerances& tol = {});
PhiRoot solve_phi(const Graph& g, const ExactInvariants& inv, double r, const Tolerances& tol = {});

struct BetaStar {
  double value = 0.0;
  double error = 0.0;
  // From sqrt(2 tau1) rather than bisection.
  bool exact = false;
  bool plateau = false;
};

BetaStar beta_star_numeric(const Graph& g, const Tolerances& tol = {});
BetaStar beta_star_numeric(const Graph& g, const ExactInvariants& inv, const Tolerances& tol = {});

/// Unit-sphere configuration with distances sqrt(2) and beta*.
PointConfig jspherical_embedding(const Graph& g, const Tolerances& tol = {});
PointConfig jspherical_embedding(const Graph& g, const ExactInvariants& inv, const Tolerances& tol = {});

enum class FactorType { I, II };

struct PointFactor {
  std::vector<int> indices;
  FactorType type = FactorType::I;
  // Origin within tolerance of the hull boundary.
  bool boundary = false;
};

struct PointFactorization {
  std::vector<PointFactor> factors;
  int k = 0;
  int dimension = 0;
};

/// Splits a unit-sphere configuration with short distance sqrt(2) into
/// orthogonal join-prime factors and labels each Type I or Type II.
PointFactorization kuperberg_decompose(const PointConfig& config, const Tolerances& tol = {});

/// Graph of the sqrt(2)-distance pairs.
Graph short_distance_graph(const Eigen::MatrixXd& points, double tol);

}  // namespace twodist
