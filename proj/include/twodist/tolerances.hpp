#pragma once

namespace twodist {

/// Numerical tolerances for realization, enclosing balls and bisection.
struct Tolerances {
  // Eigenvalues below rank_cutoff * lambda_max are treated as zero.
  double rank_cutoff = 1e-9;
  // Slack for distance checks and the feasible-window test.
  double distance = 1e-9;
  // Relative Gram eigenvalue below which a configuration is infeasible.
  double infeasible = 1e-9;
  // Relative bracket width at which Phi bisection stops.
  double bisection = 1e-12;
  // Enclosing-ball duality gap relative to the squared scale.
  double ball_gap = 1e-14;
  // Support membership and convex-hull tests.
  double support = 1e-8;
  double hull = 1e-8;
  // Unit-sphere and sqrt(2)-distance checks on J-spherical configurations.
  double sphere = 1e-7;
  // beta* values closer than this are grouped; within near_tie they are refined first.
  double tie = 1e-8;
  double near_tie = 1e-6;
};

}  // namespace twodist
