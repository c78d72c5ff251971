#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twodist/graph.hpp"
#include "twodist/invariants.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

struct OracleCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct OracleReport {
  std::string subject;
  std::vector<OracleCheck> checks;
  double worst_residual = 0.0;

  bool ok() const;
  const OracleCheck* find(const std::string& name) const;
  /// One JSON object on a single line.
  std::string to_json_line() const;
};

/// Cross-checks an exact profile against floating-point determinants and
/// an independent classical-scaling realization.
OracleReport verify_profile(const Graph& g, const ExactInvariants& p, const Tolerances& tol = {},
                            std::uint64_t seed = 20240601);

/// C_{complement}(t) = sign * t^(n + shift) * C_G(1/t).
struct ReciprocalRule {
  int sign = 1;
  int shift = -1;

  friend bool operator==(const ReciprocalRule&, const ReciprocalRule&) = default;
};

/// Calibrated over all graphs with n <= 5.
inline constexpr ReciprocalRule kReciprocalRule{1, -1};

/// Finds the unique (sign, shift) satisfied by every graph on at most
/// max_n vertices; throws if none or several fit.
ReciprocalRule calibrate_reciprocal_rule(int max_n = 5);

OracleReport reciprocal_check(const Graph& g, ReciprocalRule rule = kReciprocalRule);

/// Samples F_G on (1, tau1); informational, never a correctness failure.
OracleReport probe_f_monotonicity(const Graph& g, int grid);

struct SrgParameters {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
};

/// Regular with constant common-neighbour counts for adjacent (lambda) and
/// non-adjacent (mu) pairs; empty otherwise.
std::optional<SrgParameters> srg_parameters(const Graph& g);
/// Strongly regular with G and its complement both connected (n >= 2).
bool is_primitive_srg(const Graph& g);

}  // namespace twodist
