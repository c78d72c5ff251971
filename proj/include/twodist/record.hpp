#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <string>

#include "twodist/graph.hpp"
#include "twodist/invariants.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

using Json = nlohmann::ordered_json;

/// Decimal with `digits` significant digits, rounded toward +inf (up) or -inf.
std::string directed_decimal(const Rational& x, bool up, int digits = 15);

struct RecordOptions {
  int precision_bits = 40;
  Tolerances tol;
  bool factors = true;
};

/// The analysis record: input, n, dim_e, dim_s, dim_j, tau1, mu, r_squared,
/// beta_star, factors.
Json analysis_record(const Graph& g, const RecordOptions& options = {});
Json analysis_record(const Graph& g, const TwoDistanceProfile& p, const RecordOptions& options = {});

/// Record for a line that could not be analysed.
Json error_record(const std::string& input, const std::string& message, int code);

std::string csv_header();
std::string csv_row(const Json& record);

/// JSON array of coordinate rows.
Json points_json(const Eigen::MatrixXd& points);

}  // namespace twodist
