#include "twodist/record.hpp"

#include <sstream>

#include "twodist/error.hpp"
#include "twodist/geometry.hpp"
#include "twodist/join.hpp"

namespace twodist {

namespace {

BigInt pow10(int k) {
  BigInt p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

BigInt floor_of(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) q -= 1;
  return q;
}

Json number(const std::string& decimal) { return std::stod(decimal); }

Json enclosure_json(const RationalInterval& x) {
  return Json::array({number(directed_decimal(x.lo, false)), number(directed_decimal(x.hi, true))});
}

std::string join_csv(const Json& a) {
  if (a.is_string()) return a.get<std::string>();
  if (a.is_null()) return "";
  if (a.is_array()) return a[0].dump() + ";" + a[1].dump();
  return a.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string directed_decimal(const Rational& x, bool up, int digits) {
  if (x == 0) return "0";
  if (x < 0) return "-" + directed_decimal(-x, !up, digits);
  // 10^e <= x < 10^(e+1)
  int e = 0;
  while (Rational(pow10(e + 1)) <= x) ++e;
  while (Rational(1, pow10(-e)) > x && e <= 0) --e;
  const int shift = digits - 1 - e;
  const Rational scaled = shift >= 0 ? Rational(x * pow10(shift)) : Rational(x / pow10(-shift));
  BigInt m = floor_of(scaled);
  if (up && Rational(m) != scaled) m += 1;
  int exp10 = -shift;
  if (m == pow10(digits)) {
    m /= 10;
    exp10 += 1;
  }
  while (m % 10 == 0 && m != 0) {
    m /= 10;
    exp10 += 1;
  }
  std::ostringstream out;
  out << m << "e" << exp10;
  // Normalise through a double so the text is the shortest round-trip form.
  std::ostringstream norm;
  norm.precision(digits);
  norm << std::stod(out.str());
  return norm.str();
}

Json analysis_record(const Graph& g, const TwoDistanceProfile& p, const RecordOptions& options) {
  Json j;
  j["input"] = to_graph6(g);
  j["n"] = p.n;
  j["dim_e"] = p.dim_e;
  j["dim_s"] = p.dim_s;
  j["dim_j"] = p.dim_j ? Json(*p.dim_j) : Json(nullptr);
  if (p.t.tau1) {
    const AlgebraicReal t = refine(*p.t.tau1, dyadic_width(options.precision_bits));
    if (auto r = t.as_rational()) {
      j["tau1"] = enclosure_json({*r, *r});
    } else {
      j["tau1"] = enclosure_json(t.interval());
    }
  } else {
    j["tau1"] = "inf";
  }
  j["mu"] = p.t.mu;
  switch (p.r_squared.kind) {
    case RSquaredKind::OneHalf:
      j["r_squared"] = "1/2";
      break;
    case RSquaredKind::Finite:
      j["r_squared"] = enclosure_json(p.r_squared.enclosure);
      break;
    case RSquaredKind::Infinite:
      j["r_squared"] = "inf";
      break;
  }
  switch (p.beta_star_squared.kind) {
    case BetaKind::Exact:
      j["beta_star"] = "sqrt(2*tau1)";
      break;
    case BetaKind::Numeric:
      j["beta_star"] = std::sqrt(p.beta_star_squared.value);
      break;
    case BetaKind::Undefined:
      j["beta_star"] = nullptr;
      break;
  }
  j["factors"] = Json::array();
  if (options.factors) {
    const JoinFactorization f = join_decompose(g, options.tol);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      Json factor;
      factor["size"] = f.factors[i].graph.order();
      if (g.is_complete()) {
        factor["type"] = nullptr;
      } else {
        factor["type"] = static_cast<int>(i) < f.k ? "I" : "II";
      }
      j["factors"].push_back(factor);
    }
  }
  return j;
}

Json analysis_record(const Graph& g, const RecordOptions& options) {
  ProfileOptions po;
  po.precision_bits = options.precision_bits;
  po.tol = options.tol;
  return analysis_record(g, profile(g, po), options);
}

Json error_record(const std::string& input, const std::string& message, int code) {
  Json j;
  j["input"] = input;
  j["error"] = message;
  j["code"] = code;
  return j;
}

std::string csv_header() { return "input,n,dim_e,dim_s,dim_j,tau1,mu,r_squared,beta_star,factors,error"; }

std::string csv_row(const Json& r) {
  std::ostringstream out;
  out << csv_escape(r.value("input", "")) << ',';
  if (r.contains("error")) {
    out << ",,,,,,,,," << csv_escape(r["error"].get<std::string>());
    return out.str();
  }
  std::string factors;
  for (const auto& f : r["factors"]) {
    if (!factors.empty()) factors += ';';
    factors += std::to_string(f["size"].get<int>());
    if (f["type"].is_string()) factors += ":" + f["type"].get<std::string>();
  }
  out << r["n"].dump() << ',' << r["dim_e"].dump() << ',' << r["dim_s"].dump() << ','
      << join_csv(r["dim_j"]) << ',' << join_csv(r["tau1"]) << ',' << r["mu"].dump() << ','
      << join_csv(r["r_squared"]) << ',' << join_csv(r["beta_star"]) << ',' << factors << ',';
  return out.str();
}

Json points_json(const Eigen::MatrixXd& points) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < points.cols(); ++k) row.push_back(points(i, k));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace twodist
