#include "twodist/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "twodist/error.hpp"

namespace twodist {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Eigen::MatrixXd squared_distances(const Graph& g, double a, double b) {
  const int n = g.order();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) d(i, j) = g.adjacent(i, j) ? a * a : b * b;
    }
  }
  return d;
}

// Double centering, eigendecomposition, clamping. keep_all keeps every
// positive eigenvalue as a coordinate (exact distances); otherwise only the
// numerical rank is kept.
PointConfig classical_scaling(const Graph& g, double b, double a, const Tolerances& tol, bool keep_all) {
  if (!(a > 0) || !(b > 0)) throw Error(ErrorKind::InvalidArgument, "realize: distances must be positive");
  const int n = g.order();
  PointConfig out;
  out.a = a;
  out.b = b;
  out.tol = tol.rank_cutoff;
  if (n == 1) {
    out.points = Eigen::MatrixXd::Zero(1, 1);
    return out;
  }
  const Eigen::MatrixXd d = squared_distances(g, a, b);
  const Eigen::VectorXd row_mean = d.rowwise().mean();
  const double mean = row_mean.mean();
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gram(i, j) = -0.5 * (d(i, j) - row_mean(i) - row_mean(j) + mean);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::Geometry, "realize: eigendecomposition failed");
  const Eigen::VectorXd values = es.eigenvalues().reverse();
  const Eigen::MatrixXd vectors = es.eigenvectors().rowwise().reverse();
  const double lmax = std::max(values(0), 0.0);
  const double scale = std::max(lmax, d.maxCoeff());
  if (values(n - 1) < -tol.infeasible * scale) {
    throw Error(ErrorKind::Infeasible, "realize: distance matrix is not Euclidean (min Gram eigenvalue " +
                                           std::to_string(values(n - 1)) + ")");
  }
  int rank = 0;
  int positive = 0;
  for (int i = 0; i < n; ++i) {
    if (values(i) > tol.rank_cutoff * lmax) ++rank;
    if (values(i) > 0) ++positive;
  }
  const int cols = std::max(keep_all ? positive : rank, 1);
  Eigen::VectorXd roots(cols);
  for (int i = 0; i < cols; ++i) roots(i) = std::sqrt(std::max(values(i), 0.0));
  out.points = vectors.leftCols(cols) * roots.asDiagonal();
  out.rank = rank;
  return out;
}

double upper_double(const AlgebraicReal& x) { return refine(x, dyadic_width(48)).hi().convert_to<double>(); }
double lower_double(const AlgebraicReal& x) { return refine(x, dyadic_width(48)).lo().convert_to<double>(); }

std::vector<int> indices_of(const Eigen::VectorXd& lam) {
  std::vector<int> s;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam(i) > 0) s.push_back(i);
  }
  return s;
}

// Drop index s[pos] from the working set and zero its weight.
void drop(std::vector<int>& s, Eigen::VectorXd& lam, std::size_t pos) {
  lam(s[pos]) = 0.0;
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(pos));
}

// Ratio test toward y (weights on s); returns false if nothing moved.
void step_toward(std::vector<int>& s, Eigen::VectorXd& lam, const Eigen::VectorXd& y) {
  double theta = 1.0;
  std::size_t hit = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (y(i) <= 0) {
      const double li = lam(s[i]);
      const double th = li - y(i) > 0 ? li / (li - y(i)) : 0.0;
      if (th < theta) {
        theta = th;
        hit = i;
      }
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) lam(s[i]) += theta * (y(i) - lam(s[i]));
  drop(s, lam, hit);
  for (std::size_t i = s.size(); i-- > 0;) {
    if (lam(s[i]) <= 0) drop(s, lam, i);
  }
}

// Makes lam stationary for the ball dual on the face spanned by s: the
// centre becomes the circumcentre of the working points within their
// affine hull, with positive weights.
void ball_minor_cycle(const Eigen::MatrixXd& p, std::vector<int>& s, Eigen::VectorXd& lam) {
  while (true) {
    const int m = static_cast<int>(s.size());
    if (m == 1) {
      lam(s[0]) = 1.0;
      return;
    }
    Eigen::MatrixXd q(p.cols(), m - 1);
    for (int i = 1; i < m; ++i) q.col(i - 1) = (p.row(s[i]) - p.row(s[0])).transpose();
    const Eigen::MatrixXd h = q.transpose() * q;
    const Eigen::VectorXd rhs = 0.5 * h.diagonal();
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(h);
    const Eigen::VectorXd alpha = cod.solve(rhs);
    const double resid = (h * alpha - rhs).norm();
    if (resid <= 1e-10 * std::max(1.0, rhs.norm())) {
      Eigen::VectorXd y(m);
      y(0) = 1.0 - alpha.sum();
      y.tail(m - 1) = alpha;
      if ((y.array() > 0).all()) {
        for (int i = 0; i < m; ++i) lam(s[i]) = y(i);
        return;
      }
      step_toward(s, lam, y);
      continue;
    }
    // Affinely dependent and not cospherical: the dual is linear along the
    // dependence, so move uphill until a weight vanishes.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::VectorXd v = es.eigenvectors().col(0);
    Eigen::VectorXd w(m);
    w(0) = -v.sum();
    w.tail(m - 1) = v;
    if (v.dot(h.diagonal()) < 0) w = -w;
    double gamma = std::numeric_limits<double>::infinity();
    std::size_t hit = 0;
    for (int i = 0; i < m; ++i) {
      if (w(i) < 0) {
        const double g = lam(s[i]) / -w(i);
        if (g < gamma) {
          gamma = g;
          hit = static_cast<std::size_t>(i);
        }
      }
    }
    for (int i = 0; i < m; ++i) lam(s[i]) += gamma * w(i);
    drop(s, lam, hit);
    for (std::size_t i = s.size(); i-- > 0;) {
      if (lam(s[i]) <= 0) drop(s, lam, i);
    }
  }
}

void frank_wolfe(const Eigen::MatrixXd& p, Eigen::VectorXd& lam, double scale, double target, int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd c = p.transpose() * lam;
    const Eigen::VectorXd dist2 = (p.rowwise() - c.transpose()).rowwise().squaredNorm();
    Eigen::Index j = 0;
    const double far = dist2.maxCoeff(&j);
    const double gap = far - lam.dot(dist2);
    if (gap <= target * scale || far <= 0) return;
    const double gamma = std::clamp(gap / (2 * far), 0.0, 1.0);
    lam *= 1.0 - gamma;
    lam(j) += gamma;
  }
}

void ball_active_set(const Eigen::MatrixXd& p, Eigen::VectorXd& lam, double scale) {
  std::vector<int> s = indices_of(lam);
  const int n = static_cast<int>(p.rows());
  for (int major = 0; major < 20 * n + 50; ++major) {
    ball_minor_cycle(p, s, lam);
    const Eigen::VectorXd c = p.transpose() * lam;
    const Eigen::VectorXd dist2 = (p.rowwise() - c.transpose()).rowwise().squaredNorm();
    double r2 = 0.0;
    for (int i : s) r2 = std::max(r2, dist2(i));
    Eigen::Index j = 0;
    const double far = dist2.maxCoeff(&j);
    if (far <= r2 + 16 * kEps * scale) return;
    if (std::find(s.begin(), s.end(), static_cast<int>(j)) != s.end()) return;
    s.push_back(static_cast<int>(j));
  }
}

// Affine combination of the rows closest to the origin (least squares).
Eigen::VectorXd affine_min_norm(const Eigen::MatrixXd& p) {
  const int m = static_cast<int>(p.rows());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
  kkt.topLeftCorner(m, m) = p * p.transpose();
  kkt.block(0, m, m, 1).setOnes();
  kkt.block(m, 0, 1, m).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs(m) = 1.0;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(kkt);
  return cod.solve(rhs).head(m);
}

}  // namespace

PointConfig realize_unchecked(const Graph& g, double b, double a, const Tolerances& tol) {
  return classical_scaling(g, b, a, tol, false);
}

PointConfig realize(const Graph& g, const ExactInvariants& inv, double b, double a, const Tolerances& tol) {
  if (!inv.tau0_advisory) {
    const double t = (b / a) * (b / a);
    if (inv.t.tau1 && t > upper_double(*inv.t.tau1) * (1 + tol.distance)) {
      throw Error(ErrorKind::Infeasible, "realize: t = " + std::to_string(t) + " exceeds tau1");
    }
    if (inv.tau0 && t < lower_double(*inv.tau0) * (1 - tol.distance)) {
      throw Error(ErrorKind::Infeasible, "realize: t = " + std::to_string(t) + " is below tau0");
    }
  }
  return classical_scaling(g, b, a, tol, false);
}

PointConfig realize(const Graph& g, double b, double a, const Tolerances& tol) {
  return realize(g, exact_invariants(g), b, a, tol);
}

PointConfig realize_at_tau1(const Graph& g, const ExactInvariants& inv, const Tolerances& tol) {
  if (!inv.t.tau1) throw Error(ErrorKind::InvalidArgument, "realize_at_tau1: tau1 is infinite");
  double t = 0.0;
  if (auto r = inv.t.tau1->as_rational()) {
    t = r->convert_to<double>();
  } else {
    t = refine(*inv.t.tau1, Rational(1, BigInt("100000000000000"))).lo().convert_to<double>();
  }
  return classical_scaling(g, std::sqrt(t), 1.0, tol, false);
}

Eigen::VectorXd min_norm_hull_weights(const Eigen::MatrixXd& points) {
  const int n = static_cast<int>(points.rows());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "min_norm_hull_weights: no points");
  const Eigen::VectorXd sq = points.rowwise().squaredNorm();
  const double scale = std::max(sq.maxCoeff(), std::numeric_limits<double>::min());
  Eigen::Index i0 = 0;
  sq.minCoeff(&i0);
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(n);
  lam(i0) = 1.0;
  std::vector<int> s{static_cast<int>(i0)};
  for (int major = 0; major < 50 * n + 50; ++major) {
    const Eigen::VectorXd x = points.transpose() * lam;
    const Eigen::VectorXd dots = points * x;
    Eigen::Index j = 0;
    const double lowest = dots.minCoeff(&j);
    if (x.squaredNorm() - lowest <= 1e-14 * scale) break;
    if (std::find(s.begin(), s.end(), static_cast<int>(j)) != s.end()) break;
    s.push_back(static_cast<int>(j));
    while (true) {
      Eigen::MatrixXd sub(s.size(), points.cols());
      for (std::size_t i = 0; i < s.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = points.row(s[i]);
      const Eigen::VectorXd y = affine_min_norm(sub);
      if ((y.array() > 0).all()) {
        for (std::size_t i = 0; i < s.size(); ++i) lam(s[i]) = y(static_cast<Eigen::Index>(i));
        break;
      }
      step_toward(s, lam, y);
      if (s.size() == 1) {
        lam(s[0]) = 1.0;
        break;
      }
    }
  }
  return lam;
}

Ball min_enclosing_ball(const Eigen::MatrixXd& points, const Tolerances& tol) {
  const int n = static_cast<int>(points.rows());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "min_enclosing_ball: no points");
  const Eigen::RowVectorXd shift = points.colwise().mean();
  const Eigen::MatrixXd p = points.rowwise() - shift;
  const Eigen::VectorXd sq = p.rowwise().squaredNorm();
  Ball ball;
  ball.weights = Eigen::VectorXd::Zero(n);
  Eigen::Index i0 = 0;
  const double scale = sq.maxCoeff(&i0);
  if (scale == 0) {
    ball.center = shift.transpose();
    ball.weights(0) = 1.0;
    ball.support.resize(static_cast<std::size_t>(n));
    std::iota(ball.support.begin(), ball.support.end(), 0);
    return ball;
  }
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(n);
  lam(i0) = 1.0;
  frank_wolfe(p, lam, scale, 1e-3, 100 * n + 100);
  ball_active_set(p, lam, scale);
  auto certify = [&](Eigen::VectorXd& c, Eigen::VectorXd& dist2) {
    lam /= lam.sum();
    c = p.transpose() * lam;
    dist2 = (p.rowwise() - c.transpose()).rowwise().squaredNorm();
    return dist2.maxCoeff() - lam.dot(dist2);
  };
  Eigen::VectorXd c;
  Eigen::VectorXd dist2;
  double gap = certify(c, dist2);
  if (gap > tol.ball_gap * scale) {
    // The polish stalled; fall back to plain conditional gradient.
    frank_wolfe(p, lam, scale, tol.ball_gap, 200000);
    gap = certify(c, dist2);
  }
  ball.radius = std::sqrt(dist2.maxCoeff());
  ball.center = c + shift.transpose();
  ball.weights = lam;
  ball.gap = std::max(gap, 0.0);
  for (int i = 0; i < n; ++i) {
    if (std::sqrt(dist2(i)) >= ball.radius - tol.support * std::max(ball.radius, 1.0)) ball.support.push_back(i);
  }
  return ball;
}

double phi(const Graph& g, double x, const Tolerances& tol) {
  return min_enclosing_ball(classical_scaling(g, x, std::sqrt(2.0), tol, true).points, tol).radius;
}

PhiRoot solve_phi(const Graph& g, const ExactInvariants& inv, double r, const Tolerances& tol) {
  const int n = g.order();
  if (g.is_complete()) throw Error(ErrorKind::CompleteGraph, "solve_phi: complete graph");
  const double floor_radius = std::sqrt(static_cast<double>(n - 1) / n);
  if (!(r > floor_radius) || r > 1.0) {
    throw Error(ErrorKind::InvalidArgument, "solve_phi: radius must lie in (sqrt((n-1)/n), 1]");
  }
  double lo = std::sqrt(2.0);
  double hi = 0.0;
  PhiRoot out;
  if (inv.t.tau1) {
    hi = std::max(lo, std::sqrt(2 * lower_double(*inv.t.tau1)));
    if (phi(g, hi, tol) < r) {
      if (phi(g, hi, tol) < r - 1e-9) throw Error(ErrorKind::Geometry, "solve_phi: no root in the feasible window");
      out.x = hi;
      out.error = hi * 1e-14;
      return out;
    }
  } else {
    hi = 2 * lo;
    for (int i = 0; phi(g, hi, tol) < r; ++i) {
      if (i > 60) throw Error(ErrorKind::Geometry, "solve_phi: bracket expansion failed");
      lo = hi;
      hi *= 2;
    }
  }
  const double top = hi;
  while (hi - lo > tol.bisection * hi && out.iterations < 400) {
    const double mid = 0.5 * (lo + hi);
    if (phi(g, mid, tol) < r) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++out.iterations;
  }
  out.x = 0.5 * (lo + hi);
  out.error = 0.5 * (hi - lo);
  const double delta = 1e-7 * out.x;
  if (out.x - delta > std::sqrt(2.0) && out.x + delta < top) {
    out.plateau = phi(g, out.x + delta, tol) - phi(g, out.x - delta, tol) <= 1e-14;
  }
  return out;
}

PhiRoot solve_phi(const Graph& g, double r, const Tolerances& tol) {
  return solve_phi(g, exact_invariants(g), r, tol);
}

BetaStar beta_star_numeric(const Graph& g, const ExactInvariants& inv, const Tolerances& tol) {
  if (g.is_complete()) throw Error(ErrorKind::CompleteGraph, "beta_star: complete graph has no J-spherical representation");
  BetaStar out;
  if (inv.r_squared.kind == RSquaredKind::OneHalf) {
    const AlgebraicReal t = refine(*inv.t.tau1, dyadic_width(64));
    out.value = std::sqrt(2 * ((t.lo() + t.hi()) / 2).convert_to<double>());
    out.error = 4 * kEps * out.value;
    out.exact = true;
    return out;
  }
  const PhiRoot root = solve_phi(g, inv, 1.0, tol);
  out.value = root.x;
  out.error = root.error;
  out.plateau = root.plateau;
  return out;
}

BetaStar beta_star_numeric(const Graph& g, const Tolerances& tol) {
  return beta_star_numeric(g, exact_invariants(g), tol);
}

PointConfig jspherical_embedding(const Graph& g, const ExactInvariants& inv, const Tolerances& tol) {
  const BetaStar beta = beta_star_numeric(g, inv, tol);
  PointConfig config = classical_scaling(g, beta.value, std::sqrt(2.0), tol, false);
  const Ball ball = min_enclosing_ball(config.points, tol);
  config.points.rowwise() -= ball.center.transpose();
  return config;
}

PointConfig jspherical_embedding(const Graph& g, const Tolerances& tol) {
  return jspherical_embedding(g, exact_invariants(g), tol);
}

Graph short_distance_graph(const Eigen::MatrixXd& points, double tol) {
  const int n = static_cast<int>(points.rows());
  if (n > kHardMaxN) throw Error(ErrorKind::SizeLimit, "short_distance_graph: too many points");
  std::vector<Edge> edges;
  const double a = std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs((points.row(i) - points.row(j)).norm() - a) <= tol) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

PointFactorization kuperberg_decompose(const PointConfig& config, const Tolerances& tol) {
  const Eigen::MatrixXd& p = config.points;
  const int n = static_cast<int>(p.rows());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "kuperberg_decompose: no points");
  for (int i = 0; i < n; ++i) {
    if (std::abs(p.row(i).norm() - 1.0) > tol.sphere) {
      throw Error(ErrorKind::Geometry, "kuperberg_decompose: point " + std::to_string(i) + " is off the unit sphere");
    }
    for (int j = i + 1; j < n; ++j) {
      if ((p.row(i) - p.row(j)).norm() < std::sqrt(2.0) - tol.sphere) {
        throw Error(ErrorKind::Geometry, "kuperberg_decompose: distance below sqrt(2)");
      }
    }
  }
  const Graph gamma = short_distance_graph(p, tol.sphere);
  const auto parts = complement_component_vertices(gamma);
  std::vector<int> owner(static_cast<std::size_t>(n));
  for (std::size_t f = 0; f < parts.size(); ++f) {
    for (int v : parts[f]) owner[static_cast<std::size_t>(v)] = static_cast<int>(f);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (owner[i] != owner[j] && std::abs(p.row(i).dot(p.row(j))) > tol.sphere) {
        throw Error(ErrorKind::Geometry, "kuperberg_decompose: factors are not orthogonal");
      }
    }
  }
  PointFactorization out;
  for (const auto& part : parts) {
    Eigen::MatrixXd sub(part.size(), p.cols());
    for (std::size_t i = 0; i < part.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = p.row(part[i]);
    PointFactor f;
    f.indices = part;
    const Eigen::VectorXd w = min_norm_hull_weights(sub);
    if ((sub.transpose() * w).norm() <= tol.hull) {
      f.type = FactorType::I;
      f.boundary = (w.array() <= tol.hull).any();
      ++out.k;
    } else {
      const Eigen::VectorXd y = affine_min_norm(sub);
      if ((sub.transpose() * y).norm() <= tol.hull) {
        throw Error(ErrorKind::Geometry, "kuperberg_decompose: origin in the affine hull but not the convex hull");
      }
      f.type = FactorType::II;
    }
    out.factors.push_back(std::move(f));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(p);
  const Eigen::VectorXd sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol.sphere * std::max(sv(0), 1.0)) ++out.dimension;
  }
  if (n != out.dimension + out.k) {
    throw Error(ErrorKind::Geometry, "kuperberg_decompose: |S| = " + std::to_string(n) + " but d + k = " +
                                         std::to_string(out.dimension) + " + " + std::to_string(out.k));
  }
  return out;
}

}  // namespace twodist
