#pragma once

#include <optional>

#include "twodist/algebraic.hpp"
#include "twodist/graph.hpp"
#include "twodist/polynomial.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

/// C is the bordered Cayley-Menger determinant in t = b^2 (a = 1), M the
/// unbordered squared-distance determinant; both keep their true sign.
struct CmPolynomials {
  IntPolynomial c;
  IntPolynomial m;
};

CmPolynomials cm_polynomials(const Graph& g);

/// Smallest root of C_G above 1 and its multiplicity; tau1 empty means
/// infinity (and mu = 0).
struct Tau1 {
  std::optional<AlgebraicReal> tau1;
  int mu = 0;

  bool is_infinite() const { return !tau1.has_value(); }
};

Tau1 tau1_mu(const Graph& g);
Tau1 tau1_mu(const IntPolynomial& c);

enum class RSquaredKind { OneHalf, Finite, Infinite };

/// Squared circumradius of the minimal Euclidean representation. For
/// Finite, `enclosure` contains the value and excludes 1/2; for OneHalf it
/// is the point [1/2, 1/2].
struct CircumradiusSquared {
  RSquaredKind kind = RSquaredKind::Infinite;
  RationalInterval enclosure{0, 0};
};

/// Enclosure width below 2^-bits.
CircumradiusSquared circumradius_invariant(const Graph& g, int bits = 40);
CircumradiusSquared circumradius_invariant(const CmPolynomials& p, const Tau1& t, int bits = 40);

/// Everything that follows exactly from C_G, M_G and C of the complement.
struct ExactInvariants {
  int n = 0;
  CmPolynomials poly;
  Tau1 t;
  CircumradiusSquared r_squared;
  // 1 / tau1(complement); empty is the zero marker.
  std::optional<AlgebraicReal> tau0;
  // G or its complement is complete multipartite; the window claim is not guaranteed.
  bool tau0_advisory = false;
  int dim_e = 0;
  int dim_s = 0;
  // Empty for complete graphs.
  std::optional<int> dim_j;
};

ExactInvariants exact_invariants(const Graph& g, int bits = 40);

enum class BetaKind { Exact, Numeric, Undefined };

/// beta*^2: exactly 2 * tau1 when the minimal representation is already
/// J-spherical, otherwise a bisection value with an absolute error bound.
struct BetaStarSquared {
  BetaKind kind = BetaKind::Undefined;
  std::optional<AlgebraicReal> exact;
  double value = 0.0;
  double error = 0.0;
};

struct TwoDistanceProfile : ExactInvariants {
  BetaStarSquared beta_star_squared;
};

struct ProfileOptions {
  int precision_bits = 40;
  bool beta_star = true;
  Tolerances tol;
};

TwoDistanceProfile profile(const Graph& g, const ProfileOptions& options = {});

/// Spherical representation number with circumradius at most R0
/// (r0_squared = R0^2 >= 1/2). Throws Undecidable if the enclosure cannot
/// be separated from r0_squared within max_bits.
int dim_s_bounded(const Graph& g, const Rational& r0_squared, int max_bits = 4096);
int dim_s_bounded(const ExactInvariants& inv, const Rational& r0_squared, int max_bits = 4096);

}  // namespace twodist
