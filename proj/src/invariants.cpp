#include "twodist/invariants.hpp"

#include <cmath>
#include <limits>

#include "twodist/error.hpp"
#include "twodist/geometry.hpp"

namespace twodist {

namespace {

const IntPolynomial kT{0, 1};
const IntPolynomial kOne{1};

IntPolynomial distance_entry(const Graph& g, int i, int j) {
  if (i == j) return {};
  return g.adjacent(i, j) ? kOne : kT;
}

// Enclosure of -num(tau1) / (2 den(tau1)) narrower than 2^-bits, refined
// until it also excludes `avoid` (which must differ from the true value).
RationalInterval ratio_enclosure(const IntPolynomial& num, const IntPolynomial& den, const AlgebraicReal& tau1,
                                 int bits, const std::optional<Rational>& avoid) {
  if (auto r = tau1.as_rational()) {
    const Rational v = -num.evaluate(*r) / (2 * den.evaluate(*r));
    return {v, v};
  }
  const Rational target = dyadic_width(bits);
  Rational w = dyadic_width(16);
  AlgebraicReal a = tau1;
  while (true) {
    a = refine(a, w);
    const RationalInterval x = a.interval();
    const RationalInterval d = evaluate_interval(den, x);
    if (!d.contains_zero()) {
      const RationalInterval nv = evaluate_interval(num, x);
      const RationalInterval q = nv / RationalInterval{-2 * d.hi, -2 * d.lo};
      const bool narrow = q.width() < target;
      const bool clear = !avoid || !q.contains(*avoid);
      if (narrow && clear) return q;
    }
    w /= 256;
  }
}

}  // namespace

CmPolynomials cm_polynomials(const Graph& g) {
  const int n = g.order();
  PolyMatrix c(n + 1);
  for (int i = 1; i <= n; ++i) {
    c(0, i) = kOne;
    c(i, 0) = kOne;
    for (int j = 1; j <= n; ++j) c(i, j) = distance_entry(g, i - 1, j - 1);
  }
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = distance_entry(g, i, j);
  }
  return {det_poly_matrix(c), det_poly_matrix(m)};
}

Tau1 tau1_mu(const IntPolynomial& c) {
  auto root = smallest_root_greater_than(c, Rational(1));
  if (!root) return {};
  return {root->root, root->multiplicity};
}

Tau1 tau1_mu(const Graph& g) { return tau1_mu(cm_polynomials(g).c); }

CircumradiusSquared circumradius_invariant(const CmPolynomials& p, const Tau1& t, int bits) {
  if (t.is_infinite() || p.m.is_zero()) return {};
  const AlgebraicReal& tau1 = *t.tau1;
  const int mu = t.mu;
  if (multiplicity_at(p.m, tau1) < mu) return {};
  if (multiplicity_at(p.m + p.c, tau1) > mu) {
    return {RSquaredKind::OneHalf, {Rational(1, 2), Rational(1, 2)}};
  }
  // L'Hopital mu times: the limit is -M^(mu) / (2 C^(mu)) at tau1.
  const RationalInterval enc =
      ratio_enclosure(p.m.nth_derivative(mu), p.c.nth_derivative(mu), tau1, bits, Rational(1, 2));
  return {RSquaredKind::Finite, enc};
}

CircumradiusSquared circumradius_invariant(const Graph& g, int bits) {
  const CmPolynomials p = cm_polynomials(g);
  return circumradius_invariant(p, tau1_mu(p.c), bits);
}

ExactInvariants exact_invariants(const Graph& g, int bits) {
  ExactInvariants inv;
  const int n = g.order();
  inv.n = n;
  inv.poly = cm_polynomials(g);
  inv.t = tau1_mu(inv.poly.c);
  inv.r_squared = circumradius_invariant(inv.poly, inv.t, bits);

  const Graph gc = complement(g);
  const Tau1 tc = tau1_mu(cm_polynomials(gc).c);
  if (!tc.is_infinite()) inv.tau0 = tc.tau1->reciprocal();
  inv.tau0_advisory = is_complete_multipartite(g) || is_complete_multipartite(gc);

  if (n == 1) {
    // A single point: every representation number is 0 by convention.
    return inv;
  }
  inv.dim_e = n - inv.t.mu - 1;
  inv.dim_s = inv.r_squared.kind == RSquaredKind::Infinite ? n - 1 : inv.dim_e;
  if (!g.is_complete()) {
    inv.dim_j = inv.r_squared.kind == RSquaredKind::OneHalf ? inv.dim_e : n - 1;
  }
  return inv;
}

TwoDistanceProfile profile(const Graph& g, const ProfileOptions& options) {
  TwoDistanceProfile p;
  static_cast<ExactInvariants&>(p) = exact_invariants(g, options.precision_bits);
  if (!p.dim_j) return p;
  BetaStarSquared& b = p.beta_star_squared;
  if (p.r_squared.kind == RSquaredKind::OneHalf) {
    b.kind = BetaKind::Exact;
    b.exact = p.t.tau1->scaled(2);
    b.value = b.exact->to_double();
    b.error = std::abs(b.value) * std::numeric_limits<double>::epsilon();
    return p;
  }
  if (!options.beta_star) return p;
  const BetaStar beta = beta_star_numeric(g, p, options.tol);
  b.kind = BetaKind::Numeric;
  b.value = beta.value * beta.value;
  b.error = 2 * beta.value * beta.error + beta.error * beta.error;
  return p;
}

int dim_s_bounded(const ExactInvariants& inv, const Rational& r0_squared, int max_bits) {
  if (!inv.dim_j) throw Error(ErrorKind::CompleteGraph, "dim_s_bounded: complete graph");
  if (r0_squared < Rational(1, 2)) throw Error(ErrorKind::InvalidArgument, "dim_s_bounded: R0^2 must be at least 1/2");
  switch (inv.r_squared.kind) {
    case RSquaredKind::Infinite:
      return inv.n - 1;
    case RSquaredKind::OneHalf:
      return inv.dim_e;
    case RSquaredKind::Finite:
      break;
  }
  const AlgebraicReal& tau1 = *inv.t.tau1;
  const int mu = inv.t.mu;
  // R^2 = p/q exactly iff q M + 2 p C vanishes to order > mu at tau1.
  const BigInt p = numerator(r0_squared);
  const BigInt q = denominator(r0_squared);
  const IntPolynomial test = q * inv.poly.m + (2 * p) * inv.poly.c;
  if (multiplicity_at(test, tau1) > mu) return inv.dim_e;
  RationalInterval enc = inv.r_squared.enclosure;
  for (int bits = 64; !(enc.hi < r0_squared || enc.lo > r0_squared); bits *= 2) {
    if (bits > max_bits) {
      throw Error(ErrorKind::Undecidable, "dim_s_bounded: enclosure [" + enc.lo.str() + ", " + enc.hi.str() +
                                              "] straddles R0^2");
    }
    enc = ratio_enclosure(inv.poly.m.nth_derivative(mu), inv.poly.c.nth_derivative(mu), tau1, bits, r0_squared);
  }
  return enc.hi < r0_squared ? inv.dim_e : inv.n - 1;
}

int dim_s_bounded(const Graph& g, const Rational& r0_squared, int max_bits) {
  return dim_s_bounded(exact_invariants(g), r0_squared, max_bits);
}

}  // namespace twodist
