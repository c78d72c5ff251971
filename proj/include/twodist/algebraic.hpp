#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twodist/polynomial.hpp"

namespace twodist {

/// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  double lower_double() const;
  double upper_double() const;
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
/// Requires b to exclude zero.
RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

/// Interval Horner evaluation; the result encloses p over x.
RationalInterval evaluate_interval(const IntPolynomial& p, const RationalInterval& x);

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  int variations_at(const Rational& x) const;
  int variations_at_positive_infinity() const;
  int variations_at_negative_infinity() const;
  /// Distinct roots in the open interval (lo, hi); lo and hi must not be roots.
  int count_roots(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// Upper bound strictly above every real root (a power of two).
Rational root_bound(const IntPolynomial& p);

/// A real algebraic number: the unique root of a squarefree defining
/// polynomial inside an isolating open interval (lo, hi).
class AlgebraicReal {
 public:
  /// Validates squarefreeness, nonzero endpoint values and a single root.
  AlgebraicReal(IntPolynomial defining, Rational lo, Rational hi);

  static AlgebraicReal from_rational(const Rational& r);

  const IntPolynomial& defining() const noexcept { return defining_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  RationalInterval interval() const { return {lo_, hi_}; }
  Rational width() const { return hi_ - lo_; }

  /// The exact value when the defining polynomial is linear.
  std::optional<Rational> as_rational() const;
  double to_double() const;

  /// 1 / x for x > 0.
  AlgebraicReal reciprocal() const;
  /// k * x for a positive integer k.
  AlgebraicReal scaled(const BigInt& k) const;

  std::string to_string() const;

 private:
  struct Unchecked {};
  AlgebraicReal(Unchecked, IntPolynomial defining, Rational lo, Rational hi);
  friend struct AlgebraicAccess;

  IntPolynomial defining_;
  Rational lo_;
  Rational hi_;
};

struct RootWithMultiplicity {
  AlgebraicReal root;
  int multiplicity = 0;
};

/// Smallest real root of p strictly greater than bound, with its multiplicity
/// in p; nullopt when there is none.
std::optional<RootWithMultiplicity> smallest_root_greater_than(const IntPolynomial& p, const Rational& bound);

/// All distinct real roots of p in increasing order.
std::vector<RootWithMultiplicity> real_roots(const IntPolynomial& p);

/// Same root, isolating interval of width at most `width`, by bisection.
AlgebraicReal refine(const AlgebraicReal& a, const Rational& width);

/// Exact multiplicity of a as a root of p (0 when p(a) != 0).
int multiplicity_at(const IntPolynomial& p, const AlgebraicReal& a);

/// Exact three-way comparison: -1, 0 or 1.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);
/// Exact comparison with a rational.
int compare(const AlgebraicReal& a, const Rational& r);

/// 2^-bits as a rational.
Rational dyadic_width(int bits);

}  // namespace twodist
