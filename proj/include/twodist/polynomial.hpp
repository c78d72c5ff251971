#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace twodist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first. The zero polynomial has degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  /// c * t^k
  static IntPolynomial monomial(const BigInt& c, int k);
  /// den * t - num, the primitive linear polynomial vanishing at num/den.
  static IntPolynomial vanishing_at(const Rational& r);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^k (zero beyond the degree).
  BigInt coefficient(int k) const;
  const BigInt& leading() const;

  IntPolynomial derivative() const;
  IntPolynomial nth_derivative(int k) const;
  /// gcd of the coefficients (non-negative; zero for the zero polynomial).
  BigInt content() const;
  /// Coefficients divided by the content, leading coefficient positive.
  IntPolynomial primitive() const;
  /// t^e * p(1/t); requires e >= degree().
  IntPolynomial reversed(int e) const;
  /// p(k t) scaled by nothing: coefficient i multiplied by k^i.
  IntPolynomial scale_argument(const BigInt& k) const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  int sign_at(const Rational& x) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, int k);

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// lc(b)^(deg a - deg b + 1) * a = q * b + r with deg r < deg b.
DivisionResult pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b for b dividing a over the rationals, returned primitive.
/// Throws if the division is not exact.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial squarefree_part(const IntPolynomial& p);

struct SquarefreeFactor {
  IntPolynomial factor;
  int multiplicity = 0;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Factors grouped by multiplicity (strictly increasing), each primitive,
/// squarefree and pairwise coprime; product of factor^multiplicity equals p
/// up to a rational constant. Constant factors are omitted.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);

/// Square matrix of polynomials stored row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(int size);
  PolyMatrix(int size, std::vector<IntPolynomial> entries);

  int size() const noexcept { return size_; }
  IntPolynomial& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * size_ + j]; }
  const IntPolynomial& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * size_ + j]; }
  int max_entry_degree() const;

 private:
  int size_;
  std::vector<IntPolynomial> entries_;
};

/// Exact determinant of an integer matrix by fraction-free elimination.
BigInt bareiss_determinant(std::vector<BigInt> entries, int size);

/// Exact determinant: evaluate at deg+1 integer points, Bareiss each, then
/// interpolate.
IntPolynomial det_poly_matrix(const PolyMatrix& m);

}  // namespace twodist
