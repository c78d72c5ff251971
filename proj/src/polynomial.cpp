#include "twodist/polynomial.hpp"

#include <sstream>
#include <utility>

#include "twodist/error.hpp"

namespace twodist {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs_big(a);
  b = abs_big(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int k) {
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::vanishing_at(const Rational& r) {
  return IntPolynomial(std::vector<BigInt>{-numerator(r), denominator(r)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::nth_derivative(int k) const {
  IntPolynomial p = *this;
  for (int i = 0; i < k; ++i) p = p.derivative();
  return p;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = gcd_big(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed(int e) const {
  if (is_zero()) return {};
  if (e < degree()) throw Error(ErrorKind::InvalidArgument, "reversed: exponent below degree");
  std::vector<BigInt> v(static_cast<std::size_t>(e) + 1);
  for (int i = 0; i <= degree(); ++i) v[e - i] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::scale_argument(const BigInt& k) const {
  std::vector<BigInt> v(coeffs_);
  BigInt power = 1;
  for (auto& c : v) {
    c *= power;
    power *= k;
  }
  return IntPolynomial(std::move(v));
}

namespace {

// den^deg * p(num / den), exact.
BigInt evaluate_homogeneous(std::span<const BigInt> c, const BigInt& num, const BigInt& den) {
  if (c.empty()) return 0;
  BigInt acc = c.back();
  BigInt den_power = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    den_power *= den;
    acc = acc * num + c[i] * den_power;
  }
  return acc;
}

}  // namespace

Rational IntPolynomial::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  const BigInt den = denominator(x);
  BigInt scale = 1;
  for (int i = 0; i < degree(); ++i) scale *= den;
  return Rational(evaluate_homogeneous(coeffs_, numerator(x), den), scale);
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].convert_to<double>();
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  const BigInt v = evaluate_homogeneous(coeffs_, numerator(x), denominator(x));
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs_big(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      out << mag;
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

IntPolynomial pow(const IntPolynomial& p, int k) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

DivisionResult pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "pseudo_divide by the zero polynomial");
  const int db = b.degree();
  int e = std::max(a.degree() - db + 1, 0);
  const BigInt& lc = b.leading();
  IntPolynomial q;
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const IntPolynomial s = IntPolynomial::monomial(r.leading(), r.degree() - db);
    q = lc * q + s;
    r = lc * r - s * b;
    --e;
  }
  BigInt scale = 1;
  for (int i = 0; i < e; ++i) scale *= lc;
  return {scale * q, scale * r};
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return {};
  auto [q, r] = pseudo_divide(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "divide_exact: division leaves a remainder");
  return q.primitive();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive();
  IntPolynomial y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_divide(x, y).remainder;
    x = std::move(y);
    y = r.primitive();
  }
  return x.primitive();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree part of the zero polynomial");
  if (p.degree() < 1) return IntPolynomial::constant(1);
  return divide_exact(p, gcd(p, p.derivative()));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  // Musser: a_1 = gcd(p, p'), b_1 = p / a_1; b_{i+1} = gcd(a_i, b_i) and
  // b_i / b_{i+1} collects the factors of multiplicity exactly i.
  IntPolynomial a = gcd(p, p.derivative());
  IntPolynomial b = divide_exact(p, a);
  for (int i = 1; b.degree() > 0; ++i) {
    IntPolynomial y = gcd(a, b);
    IntPolynomial f = divide_exact(b, y);
    if (f.degree() > 0) out.push_back({std::move(f), i});
    a = divide_exact(a, y);
    b = std::move(y);
  }
  return out;
}

PolyMatrix::PolyMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * size) {
  if (size < 1) throw Error(ErrorKind::InvalidArgument, "matrix size must be positive");
}

PolyMatrix::PolyMatrix(int size, std::vector<IntPolynomial> entries) : size_(size), entries_(std::move(entries)) {
  if (size < 1 || entries_.size() != static_cast<std::size_t>(size) * size) {
    throw Error(ErrorKind::InvalidArgument, "matrix entries do not form a square");
  }
}

int PolyMatrix::max_entry_degree() const {
  int d = 0;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

BigInt bareiss_determinant(std::vector<BigInt> m, int n) {
  if (n < 1 || m.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorKind::InvalidArgument, "bareiss_determinant: not a square matrix");
  }
  auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * n + j]; };
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n && pivot < 0; ++i)
        if (at(i, k) != 0) pivot = i;
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntPolynomial det_poly_matrix(const PolyMatrix& m) {
  const int n = m.size();
  const int bound = n * m.max_entry_degree();
  std::vector<Rational> values(static_cast<std::size_t>(bound) + 1);
  std::vector<BigInt> entries(static_cast<std::size_t>(n) * n);
  for (int x = 0; x <= bound; ++x) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto c = m(i, j).coefficients();
        BigInt acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        entries[static_cast<std::size_t>(i) * n + j] = std::move(acc);
      }
    }
    values[x] = bareiss_determinant(entries, n);
  }
  // Newton divided differences on the nodes 0..bound.
  for (int j = 1; j <= bound; ++j)
    for (int i = bound; i >= j; --i) values[i] = (values[i] - values[i - 1]) / j;
  std::vector<Rational> poly{values[bound]};
  for (int i = bound - 1; i >= 0; --i) {
    // poly = poly * (t - i) + values[i]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * i;
    }
    next[0] += values[i];
    poly = std::move(next);
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    if (denominator(c) != 1) throw Error(ErrorKind::InvalidArgument, "det_poly_matrix: non-integral interpolant");
    coeffs.push_back(numerator(c));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace twodist
