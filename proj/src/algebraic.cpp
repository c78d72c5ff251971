#include "twodist/algebraic.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "twodist/error.hpp"

namespace twodist {

struct AlgebraicAccess {
  static AlgebraicReal make(IntPolynomial defining, Rational lo, Rational hi) {
    return AlgebraicReal(AlgebraicReal::Unchecked{}, std::move(defining), std::move(lo), std::move(hi));
  }
};

namespace {

int sign_of(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Divide by the (positive) content without touching the sign.
IntPolynomial remove_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt c = p.content();
  std::vector<BigInt> v(p.coefficients().begin(), p.coefficients().end());
  for (auto& x : v) x /= c;
  return IntPolynomial(std::move(v));
}

Rational floor_rational(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) q -= 1;
  return Rational(q);
}

// Fraction of least denominator in [lo, hi], lo <= hi.
Rational simplest_in(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_in(-hi, -lo);
  const Rational f = floor_rational(lo);
  if (f == lo) return f;
  if (f + 1 <= hi) return f + 1;
  return f + 1 / simplest_in(1 / (hi - f), 1 / (lo - f));
}

// A point of (lo, hi) where p does not vanish, near the midpoint.
Rational split_point(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  const Rational mid = (lo + hi) / 2;
  if (p.sign_at(mid) != 0) return mid;
  Rational step = (hi - lo) / 4;
  while (true) {
    if (p.sign_at(mid + step) != 0) return mid + step;
    if (p.sign_at(mid - step) != 0) return mid - step;
    step /= 2;
  }
}

// Narrow (lo, hi), isolating a unique root of squarefree s, until no
// rational root with denominator dividing lc(s) could hide; then test the
// simplest fraction inside.
std::optional<Rational> rational_root_in(const IntPolynomial& s, Rational lo, Rational hi) {
  const BigInt lc = s.leading() < 0 ? BigInt(-s.leading()) : s.leading();
  const Rational target(BigInt(1), 2 * lc * lc);
  int slo = s.sign_at(lo);
  while (hi - lo >= target) {
    const Rational mid = (lo + hi) / 2;
    const int sm = s.sign_at(mid);
    if (sm == 0) return mid;
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Rational candidate = simplest_in(lo, hi);
  if (s.sign_at(candidate) == 0) return candidate;
  return std::nullopt;
}

AlgebraicReal make_root(const IntPolynomial& defining, const Rational& lo, const Rational& hi) {
  if (defining.degree() > 1) {
    if (auto r = rational_root_in(defining, lo, hi)) {
      return AlgebraicAccess::make(IntPolynomial::vanishing_at(*r), lo, hi);
    }
  }
  return AlgebraicAccess::make(defining.primitive(), lo, hi);
}

}  // namespace

double RationalInterval::lower_double() const { return lo.convert_to<double>(); }
double RationalInterval::upper_double() const { return hi.convert_to<double>(); }

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.contains_zero()) throw Error(ErrorKind::InvalidArgument, "interval division by an interval containing zero");
  return a * RationalInterval{1 / b.hi, 1 / b.lo};
}

RationalInterval evaluate_interval(const IntPolynomial& p, const RationalInterval& x) {
  if (p.is_zero()) return {0, 0};
  const auto c = p.coefficients();
  RationalInterval acc{Rational(c.back()), Rational(c.back())};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * x + RationalInterval{Rational(c[i]), Rational(c[i])};
  }
  return acc;
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "Sturm sequence of the zero polynomial");
  chain_.push_back(remove_content(p));
  if (p.degree() < 1) return;
  chain_.push_back(remove_content(p.derivative()));
  while (chain_.back().degree() > 0) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    // prem = lc(b)^e * rem; the next element is -rem up to a positive factor.
    const int e = a.degree() - b.degree() + 1;
    IntPolynomial r = pseudo_divide(a, b).remainder;
    if (r.is_zero()) break;
    const bool flip = b.leading() < 0 && (e % 2 == 1);
    chain_.push_back(remove_content(flip ? r : -r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_positive_infinity() const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_of(q.leading());
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_negative_infinity() const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_of(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1);
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

Rational root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root bound of the zero polynomial");
  const BigInt lead = p.leading() < 0 ? BigInt(-p.leading()) : p.leading();
  BigInt biggest = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigInt c = p.coefficient(i);
    if (c < 0) c = -c;
    biggest = std::max(biggest, c);
  }
  // Cauchy: every root satisfies |x| < 1 + max|a_i| / |a_n|.
  const BigInt cauchy = 2 + biggest / lead;
  BigInt power = 1;
  while (power < cauchy) power *= 2;
  return Rational(power);
}

AlgebraicReal::AlgebraicReal(Unchecked, IntPolynomial defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {}

AlgebraicReal::AlgebraicReal(IntPolynomial defining, Rational lo, Rational hi)
    : defining_(defining.primitive()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (defining_.degree() < 1) throw Error(ErrorKind::InvalidArgument, "AlgebraicReal: defining polynomial is constant");
  if (!(lo_ < hi_)) throw Error(ErrorKind::InvalidArgument, "AlgebraicReal: empty interval");
  if (gcd(defining_, defining_.derivative()).degree() > 0) {
    throw Error(ErrorKind::InvalidArgument, "AlgebraicReal: defining polynomial is not squarefree");
  }
  if (defining_.sign_at(lo_) == 0 || defining_.sign_at(hi_) == 0) {
    throw Error(ErrorKind::InvalidArgument, "AlgebraicReal: interval endpoint is a root");
  }
  if (SturmSequence(defining_).count_roots(lo_, hi_) != 1) {
    throw Error(ErrorKind::InvalidArgument, "AlgebraicReal: interval does not isolate exactly one root");
  }
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
  return AlgebraicAccess::make(IntPolynomial::vanishing_at(r), r - 1, r + 1);
}

std::optional<Rational> AlgebraicReal::as_rational() const {
  if (defining_.degree() != 1) return std::nullopt;
  return Rational(-defining_.coefficient(0), defining_.coefficient(1));
}

double AlgebraicReal::to_double() const {
  if (auto r = as_rational()) return r->convert_to<double>();
  const Rational scale = std::max(abs(lo_), abs(hi_));
  const Rational w = (scale > 1 ? scale : Rational(1)) * dyadic_width(60);
  const AlgebraicReal fine = refine(*this, w);
  return ((fine.lo_ + fine.hi_) / 2).convert_to<double>();
}

AlgebraicReal AlgebraicReal::reciprocal() const {
  AlgebraicReal a = *this;
  if (a.hi_ <= 0) throw Error(ErrorKind::InvalidArgument, "reciprocal: value is not positive");
  while (a.lo_ <= 0) {
    const Rational mid = split_point(a.defining_, a.lo_, a.hi_);
    if (mid <= 0) {
      if (a.defining_.sign_at(mid) == a.defining_.sign_at(a.lo_)) {
        a.lo_ = mid;
      } else {
        throw Error(ErrorKind::InvalidArgument, "reciprocal: value is not positive");
      }
      continue;
    }
    if (a.defining_.sign_at(mid) == a.defining_.sign_at(a.lo_)) {
      a.lo_ = mid;
    } else {
      a.hi_ = mid;
    }
  }
  IntPolynomial rev = a.defining_.reversed(a.defining_.degree()).primitive();
  return AlgebraicAccess::make(std::move(rev), 1 / a.hi_, 1 / a.lo_);
}

AlgebraicReal AlgebraicReal::scaled(const BigInt& k) const {
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "scaled: factor must be positive");
  const int d = defining_.degree();
  std::vector<BigInt> v(static_cast<std::size_t>(d) + 1);
  BigInt power = 1;
  for (int i = d; i >= 0; --i) {
    v[i] = defining_.coefficient(i) * power;
    power *= k;
  }
  return AlgebraicAccess::make(IntPolynomial(std::move(v)).primitive(), lo_ * k, hi_ * k);
}

std::string AlgebraicReal::to_string() const {
  std::ostringstream out;
  if (auto r = as_rational()) {
    out << *r;
  } else {
    out << "root of " << defining_.to_string() << " in (" << lo_ << ", " << hi_ << ")";
  }
  return out.str();
}

AlgebraicReal refine(const AlgebraicReal& a, const Rational& width) {
  if (width <= 0) throw Error(ErrorKind::InvalidArgument, "refine: width must be positive");
  const IntPolynomial& p = a.defining();
  Rational lo = a.lo();
  Rational hi = a.hi();
  if (auto r = a.as_rational()) {
    if (hi - lo > width) {
      lo = *r - width / 4;
      hi = *r + width / 4;
    }
    return AlgebraicAccess::make(p, lo, hi);
  }
  const int slo = p.sign_at(lo);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const int sm = p.sign_at(mid);
    if (sm == 0) {
      const Rational d = std::min({Rational(width / 4), Rational((mid - lo) / 2), Rational((hi - mid) / 2)});
      return AlgebraicAccess::make(p, mid - d, mid + d);
    }
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return AlgebraicAccess::make(p, lo, hi);
}

std::optional<RootWithMultiplicity> smallest_root_greater_than(const IntPolynomial& p, const Rational& bound) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "smallest_root_greater_than: zero polynomial");
  if (p.degree() < 1) return std::nullopt;
  const auto factors = squarefree_decomposition(p);
  IntPolynomial s = squarefree_part(p);
  if (s.sign_at(bound) == 0) s = divide_exact(s, IntPolynomial::vanishing_at(bound));
  if (s.degree() < 1) return std::nullopt;
  const SturmSequence sturm(s);
  Rational hi = root_bound(s);
  if (bound >= hi) return std::nullopt;
  Rational lo = bound;
  if (sturm.variations_at(lo) - sturm.variations_at_positive_infinity() == 0) return std::nullopt;
  while (sturm.count_roots(lo, hi) > 1) {
    const Rational mid = split_point(s, lo, hi);
    if (sturm.count_roots(lo, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // Move the left end off the bound so that no factor vanishes there.
  while (lo == bound) {
    const Rational mid = split_point(s, lo, hi);
    if (sturm.count_roots(mid, hi) == 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  for (const auto& f : factors) {
    if (SturmSequence(f.factor).count_roots(lo, hi) == 1) {
      return RootWithMultiplicity{make_root(f.factor, lo, hi), f.multiplicity};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "smallest_root_greater_than: root not attributed to a squarefree factor");
}

std::vector<RootWithMultiplicity> real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "real_roots: zero polynomial");
  std::vector<RootWithMultiplicity> out;
  if (p.degree() < 1) return out;
  const auto factors = squarefree_decomposition(p);
  const IntPolynomial s = squarefree_part(p);
  const SturmSequence sturm(s);
  const Rational bound = root_bound(s);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int c = sturm.count_roots(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const Rational mid = split_point(s, lo, hi);
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(isolated.begin(), isolated.end());
  for (const auto& [lo, hi] : isolated) {
    for (const auto& f : factors) {
      if (SturmSequence(f.factor).count_roots(lo, hi) == 1) {
        out.push_back({make_root(f.factor, lo, hi), f.multiplicity});
        break;
      }
    }
  }
  return out;
}

namespace {

bool vanishes_at(const IntPolynomial& q, const AlgebraicReal& a) {
  if (q.degree() < 1) return false;
  const IntPolynomial g = gcd(q, a.defining());
  if (g.degree() < 1) return false;
  return SturmSequence(g).count_roots(a.lo(), a.hi()) >= 1;
}

}  // namespace

int multiplicity_at(const IntPolynomial& p, const AlgebraicReal& a) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "multiplicity_at: zero polynomial");
  int k = 0;
  IntPolynomial q = p;
  while (!q.is_zero() && vanishes_at(q, a)) {
    ++k;
    q = q.derivative();
  }
  return k;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal x = a;
  AlgebraicReal y = b;
  const IntPolynomial g = gcd(a.defining(), b.defining());
  while (true) {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    if (g.degree() >= 1) {
      const Rational lo = std::max(x.lo(), y.lo());
      const Rational hi = std::min(x.hi(), y.hi());
      if (SturmSequence(g).count_roots(lo, hi) >= 1) return 0;
    }
    x = refine(x, x.width() / 2);
    y = refine(y, y.width() / 2);
  }
}

int compare(const AlgebraicReal& a, const Rational& r) {
  if (r <= a.lo()) return 1;
  if (r >= a.hi()) return -1;
  const int sr = a.defining().sign_at(r);
  if (sr == 0) return 0;
  return sr == a.defining().sign_at(a.lo()) ? 1 : -1;
}

Rational dyadic_width(int bits) {
  BigInt den = 1;
  den <<= bits;
  return Rational(BigInt(1), den);
}

}  // namespace twodist
