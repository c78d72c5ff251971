#include <doctest.h>

#include <cmath>
#include <random>

#include "twodist/algebraic.hpp"

using namespace twodist;

TEST_SUITE("algebraic") {
  TEST_CASE("smallest root above a bound") {
    const auto r = smallest_root_greater_than(IntPolynomial{0, -4, 1}, Rational(1));
    REQUIRE(r);
    CHECK(r->multiplicity == 1);
    REQUIRE(r->root.as_rational());
    CHECK(*r->root.as_rational() == 4);
    CHECK_FALSE(smallest_root_greater_than(IntPolynomial{0, -4, 1}, Rational(4)));
  }

  TEST_CASE("cross-polytope polynomial has a multiple root at two") {
    // 6 t^3 (2 - t)^2
    const IntPolynomial p = IntPolynomial::monomial(6, 3) * pow(IntPolynomial{2, -1}, 2);
    const auto r = smallest_root_greater_than(p, Rational(1));
    REQUIRE(r);
    CHECK(r->multiplicity == 2);
    CHECK(*r->root.as_rational() == 2);
  }

  TEST_CASE("golden ratio refinement") {
    const auto roots = real_roots(IntPolynomial{-1, -1, 1});
    REQUIRE(roots.size() == 2);
    const AlgebraicReal phi = refine(roots[1].root, Rational(1, 1000000000000LL));
    CHECK(phi.width() <= Rational(1, 1000000000000LL));
    CHECK(phi.lo() < Rational(16180339887498949LL, 10000000000000000LL));
    CHECK(phi.hi() > Rational(16180339887498948LL, 10000000000000000LL));
    CHECK(phi.to_double() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
  }

  TEST_CASE("Sturm counts") {
    const SturmSequence s(IntPolynomial{0, -4, 0, 1});  // t^3 - 4t, roots -2, 0, 2
    CHECK(s.count_roots(Rational(-3), Rational(3)) == 3);
    CHECK(s.count_roots(Rational(-1), Rational(1)) == 1);
    CHECK(s.variations_at_negative_infinity() - s.variations_at_positive_infinity() == 3);
    CHECK(root_bound(IntPolynomial{0, -4, 0, 1}) > 2);
  }

  TEST_CASE("multiplicity at an irrational root") {
    const auto roots = real_roots(IntPolynomial{1, -3, 1});  // (3 +- sqrt 5) / 2
    REQUIRE(roots.size() == 2);
    const AlgebraicReal& a = roots[1].root;
    const IntPolynomial q{1, -3, 1};
    CHECK(multiplicity_at(q, a) == 1);
    CHECK(multiplicity_at(pow(q, 3) * IntPolynomial{0, 1}, a) == 3);
    CHECK(multiplicity_at(IntPolynomial{0, -4, 1}, a) == 0);
  }

  TEST_CASE("multiplicity on random constructed products") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      const long long c = 2 + static_cast<long long>(rng() % 20);
      const IntPolynomial q{-c, 0, 1};  // root sqrt(c) unless c is a square
      const int e = 1 + static_cast<int>(rng() % 4);
      const IntPolynomial p = pow(q, e) * IntPolynomial{-1, 1};
      const auto r = smallest_root_greater_than(p, Rational(1));
      REQUIRE(r);
      CHECK(r->multiplicity == e);
      CHECK(r->root.to_double() == doctest::Approx(std::sqrt(static_cast<double>(c))));
    }
  }

  TEST_CASE("exact comparison and transforms") {
    const auto roots = real_roots(IntPolynomial{-2, 0, 1});
    const AlgebraicReal s2 = roots[1].root;
    CHECK(compare(s2, Rational(141, 100)) == 1);
    CHECK(compare(s2, Rational(142, 100)) == -1);
    CHECK(compare(s2, s2) == 0);
    CHECK(compare(s2, s2.scaled(2)) == -1);
    CHECK(s2.reciprocal().to_double() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(compare(s2.reciprocal().scaled(2), s2) == 0);
    CHECK(AlgebraicReal::from_rational(Rational(3, 7)).as_rational() == Rational(3, 7));
  }

  TEST_CASE("interval evaluation encloses") {
    const IntPolynomial p{1, -3, 0, 2};
    const RationalInterval x{Rational(1, 3), Rational(1, 2)};
    const RationalInterval y = evaluate_interval(p, x);
    for (int i = 0; i <= 10; ++i) {
      const Rational s = x.lo + (x.hi - x.lo) * i / 10;
      CHECK(y.contains(p.evaluate(s)));
    }
  }

  TEST_CASE("invalid isolating interval is rejected") {
    CHECK_THROWS(AlgebraicReal(IntPolynomial{0, -4, 0, 1}, Rational(-3), Rational(3)));
    CHECK_THROWS(AlgebraicReal(IntPolynomial{0, -4, 0, 1}, Rational(2), Rational(3)));
  }
}
