#include <doctest.h>

#include <random>

#include "plogroup/interval.hpp"
#include "plogroup/rational.hpp"

using namespace plogroup;

namespace {

Rational rat(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

Rational random_rational(std::mt19937_64& rng) {
  long long n = static_cast<long long>(rng() % 2001) - 1000;
  long long d = static_cast<long long>(rng() % 999) + 1;
  return rat(n, d);
}

}  // namespace

TEST_CASE("fraction arithmetic on the worked examples") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(3, 4) * Rational(0) == Rational(0));
  CHECK(rat(13, 16).inverse() == rat(16, 13));
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK((-rat(1, 2)).num() == BigInt(-1));
}

TEST_CASE("always stored in lowest terms with positive denominator") {
  Rational r(BigInt(-6), BigInt(-8));
  CHECK(r.num() == BigInt(3));
  CHECK(r.den() == BigInt(4));
  Rational s(BigInt(4), BigInt(-6));
  CHECK(s.num() == BigInt(-2));
  CHECK(s.den() == BigInt(3));
}

TEST_CASE("division by zero and zero denominators are arithmetic errors") {
  CHECK_THROWS_AS(rat(1, 2) / Rational(0), arithmetic_error);
  CHECK_THROWS_AS(Rational(0).inverse(), arithmetic_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), arithmetic_error);
}

TEST_CASE("field identities hold exactly on random values") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("comparison is a total order consistent with subtraction") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    CHECK(((a < b) + (a == b) + (b < a)) == 1);
    if (a < b) CHECK((b - a) > Rational(0));
  }
}

TEST_CASE("text form p/q roundtrips and uses no denominator for integers") {
  CHECK(rat(-3, 6).str() == "-1/2");
  CHECK(Rational(17).str() == "17");
  CHECK(Rational::parse("5/6") == rat(5, 6));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("x/2"), validation_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), validation_error);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    Rational a = random_rational(rng);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("dyadic construction succeeds exactly for power-of-two denominators") {
  CHECK_NOTHROW(Dyadic(rat(3, 8)));
  CHECK_NOTHROW(Dyadic(Rational(5)));
  CHECK_NOTHROW(Dyadic(rat(7, 1024)));
  CHECK_THROWS_AS(Dyadic(rat(1, 3)), argument_error);
  CHECK_THROWS_AS(Dyadic(rat(5, 6)), argument_error);
  CHECK_THROWS_AS(Dyadic(rat(1, 12)), argument_error);
  CHECK(rat(6, 4).is_dyadic());  // 3/2 in lowest terms
}

TEST_CASE("interval relations on the worked examples") {
  OpenInterval a(rat(1, 8), rat(7, 8));
  OpenInterval b(rat(3, 16), rat(13, 16));
  CHECK(interval_relation(a, b).order == IntervalOrder::ProperSuperset);
  CHECK(interval_relation(b, a).order == IntervalOrder::ProperSubset);

  OpenInterval c(Rational(0), rat(1, 2));
  CHECK(interval_relation(c, c).order == IntervalOrder::Equal);
  CHECK_FALSE(interval_relation(c, c).shares_end);

  OpenInterval d(Rational(0), rat(5, 8));
  OpenInterval e(rat(3, 8), Rational(1));
  CHECK(interval_relation(d, e).order == IntervalOrder::Overlap);
}

TEST_CASE("shared endpoints flag only with proper containment") {
  OpenInterval outer(Rational(0), Rational(1));
  OpenInterval inner(Rational(0), rat(1, 2));
  auto rel = interval_relation(inner, outer);
  CHECK(rel.order == IntervalOrder::ProperSubset);
  CHECK(rel.shares_end);
  // Touching open intervals are disjoint and share nothing.
  auto touch = interval_relation(OpenInterval(Rational(0), rat(1, 2)), OpenInterval(rat(1, 2), Rational(1)));
  CHECK(touch.order == IntervalOrder::Disjoint);
  CHECK_FALSE(touch.shares_end);
}

TEST_CASE("relation symmetry: containment flips, the rest are symmetric") {
  std::mt19937_64 rng(10);
  auto random_interval = [&]() {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    if (a == b) b = a + Rational(1);
    return a < b ? OpenInterval(a, b) : OpenInterval(b, a);
  };
  for (int t = 0; t < 200; ++t) {
    OpenInterval a = random_interval();
    OpenInterval b = random_interval();
    auto ab = interval_relation(a, b).order;
    auto ba = interval_relation(b, a).order;
    switch (ab) {
      case IntervalOrder::ProperSubset: CHECK(ba == IntervalOrder::ProperSuperset); break;
      case IntervalOrder::ProperSuperset: CHECK(ba == IntervalOrder::ProperSubset); break;
      default: CHECK(ab == ba);
    }
  }
}

TEST_CASE("degenerate intervals are rejected") {
  CHECK_THROWS_AS(OpenInterval(rat(1, 2), rat(1, 2)), argument_error);
  CHECK_THROWS_AS(OpenInterval(rat(3, 4), rat(1, 4)), argument_error);
}
