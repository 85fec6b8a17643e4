#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "powergraph/rational.hpp"

using namespace powergraph;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(3, -9).num() == -1);
  CHECK(Rational(3, -9).den() == 3);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), PreconditionFailed);
}

TEST_CASE("arithmetic tracks a floating-point oracle on random small values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 24);
  for (int i = 0; i < 400; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    double da = (double)a.num() / (double)a.den();
    double db = (double)b.num() / (double)b.den();
    auto close = [](const Rational& r, double d) {
      return std::abs((double)r.num() / (double)r.den() - d) < 1e-9;
    };
    CHECK(close(a + b, da + db));
    CHECK(close(a - b, da - db));
    CHECK(close(a * b, da * db));
    if (!b.is_zero()) CHECK(close(a / b, da / db));
    CHECK(((a < b) == (da < db - 1e-12) || std::abs(da - db) < 1e-12));
  }
}

TEST_CASE("exact identities") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionFailed);
}

TEST_CASE("ordering is a strict total order consistent with subtraction") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    bool lt = a < b;
    bool gt = b < a;
    bool eq = a == b;
    CHECK((lt + gt + eq) == 1);
    if (lt) CHECK((b - a).num() > 0);
  }
}

TEST_CASE("overflow in arithmetic throws instead of wrapping") {
  Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, PreconditionFailed);
  CHECK_THROWS_AS(big + big, PreconditionFailed);
}

TEST_CASE("integer_ratio solves b = n a exactly") {
  CHECK(Rational::integer_ratio(Rational(6), Rational(2)) == 3);
  CHECK(Rational::integer_ratio(Rational(-6), Rational(2)) == -3);
  CHECK(Rational::integer_ratio(Rational(1, 2), Rational(1, 4)) == 2);
  CHECK_FALSE(Rational::integer_ratio(Rational(1, 4), Rational(1, 2)).has_value());
  CHECK_FALSE(Rational::integer_ratio(Rational(3), Rational(2)).has_value());
  CHECK_FALSE(Rational::integer_ratio(Rational(3), Rational(0)).has_value());
}

TEST_CASE("string form") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("prime helpers against a naive divisor scan") {
  auto naive_prime = [](std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d < n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::int64_t n = 0; n <= 200; ++n) CHECK(is_prime(n) == naive_prime(n));
  CHECK(primes_up_to(20) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(valuation(48, 2) == 4);
  CHECK(valuation(-48, 3) == 1);
  CHECK(valuation(7, 2) == 0);
  CHECK_THROWS_AS(valuation(0, 2), PreconditionFailed);
  CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(prime_factors(-17) == std::vector<std::int64_t>{17});
  CHECK(prime_factors(1).empty());
  CHECK_THROWS_AS(prime_factors(0), PreconditionFailed);
}
