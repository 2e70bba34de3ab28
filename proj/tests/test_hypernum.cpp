#include <doctest.h>

#include "lexstate/hypernum.hpp"
#include "oracles.hpp"

using namespace lexstate;

namespace {

constexpr std::int64_t kD = 60;

DualRational dual(std::int64_t r_num, std::int64_t r_den, std::int64_t s_num, std::int64_t s_den = 1) {
  return {Rational(r_num, r_den), Rational(s_num, s_den)};
}

DualRational from_scaled(oracle::Scaled v) { return {Rational(v.r, kD), Rational(v.s, kD)}; }

oracle::Scaled random_scaled(oracle::Gen& g) {
  for (;;) {
    oracle::Scaled v{g.integer(0, kD), g.integer(-3 * kD, 3 * kD)};
    if (g.integer(0, 3) == 0) v.r = g.coin() ? 0 : kD;
    if ((v.r == 0 && v.s < 0) || (v.r == kD && v.s > 0)) continue;
    return v;
  }
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3, 4)) == Rational(1, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("+2/4") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational overflow is reported, not wrapped") {
  const Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), ArithmeticOverflow);
  CHECK_THROWS_AS(big * Rational(2), ArithmeticOverflow);
  CHECK((big - big).is_zero());
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare(dual(1, 2, 5), dual(1, 2, 5)) == std::strong_ordering::equal);
  CHECK(lex_compare(dual(1, 2, -100), dual(1, 3, 100)) == std::strong_ordering::greater);
  CHECK(lex_compare(dual(1, 2, 1), dual(1, 2, 0)) == std::strong_ordering::greater);
}

TEST_CASE("mv_oplus") {
  CHECK(mv_oplus(dual(1, 1, -2), dual(0, 1, 3)) == dual(1, 1, 0));
  const DualRational x = dual(2, 7, -5, 3);
  CHECK(mv_oplus(DualRational::zero(), x) == x);
  CHECK(mv_oplus(dual(1, 3, 1), dual(1, 3, -2)) == dual(2, 3, -1));
}

TEST_CASE("mv_otimes") {
  CHECK(mv_otimes(dual(1, 2, 1), dual(1, 2, 1)) == dual(0, 1, 2));
  const DualRational x = dual(2, 7, -5, 3);
  CHECK(mv_otimes(DualRational::one(), x) == x);
  CHECK(mv_otimes(dual(1, 4, 0), dual(1, 4, 0)) == DualRational::zero());
}

TEST_CASE("mv_neg") {
  CHECK(mv_neg(dual(1, 2, 3)) == dual(1, 2, -3));
  CHECK(mv_neg(DualRational::one()) == DualRational::zero());
  CHECK(mv_neg(dual(0, 1, 2)) == dual(1, 1, -2));
}

TEST_CASE("parts") {
  auto [r, s] = parts(dual(1, 1, -7));
  CHECK(r == Rational(1));
  CHECK(s == Rational(-7));
  auto [r0, s0] = parts(DualRational::zero());
  CHECK(r0.is_zero());
  CHECK(s0.is_zero());
}

TEST_CASE("interval invariant is enforced") {
  CHECK_THROWS_AS(dual(0, 1, -1), OutOfUnitInterval);
  CHECK_THROWS_AS(dual(1, 1, 1), OutOfUnitInterval);
  CHECK_THROWS_AS(dual(3, 2, 0), OutOfUnitInterval);
  CHECK_THROWS_AS(dual(-1, 2, 0), OutOfUnitInterval);
  CHECK_NOTHROW(dual(0, 1, 4));
  CHECK_NOTHROW(dual(1, 1, -4));
}

TEST_CASE("text form round trips") {
  CHECK(DualRational::zero().str() == "0+e0");
  CHECK(dual(1, 2, -3, 4).str() == "1/2+e-3/4");
  CHECK(DualRational::parse("1/2+e-3/4") == dual(1, 2, -3, 4));
  CHECK_THROWS(DualRational::parse("0+e-1"));
  CHECK_THROWS(DualRational::parse("1/2"));
  CHECK(LexValue::parse("-2+e5") == LexValue{Rational(-2), Rational(5)});

  oracle::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    const DualRational x = from_scaled(random_scaled(g));
    CHECK(DualRational::parse(x.str()) == x);
  }
}

TEST_CASE("MV operations agree with the scaled-integer oracle") {
  oracle::Gen g(2024);
  for (int i = 0; i < 5000; ++i) {
    const oracle::Scaled a = random_scaled(g), b = random_scaled(g);
    const DualRational x = from_scaled(a), y = from_scaled(b);
    REQUIRE(mv_oplus(x, y) == from_scaled(oracle::scaled_oplus(a, b, kD)));
    REQUIRE(mv_otimes(x, y) == from_scaled(oracle::scaled_otimes(a, b, kD)));
    REQUIRE(mv_neg(x) == from_scaled({kD - a.r, -a.s}));
    const auto expected = a < b ? std::strong_ordering::less
                          : a == b ? std::strong_ordering::equal
                                   : std::strong_ordering::greater;
    REQUIRE(lex_compare(x, y) == expected);
  }
}

TEST_CASE("MV-algebra laws on random values") {
  oracle::Gen g(77);
  for (int i = 0; i < 2000; ++i) {
    const DualRational x = from_scaled(random_scaled(g)), y = from_scaled(random_scaled(g)),
                       z = from_scaled(random_scaled(g));
    REQUIRE(mv_neg(mv_neg(x)) == x);
    REQUIRE(mv_oplus(x, y) == mv_oplus(y, x));
    REQUIRE(mv_oplus(mv_oplus(x, y), z) == mv_oplus(x, mv_oplus(y, z)));
    REQUIRE(mv_oplus(x, mv_neg(x)) == DualRational::one());
    REQUIRE(mv_otimes(x, y) == mv_neg(mv_oplus(mv_neg(x), mv_neg(y))));
    // ¬(¬x ⊕ y) ⊕ y = ¬(¬y ⊕ x) ⊕ x
    REQUIRE(mv_oplus(mv_neg(mv_oplus(mv_neg(x), y)), y) == mv_oplus(mv_neg(mv_oplus(mv_neg(y), x)), x));
    const auto [r, s] = parts(x);
    REQUIRE(DualRational(r, s) == x);
  }
}
