#include "pxpy/arithmetic.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "support/naive.hpp"

namespace pxpy {
namespace {

TEST(IntegerRoot, Examples) {
  EXPECT_EQ(integer_root(4, 2), (RootResult{2, true}));
  EXPECT_EQ(integer_root(0, 5), (RootResult{0, true}));
  EXPECT_EQ(integer_root(3, 2), (RootResult{1, false}));
  EXPECT_EQ(integer_root(16, 4), (RootResult{2, true}));
}

TEST(IntegerRoot, DegreeOneIsIdentity) {
  const Natural big = power(Natural(7), 200) + 12345;
  EXPECT_EQ(integer_root(big, 1), (RootResult{big, true}));
}

TEST(IntegerRoot, RejectsZeroDegreeAndNegativeRadicand) {
  EXPECT_THROW(integer_root(10, 0), InvalidArgument);
  EXPECT_THROW(integer_root(-4, 2), InvalidArgument);
}

TEST(IntegerRoot, FloorPropertyExhaustive) {
  for (std::uint64_t m = 0; m <= 1'000'000; ++m) {
    for (Exponent k = 1; k <= 6; ++k) {
      const RootResult r = integer_root(m, k);
      const Natural lo = power(r.root, k);
      const Natural hi = power(r.root + 1, k);
      ASSERT_TRUE(lo <= m && m < hi) << "m=" << m << " k=" << k << " root=" << r.root;
      ASSERT_EQ(r.exact, lo == m) << "m=" << m << " k=" << k;
    }
  }
}

TEST(IntegerRoot, AgreesWithBisectionOn128Bits) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 20000; ++i) {
    const naive::u128 m = (static_cast<naive::u128>(rng()) << 64) | rng();
    const unsigned k = 1 + static_cast<unsigned>(rng() % 12);
    Natural big = static_cast<std::uint64_t>(m >> 64);
    big = (big << 64) + static_cast<std::uint64_t>(m);
    const naive::u128 expect = naive::root(m, k);
    const RootResult r = integer_root(big, k);
    Natural e = static_cast<std::uint64_t>(expect >> 64);
    e = (e << 64) + static_cast<std::uint64_t>(expect);
    ASSERT_EQ(r.root, e) << "k=" << k;
  }
}

TEST(IntegerRoot, FloorPropertyRandomLarge) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    Natural m = 0;
    const int limbs = 1 + static_cast<int>(rng() % 12);
    for (int j = 0; j < limbs; ++j) m = (m << 64) + rng();
    const Exponent k = 1 + rng() % 40;
    const RootResult r = integer_root(m, k);
    ASSERT_LE(power(r.root, k), m);
    ASSERT_GT(power(r.root + 1, k), m);
  }
}

TEST(IntegerRoot, DetectsExactPowersOfLargeBases) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Natural base = (Natural(rng()) << 64) + rng();
    const Exponent k = 2 + rng() % 10;
    const Natural m = power(base, k);
    EXPECT_EQ(integer_root(m, k), (RootResult{base, true}));
    EXPECT_FALSE(integer_root(m + 1, k).exact);
    EXPECT_EQ(integer_root(m - 1, k).root, base - 1);
  }
}

TEST(PAdicValuation, Examples) {
  EXPECT_EQ(p_adic_valuation(12, 2), (Valuation{2, 3}));
  EXPECT_EQ(p_adic_valuation(6, 2), (Valuation{1, 3}));
  EXPECT_EQ(p_adic_valuation(7, 3), (Valuation{0, 7}));
}

TEST(PAdicValuation, Errors) {
  EXPECT_THROW(p_adic_valuation(0, 2), InvalidArgument);
  EXPECT_THROW(p_adic_valuation(5, 1), InvalidArgument);
  EXPECT_THROW(p_adic_valuation(5, 0), InvalidArgument);
}

TEST(PAdicValuation, DecompositionProperty) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (std::uint64_t m = 1; m <= 100'000; ++m) {
      const Valuation v = p_adic_valuation(m, p);
      ASSERT_EQ(power(Natural(p), v.e) * v.cofactor, m) << "m=" << m << " p=" << p;
      ASSERT_NE(v.cofactor % p, 0) << "m=" << m << " p=" << p;
    }
  }
}

TEST(PAdicValuation, LargePowers) {
  const Natural m = power(Natural(3), 500) * 1000;  // 1000 = 2^3 * 5^3
  EXPECT_EQ(p_adic_valuation(m, 3), (Valuation{500, 1000}));
  EXPECT_EQ(p_adic_valuation(m, 2).e, 3u);
  EXPECT_EQ(p_adic_valuation(m, 5).e, 3u);
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(3));
  EXPECT_FALSE(is_prime(4));
  ASSERT_TRUE(naive::is_prime(97));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(IsPrime, AgreesWithTrialDivisionBelowOneMillion) {
  for (std::uint64_t m = 0; m <= 1'000'000; ++m) ASSERT_EQ(is_prime(m), naive::is_prime(m)) << m;
}

TEST(IsPrime, AgreesWithTrialDivisionOnMillerRabinRange) {
  for (std::uint64_t m = 1'000'000; m <= 1'100'000; ++m) ASSERT_EQ(is_prime(m), naive::is_prime(m)) << m;
  for (std::uint64_t m = 1'000'000'000'000ULL; m <= 1'000'000'000'300ULL; ++m)
    ASSERT_EQ(is_prime(m), naive::is_prime(m)) << m;
}

TEST(IsPrime, StrongPseudoprimesAreComposite) {
  EXPECT_FALSE(is_prime(Natural("3215031751")));               // spsp to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(Natural("3825123056546413051")));      // spsp to bases 2..23
  EXPECT_FALSE(is_prime(Natural("318665857834031151167461")));  // spsp to bases 2..37
}

TEST(IsPrime, KnownLargePrimes) {
  EXPECT_TRUE(is_prime(power(Natural(2), 61) - 1));
  EXPECT_FALSE(is_prime(power(Natural(2), 67) - 1));  // 193707721 * 761838257287
  EXPECT_TRUE(is_prime(Natural("18446744073709551557")));  // largest prime below 2^64
}

TEST(IsPrime, RefusesBeyondCertifiedBound) {
  EXPECT_THROW(is_prime(power(Natural(2), 89) - 1), InvalidArgument);
}

TEST(EvalLhs, Examples) {
  EXPECT_EQ(eval_lhs(2, 3, 0), 9);
  EXPECT_EQ(eval_lhs(2, 0, 0), 2);
  EXPECT_EQ(eval_lhs(3, 2, 3), 36);
  EXPECT_THROW(eval_lhs(1, 2, 3), InvalidArgument);
}

TEST(EvalLhs, Symmetric) {
  for (unsigned p : {2u, 3u, 5u, 97u})
    for (Exponent x = 0; x <= 30; ++x)
      for (Exponent y = 0; y <= 30; ++y) ASSERT_EQ(eval_lhs(p, x, y), eval_lhs(p, y, x));
}

TEST(Parse, DecimalStrings) {
  EXPECT_EQ(parse_natural("123456789012345678901234567890"), Natural("123456789012345678901234567890"));
  EXPECT_THROW(parse_natural(""), InvalidArgument);
  EXPECT_THROW(parse_natural("-3"), InvalidArgument);
  EXPECT_THROW(parse_natural("1e5"), InvalidArgument);
  EXPECT_EQ(parse_exponent("18446744073709551615"), 18446744073709551615ULL);
  EXPECT_THROW(parse_exponent("18446744073709551616"), InvalidArgument);
}

TEST(DigitsUpperBound, Bounds) {
  for (unsigned b : {2u, 3u, 10u, 97u})
    for (Exponent e = 0; e <= 200; e += 7) EXPECT_GE(digits_upper_bound(b, e), to_decimal(power(Natural(b), e)).size());
}

}  // namespace
}  // namespace pxpy
