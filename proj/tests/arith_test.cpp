#include <cstdint>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "binform/arith.hpp"
#include "oracles.hpp"

namespace {

using binform::DomainError;
using binform::ModulusMismatch;
using binform::PoleError;
using binform::arith::Residue;
namespace arith = binform::arith;

TEST(Jacobi, Examples) {
  EXPECT_EQ(arith::jacobi(7, 1), 1);
  EXPECT_EQ(arith::jacobi(0, 9), 0);
  EXPECT_EQ(arith::jacobi(2, 15), 1);  // (2/3)(2/5) = (-1)(-1)
}

TEST(Jacobi, RejectsEvenOrNonpositiveModulus) {
  EXPECT_THROW(arith::jacobi(3, 8), DomainError);
  EXPECT_THROW(arith::jacobi(3, 0), DomainError);
  EXPECT_THROW(arith::jacobi(3, -5), DomainError);
}

TEST(Jacobi, MatchesDefinitionalProduct) {
  for (std::int64_t n = 1; n <= 10000; n += 2) {
    // every residue for small n, a strided sample above
    const std::int64_t step = n <= 400 ? 1 : n / 97 + 1;
    for (std::int64_t a = 0; a < n; a += step) {
      ASSERT_EQ(arith::jacobi(a, n), oracle::jacobi_by_definition(a, n)) << "a=" << a << " n=" << n;
    }
  }
}

TEST(Jacobi, PeriodicAndMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> big(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> odd(0, 5000);
  for (int t = 0; t < 5000; ++t) {
    const std::int64_t n = 2 * odd(rng) + 1;
    const std::int64_t a = big(rng);
    const std::int64_t b = big(rng);
    ASSERT_EQ(arith::jacobi(a, n), arith::jacobi(((a % n) + n) % n, n));
    ASSERT_EQ(arith::jacobi(a * b, n), arith::jacobi(a, n) * arith::jacobi(b, n));
  }
}

TEST(Jacobi, PrimeModulusMatchesSquareSet) {
  for (std::int64_t p = 3; p <= 997; p += 2) {
    if (!oracle::is_prime_trial(p)) continue;
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::int64_t a = 1; a < p; ++a) {
      ASSERT_EQ(arith::jacobi(a, p) == 1, squares.count(a) == 1) << "a=" << a << " p=" << p;
    }
  }
}

TEST(RationalModP, Examples) {
  EXPECT_EQ(arith::rational_mod_p(2, 3, 7).value(), 3u);
  EXPECT_EQ(arith::rational_mod_p(5, 1, 7).value(), 5u);
  EXPECT_EQ(arith::rational_mod_p(1, 2, 5).value(), 3u);
  EXPECT_EQ(arith::rational_mod_p(-1, 3, 7).value(), 2u);  // 3 * 2 = 6 = -1
}

TEST(RationalModP, PoleAndBadModulus) {
  EXPECT_THROW(arith::rational_mod_p(1, 14, 7), PoleError);
  EXPECT_THROW(arith::rational_mod_p(1, 2, 9), DomainError);
  EXPECT_THROW(arith::rational_mod_p(1, 3, 2), DomainError);
}

TEST(RationalModP, ReMultiplicationRecoversNumerator) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> dist(-1000000000, 1000000000);
  for (std::uint64_t p : {3, 5, 7, 101, 997, 1000003}) {
    const auto sp = static_cast<std::int64_t>(p);
    for (int t = 0; t < 1000; ++t) {
      const std::int64_t a = dist(rng);
      std::int64_t b = dist(rng);
      if (b % sp == 0) b += 1;
      const Residue r = arith::rational_mod_p(a, b, p);
      ASSERT_LT(r.value(), p);
      ASSERT_EQ(Residue(b, p) * r, Residue(a, p));
    }
  }
}

TEST(LegendreOfPadic, Examples) {
  EXPECT_EQ(arith::legendre_of_padic(2, 3, 7), -1);  // 2/3 = 3, a non-square mod 7
  EXPECT_EQ(arith::legendre_of_padic(0, 1, 5), 0);
  EXPECT_EQ(arith::legendre_of_padic(1, 1, 11), 1);
  EXPECT_THROW(arith::legendre_of_padic(1, 11, 11), PoleError);
}

TEST(LegendreOfPadic, EqualsSymbolOfProduct) {
  for (std::int64_t num = -20; num <= 20; ++num) {
    for (std::int64_t den = 1; den <= 20; ++den) {
      if (den % 13 == 0) continue;
      EXPECT_EQ(arith::legendre_of_padic(num, den, 13), arith::jacobi(num * den, 13));
    }
  }
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(arith::factorize(1).factors.empty());
  const auto f45 = arith::factorize(45).factors;
  ASSERT_EQ(f45.size(), 2u);
  EXPECT_EQ(f45[0], (arith::PrimePower{3, 2}));
  EXPECT_EQ(f45[1], (arith::PrimePower{5, 1}));
  const auto f9973 = arith::factorize(9973).factors;
  ASSERT_EQ(f9973.size(), 1u);
  EXPECT_EQ(f9973[0], (arith::PrimePower{9973, 1}));
  EXPECT_THROW(arith::factorize(0), DomainError);
}

TEST(Factorize, LargeCofactorsUsePollard) {
  // (2^31-1) * (2^61-1) overflows; use two primes near 2^31 and 2^32.
  const std::uint64_t p = 2147483647ULL;
  const std::uint64_t q = 4294967291ULL;
  const auto f = arith::factorize(p * q);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, p);
  EXPECT_EQ(f.factors[1].prime, q);
  const auto g = arith::factorize(1000003ULL * 1000003ULL * 1000033ULL);
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0], (arith::PrimePower{1000003, 2}));
  EXPECT_EQ(g.factors[1], (arith::PrimePower{1000033, 1}));
}

TEST(Factorize, InvariantsHold) {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const auto f = arith::factorize(n);
    std::uint64_t product = 1;
    std::uint64_t last = 0;
    for (const auto& [p, e] : f.factors) {
      ASSERT_GT(p, last);
      ASSERT_GE(e, 1u);
      ASSERT_TRUE(oracle::is_prime_trial(static_cast<std::int64_t>(p)));
      for (unsigned i = 0; i < e; ++i) product *= p;
      last = p;
    }
    ASSERT_EQ(product, n);
  }
}

TEST(MultiplicativeFunctions, Examples) {
  const auto f15 = arith::factorize(15);
  EXPECT_EQ(arith::totient(f15), 8u);
  EXPECT_EQ(arith::moebius(f15), 1);
  const auto f9 = arith::factorize(9);
  EXPECT_EQ(arith::totient(f9), 6u);
  EXPECT_EQ(arith::moebius(f9), 0);
  EXPECT_FALSE(arith::is_squarefree(f9));
  EXPECT_EQ(arith::moebius(arith::factorize(30)), -1);
  EXPECT_EQ(arith::totient(arith::factorize(1)), 1u);
}

TEST(MultiplicativeFunctions, TotientCountsCoprimes) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    ASSERT_EQ(arith::totient(arith::factorize(n)), count) << n;
    const auto f = arith::factorize(n);
    ASSERT_EQ(arith::moebius(f) == 0, !arith::is_squarefree(f));
  }
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::int64_t n = 0; n < 100000; ++n) {
    ASSERT_EQ(arith::is_prime(static_cast<std::uint64_t>(n)), oracle::is_prime_trial(n)) << n;
  }
  EXPECT_TRUE(arith::is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(arith::is_prime(3215031751ULL));           // strong pseudoprime to 2,3,5,7
}

TEST(Residue, ArithmeticAndMismatch) {
  const Residue a(5, 7);
  const Residue b(-3, 7);
  EXPECT_EQ(b.value(), 4u);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((a - b).value(), 1u);
  EXPECT_EQ((a * b).value(), 6u);
  EXPECT_EQ(Residue(6, 7).symmetric(), -1);
  EXPECT_EQ(a.str(), "5 mod 7");
  EXPECT_THROW(a + Residue(1, 11), ModulusMismatch);
  EXPECT_THROW(a * Residue(1, 11), ModulusMismatch);
  EXPECT_THROW(Residue(1, 1), DomainError);
  EXPECT_THROW(Residue(0, 7).inverse(), PoleError);
}

TEST(ModPow, Examples) {
  EXPECT_EQ(arith::mod_pow(Residue(2, 5), -1).value(), 3u);
  for (std::int64_t x = 1; x < 11; ++x) EXPECT_EQ(arith::mod_pow(Residue(x, 11), 0).value(), 1u);
  EXPECT_EQ(arith::mod_pow(Residue(3, 7), 6).value(), 1u);
  EXPECT_EQ(arith::mod_pow(Residue(3, 7), -2), arith::mod_pow(Residue(5, 7), 2));
  EXPECT_THROW(arith::mod_pow(Residue(3, 9), -1), PoleError);
  EXPECT_EQ(arith::mod_pow(Residue(0, 7), 0).value(), 1u);
}

TEST(ModPow, AgreesWithRepeatedMultiplication) {
  for (std::int64_t p : {5, 7, 13, 97}) {
    for (std::int64_t b = 0; b < p; ++b) {
      for (std::int64_t e = 0; e < 3 * p; ++e) {
        ASSERT_EQ(static_cast<std::int64_t>(arith::mod_pow(Residue(b, p), e).value()),
                  oracle::pow_mod_naive(b, e, p));
      }
    }
  }
}

// sum_{i=0}^{p-1} i^k = -1 when k > 0 and (p-1) | k, else 0.
TEST(PowerSums, FullRangeIdentity) {
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!oracle::is_prime_trial(p)) continue;
    for (std::int64_t k = 0; k <= 3 * (p - 1); ++k) {
      std::int64_t sum = 0;
      for (std::int64_t i = 0; i < p; ++i) sum = (sum + oracle::pow_mod_naive(i, k, p)) % p;
      const std::int64_t expected = (k > 0 && k % (p - 1) == 0) ? p - 1 : 0;
      ASSERT_EQ(sum, expected) << "p=" << p << " k=" << k;
      ASSERT_EQ(static_cast<std::int64_t>(arith::power_sum_prediction(static_cast<std::uint64_t>(k), p).value()),
                sum);
    }
  }
}

// sum_{i=2}^{p-2} i^k = -3, -2, 0 as (p-1) | k, 2 | k only, k odd.
TEST(PowerSums, InnerRangeIdentity) {
  for (std::int64_t p = 5; p <= 97; p += 2) {
    if (!oracle::is_prime_trial(p)) continue;
    for (std::int64_t k = 0; k <= 3 * (p - 1); ++k) {
      std::int64_t sum = 0;
      for (std::int64_t i = 2; i <= p - 2; ++i) sum = (sum + oracle::pow_mod_naive(i, k, p)) % p;
      ASSERT_EQ(static_cast<std::int64_t>(
                    arith::inner_power_sum_prediction(static_cast<std::uint64_t>(k), p).value()),
                sum)
          << "p=" << p << " k=" << k;
    }
  }
}

}  // namespace
