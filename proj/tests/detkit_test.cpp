#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "binform/detkit.hpp"
#include "oracles.hpp"

namespace {

using binform::DomainError;
using binform::IntMatrix;
using binform::ResidueMatrix;
namespace detkit = binform::detkit;

TEST(Bareiss, SmallExamples) {
  EXPECT_EQ(detkit::det_bareiss(IntMatrix{{7}}), 7);
  EXPECT_EQ(detkit::det_bareiss(IntMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(detkit::det_bareiss(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(detkit::det_bareiss(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
  EXPECT_EQ(detkit::det_bareiss(IntMatrix{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}), 0);
  EXPECT_EQ(detkit::det_bareiss(IntMatrix{{0, 0}, {0, 0}}), 0);
}

TEST(Engines, AgreeWithCofactorExpansion) {
  std::mt19937_64 rng(2024);
  for (std::size_t dim = 1; dim <= 6; ++dim) {
    for (int t = 0; t < 200; ++t) {
      const IntMatrix m = oracle::random_matrix(rng, dim, -9, 9);
      const mpz_class want = oracle::cofactor_det(m);
      ASSERT_EQ(detkit::det_bareiss(m), want);
      ASSERT_EQ(detkit::det_exact(m), want);
      ASSERT_EQ(detkit::det_exact_crt(m), want);
    }
  }
}

TEST(Engines, SparseAndSingularMatrices) {
  std::mt19937_64 rng(99);
  for (std::size_t dim = 2; dim <= 6; ++dim) {
    for (int t = 0; t < 100; ++t) {
      // entries in {-1, 0, 1} give frequent zero pivots and singular matrices
      const IntMatrix m = oracle::random_matrix(rng, dim, -1, 1);
      const mpz_class want = oracle::cofactor_det(m);
      ASSERT_EQ(detkit::det_bareiss(m), want);
      ASSERT_EQ(detkit::det_exact_crt(m), want);
      for (std::uint64_t p : {3u, 5u, 13u}) {
        ASSERT_EQ(detkit::det_mod_p(m, p), detkit::to_residue(want, p));
      }
    }
  }
}

TEST(Engines, ModPAgreesWithLeibniz) {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 1000003u}) {
    for (std::size_t dim = 1; dim <= 7; ++dim) {
      for (int t = 0; t < 20; ++t) {
        const IntMatrix m = oracle::random_matrix(rng, dim, -50, 50);
        std::vector<std::vector<std::int64_t>> rows(dim, std::vector<std::int64_t>(dim));
        for (std::size_t r = 0; r < dim; ++r) {
          for (std::size_t c = 0; c < dim; ++c) rows[r][c] = m(r, c).get_si();
        }
        const auto want = static_cast<std::uint64_t>(oracle::leibniz_mod(rows, static_cast<std::int64_t>(p)));
        ASSERT_EQ(detkit::det_mod_p(m, p).value(), want);
      }
    }
  }
}

TEST(Engines, WideModulusPath) {
  // 2^61 - 1 forces the 128-bit elimination path.
  const std::uint64_t p = 2305843009213693951ULL;
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix m = oracle::random_matrix(rng, 5, -1000, 1000);
    ASSERT_EQ(detkit::det_mod_p(m, p), detkit::to_residue(oracle::cofactor_det(m), p));
  }
}

TEST(Engines, CrtPathOnLargeDimensions) {
  // Block upper-triangular with known diagonal: det is the product of the diagonal.
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> dist(-3, 3);
  const std::size_t n = 80;
  mpz_class want = 1;
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) m(r, c) = dist(rng);
    if (m(r, r) == 0) m(r, r) = 2;
    want *= m(r, r);
  }
  // Mix rows without changing the determinant.
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) += 2 * m(r - 1, c);
  }
  detkit::CrtTrace trace;
  EXPECT_EQ(detkit::det_exact_crt(m, &trace), want);
  EXPECT_EQ(detkit::det_bareiss(m), want);
  EXPECT_EQ(detkit::det_exact(m), want);
  EXPECT_GT(trace.primes_used, 1u);
  EXPECT_GT(trace.modulus * trace.modulus, 4 * detkit::hadamard_bound_squared(m));
}

TEST(Engines, CrtModulusCoversHadamardBound) {
  std::mt19937_64 rng(21);
  for (std::size_t dim = 1; dim <= 12; ++dim) {
    const IntMatrix m = oracle::random_matrix(rng, dim, -1000000, 1000000);
    detkit::CrtTrace trace;
    const mpz_class det = detkit::det_exact_crt(m, &trace);
    const mpz_class h2 = detkit::hadamard_bound_squared(m);
    ASSERT_GT(trace.modulus * trace.modulus, 4 * h2);
    ASSERT_LE(det * det, h2);
    ASSERT_EQ(det, detkit::det_bareiss(m));
  }
}

TEST(Properties, Multiplicative) {
  std::mt19937_64 rng(31);
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    for (int t = 0; t < 25; ++t) {
      const IntMatrix a = oracle::random_matrix(rng, dim, -9, 9);
      const IntMatrix b = oracle::random_matrix(rng, dim, -9, 9);
      ASSERT_EQ(detkit::det_exact(oracle::multiply(a, b)), detkit::det_exact(a) * detkit::det_exact(b));
      ASSERT_EQ(detkit::det_mod_p(oracle::multiply(a, b), 13),
                detkit::det_mod_p(a, 13) * detkit::det_mod_p(b, 13));
    }
  }
}

TEST(Properties, TransposeInvariant) {
  std::mt19937_64 rng(41);
  for (std::size_t dim = 1; dim <= 10; ++dim) {
    for (int t = 0; t < 20; ++t) {
      const IntMatrix a = oracle::random_matrix(rng, dim, -20, 20);
      ASSERT_EQ(detkit::det_exact(a), detkit::det_exact(a.transposed()));
      ASSERT_EQ(detkit::det_exact_crt(a), detkit::det_exact_crt(a.transposed()));
    }
  }
}

// lambda^m det(lambda I_l - AB) = lambda^l det(lambda I_m - BA) for A l x m, B m x l.
TEST(Properties, WeinsteinAronszajnOverF13) {
  constexpr std::uint64_t p = 13;
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> entry(0, 12);
  for (std::size_t l = 1; l <= 6; ++l) {
    for (std::size_t m = 1; m <= 6; ++m) {
      std::vector<std::vector<std::uint64_t>> a(l, std::vector<std::uint64_t>(m));
      std::vector<std::vector<std::uint64_t>> b(m, std::vector<std::uint64_t>(l));
      for (auto& row : a) {
        for (auto& v : row) v = entry(rng);
      }
      for (auto& row : b) {
        for (auto& v : row) v = entry(rng);
      }
      for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
        auto char_det = [&](const auto& x, const auto& y, std::size_t size, std::size_t inner) {
          ResidueMatrix mat = ResidueMatrix::generate(size, [&](std::size_t r, std::size_t c) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < inner; ++k) acc = (acc + x[r][k] * y[k][c]) % p;
            const std::uint64_t diag = r == c ? lambda : 0;
            return (diag + p - acc) % p;
          });
          return detkit::det_mod_p(std::move(mat), p);
        };
        const auto lhs = binform::arith::mod_pow({static_cast<std::int64_t>(lambda), p}, static_cast<std::int64_t>(m)) *
                         char_det(a, b, l, m);
        const auto rhs = binform::arith::mod_pow({static_cast<std::int64_t>(lambda), p}, static_cast<std::int64_t>(l)) *
                         char_det(b, a, m, l);
        ASSERT_EQ(lhs, rhs) << "l=" << l << " m=" << m << " lambda=" << lambda;
      }
    }
  }
}

TEST(ModP, RejectsCompositeModulus) {
  const IntMatrix m{{1, 2}, {3, 4}};
  EXPECT_THROW(detkit::det_mod_p(m, 9), DomainError);
  EXPECT_THROW(detkit::det_mod_p(m, 2), DomainError);
  EXPECT_EQ(detkit::det_mod_m(m, 9).value(), 7u);  // -2 mod 9
}

TEST(Matrix, RejectsEmptyAndRagged) {
  EXPECT_THROW(IntMatrix(0), DomainError);
  EXPECT_THROW((IntMatrix{{1, 2}, {3}}), DomainError);
}

}  // namespace
