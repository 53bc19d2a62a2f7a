#ifndef BINFORM_TESTS_ORACLES_HPP
#define BINFORM_TESTS_ORACLES_HPP

// Reference computations for the test suites. Nothing here calls the
// library's elimination, reciprocity, or closed-form code.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "binform/matrix.hpp"

namespace oracle {

/// Legendre symbol by enumerating the squares modulo an odd prime.
inline int legendre_by_squares(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

inline bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

/// Prime factors with multiplicity by trial division.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      out.push_back(q);
      n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Jacobi symbol from its definition: product of Legendre symbols.
inline int jacobi_by_definition(std::int64_t a, std::int64_t n) {
  int out = 1;
  for (std::int64_t p : prime_factors(n)) out *= legendre_by_squares(a, p);
  return out;
}

/// Laplace expansion along the first row.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const mpz_class term = m[0][col] * cofactor_det(minor);
    total += col % 2 == 0 ? term : mpz_class(-term);
  }
  return total;
}

inline mpz_class cofactor_det(const binform::IntMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) rows[r].assign(m.row(r).begin(), m.row(r).end());
  return cofactor_det(rows);
}

inline binform::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t dim, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return binform::IntMatrix::generate(dim, [&](std::size_t, std::size_t) { return mpz_class(dist(rng)); });
}

inline binform::IntMatrix multiply(const binform::IntMatrix& a, const binform::IntMatrix& b) {
  return binform::IntMatrix::generate(a.dim(), [&](std::size_t r, std::size_t c) {
    mpz_class acc = 0;
    for (std::size_t k = 0; k < a.dim(); ++k) acc += a(r, k) * b(k, c);
    return acc;
  });
}

inline std::int64_t pow_mod_naive(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b = ((b % p) + p) % p;
  for (std::int64_t i = 0; i < e; ++i) r = r * b % p;
  return r;
}

inline std::int64_t inverse_naive(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  for (std::int64_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return 0;
}

/// Coefficients c_0..c_{p-2} of the unique polynomial of degree <= p-2 with
/// P(t) = values[t-1] for t = 1..p-1, by Lagrange interpolation over F_p.
inline std::vector<std::int64_t> interpolate(const std::vector<std::int64_t>& values, std::int64_t p) {
  const std::size_t n = values.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t xi = static_cast<std::int64_t>(i) + 1;
    std::vector<std::int64_t> basis{1};  // prod_{j != i} (T - x_j)
    std::int64_t denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const std::int64_t xj = static_cast<std::int64_t>(j) + 1;
      std::vector<std::int64_t> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = (next[k + 1] + basis[k]) % p;
        next[k] = ((next[k] - xj * basis[k]) % p + p) % p;
      }
      basis = std::move(next);
      denom = denom * (((xi - xj) % p + p) % p) % p;
    }
    const std::int64_t scale = values[i] * inverse_naive(denom, p) % p;
    for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + basis[k] * scale) % p;
  }
  return out;
}

/// Determinant over F_p by Leibniz expansion of residues (dims <= 8).
inline std::int64_t leibniz_mod(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::int64_t total = 0;
  do {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    }
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * (((m[i][perm[i]] % p) + p) % p) % p;
    total = (total + (inv % 2 ? p - term : term)) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace oracle

#endif  // BINFORM_TESTS_ORACLES_HPP
