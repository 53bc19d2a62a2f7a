#ifndef BINFORM_DETKIT_HPP
#define BINFORM_DETKIT_HPP

// Determinant engines: fraction-free elimination and multi-modular CRT over
// the integers, Gaussian elimination over prime fields.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "binform/arith.hpp"
#include "binform/matrix.hpp"

namespace binform::detkit {

using arith::Residue;

/// det_exact uses Bareiss up to this dimension and CRT above it.
inline constexpr std::size_t kBareissCutoff = 64;

inline Residue to_residue(const mpz_class& v, std::uint64_t modulus) {
  Residue probe(0, modulus);  // validates the modulus
  return Residue(static_cast<std::int64_t>(mpz_fdiv_ui(v.get_mpz_t(), modulus)), probe.modulus());
}

namespace detail {

/// In-place elimination of the n x n row-major block `a` over F_p. Entries
/// must already lie in [0, p). Pivot: first nonzero entry in the column.
template <bool kNarrow>
std::uint64_t eliminate(std::span<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  auto mul = [p](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
    if constexpr (kNarrow) {
      return x * y % p;
    } else {
      return arith::mul_mod(x, y, p);
    }
  };
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    std::uint64_t* rowk = &a[k * n];
    if (piv != k) {
      std::swap_ranges(rowk + k, rowk + n, &a[piv * n + k]);
      det = p - det;  // det is never 0 here
    }
    det = mul(det, rowk[k]);
    const std::uint64_t inv = arith::inverse_mod(rowk[k], p);
    for (std::size_t j = k + 1; j < n; ++j) rowk[j] = mul(rowk[j], inv);
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t* rowi = &a[i * n];
      const std::uint64_t f = rowi[k];
      if (f == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        const std::uint64_t t = mul(f, rowk[j]);
        rowi[j] = rowi[j] >= t ? rowi[j] - t : rowi[j] + p - t;
      }
    }
  }
  return det;
}

inline std::uint64_t eliminate_mod(std::span<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  return p < (std::uint64_t{1} << 32) ? eliminate<true>(a, n, p) : eliminate<false>(a, n, p);
}

/// Primes below 2^31 in decreasing order; the CRT moduli.
inline const std::vector<std::uint64_t>& crt_prime_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = (std::uint64_t{1} << 31) - 1; out.size() < 256; q -= 2) {
      if (arith::is_prime(q)) out.push_back(q);
    }
    return out;
  }();
  return table;
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination.
inline mpz_class det_bareiss(IntMatrix m) {
  const std::size_t n = m.dim();
  int sign = 1;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    const mpz_class& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), m(i, j).get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(t.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        assert(mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  mpz_class det = m(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

/// Square of the Hadamard bound: product over rows of the squared row norm.
inline mpz_class hadamard_bound_squared(const IntMatrix& m) {
  mpz_class bound = 1;
  mpz_class norm;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    norm = 0;
    for (const mpz_class& v : m.row(r)) mpz_addmul(norm.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    bound *= norm;
  }
  return bound;
}

/// Number of CRT primes and the accumulated modulus used by the last lift;
/// exposed for the soundness check (modulus > 2 * Hadamard bound).
struct CrtTrace {
  std::size_t primes_used = 0;
  mpz_class modulus = 1;
};

/// Exact determinant from residues modulo 31-bit primes, lifted by CRT into
/// the symmetric range (-M/2, M/2] once M exceeds twice the Hadamard bound.
inline mpz_class det_exact_crt(const IntMatrix& m, CrtTrace* trace = nullptr) {
  const std::size_t n = m.dim();
  const mpz_class limit = 4 * hadamard_bound_squared(m);  // compare M^2 against (2H)^2
  const auto& table = detail::crt_prime_table();

  mpz_class modulus = 1;
  mpz_class value = 0;
  std::vector<std::uint64_t> work(n * n);
  std::size_t used = 0;
  std::uint64_t q = table.back();
  while (modulus * modulus <= limit) {
    if (used < table.size()) {
      q = table[used];
    } else {
      do q -= 2;
      while (!arith::is_prime(q));
    }
    ++used;
    const auto entries = m.entries();
    for (std::size_t e = 0; e < entries.size(); ++e) work[e] = mpz_fdiv_ui(entries[e].get_mpz_t(), q);
    const std::uint64_t r = detail::eliminate<true>(work, n, q);

    const std::uint64_t x_q = mpz_fdiv_ui(value.get_mpz_t(), q);
    const std::uint64_t m_q = mpz_fdiv_ui(modulus.get_mpz_t(), q);
    const std::uint64_t diff = r >= x_q ? r - x_q : r + q - x_q;
    const std::uint64_t t = diff * arith::inverse_mod(m_q, q) % q;
    mpz_addmul_ui(value.get_mpz_t(), modulus.get_mpz_t(), t);
    modulus *= static_cast<unsigned long>(q);
  }
  assert(modulus * modulus > limit);
  if (value > modulus / 2) value -= modulus;
  if (trace != nullptr) {
    trace->primes_used = used;
    trace->modulus = modulus;
  }
  return value;
}

/// Exact determinant: Bareiss for dim <= kBareissCutoff, CRT above.
inline mpz_class det_exact(const IntMatrix& m) {
  return m.dim() <= kBareissCutoff ? det_bareiss(m) : det_exact_crt(m);
}

/// det(m) mod p by Gaussian elimination over F_p.
inline Residue det_mod_p(const IntMatrix& m, std::uint64_t p) {
  arith::require_odd_prime(p, "det_mod_p");
  std::vector<std::uint64_t> work(m.dim() * m.dim());
  const auto entries = m.entries();
  for (std::size_t e = 0; e < entries.size(); ++e) work[e] = mpz_fdiv_ui(entries[e].get_mpz_t(), p);
  return Residue(static_cast<std::int64_t>(detail::eliminate_mod(work, m.dim(), p)), p);
}

inline Residue det_mod_p(ResidueMatrix m, std::uint64_t p) {
  arith::require_odd_prime(p, "det_mod_p");
  for (auto& v : m.entries()) v %= p;
  return Residue(static_cast<std::int64_t>(detail::eliminate_mod(m.entries(), m.dim(), p)), p);
}

/// det(m) reduced into [0, modulus) for any modulus >= 2, via the exact value.
inline Residue det_mod_m(const IntMatrix& m, std::uint64_t modulus) {
  return to_residue(det_exact(m), modulus);
}

}  // namespace binform::detkit

#endif  // BINFORM_DETKIT_HPP
