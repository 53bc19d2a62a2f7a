#ifndef BINFORM_ARITH_HPP
#define BINFORM_ARITH_HPP

// Elementary number theory on 64-bit integers: residues, Jacobi symbols,
// factorization, and the multiplicative functions built on it.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "binform/errors.hpp"

namespace binform::arith {

using i128 = __int128;
using u128 = unsigned __int128;

/// Reduces v into [0, m).
inline std::uint64_t reduce(i128 v, std::uint64_t m) {
  i128 r = v % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  i128 old_r = a % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) return 0;
  return reduce(old_s, m);
}

// ---------------------------------------------------------------------------
// Residue

/// An integer reduced into [0, m) together with its modulus m >= 2.
class Residue {
 public:
  Residue(std::int64_t value, std::uint64_t modulus) : modulus_(checked(modulus)) {
    value_ = reduce(value, modulus_);
  }

  static Residue from_wide(i128 value, std::uint64_t modulus) {
    Residue r(0, modulus);
    r.value_ = reduce(value, modulus);
    return r;
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  /// Representative in (-m/2, m/2].
  std::int64_t symmetric() const {
    return value_ > modulus_ / 2 ? static_cast<std::int64_t>(value_) - static_cast<std::int64_t>(modulus_)
                                 : static_cast<std::int64_t>(value_);
  }

  bool invertible() const { return std::gcd(value_, modulus_) == 1; }

  Residue inverse() const {
    std::uint64_t inv = inverse_mod(value_, modulus_);
    if (inv == 0) throw PoleError("residue " + str() + " is not invertible");
    return raw(inv, modulus_);
  }

  Residue operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  friend Residue operator+(const Residue& a, const Residue& b) {
    same_modulus(a, b);
    std::uint64_t s = a.value_ + b.value_;  // moduli stay below 2^63
    return raw(s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_);
  }
  friend Residue operator-(const Residue& a, const Residue& b) { return a + (-b); }
  friend Residue operator*(const Residue& a, const Residue& b) {
    same_modulus(a, b);
    return raw(mul_mod(a.value_, b.value_, a.modulus_), a.modulus_);
  }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  friend bool operator==(const Residue&, const Residue&) = default;

  /// "r mod m", the report encoding.
  std::string str() const { return std::to_string(value_) + " mod " + std::to_string(modulus_); }

  friend std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.str(); }

 private:
  static std::uint64_t checked(std::uint64_t m) {
    if (m < 2 || m > (std::uint64_t{1} << 62)) throw DomainError("modulus must lie in [2, 2^62]");
    return m;
  }
  static Residue raw(std::uint64_t v, std::uint64_t m) {
    Residue r(0, m);
    r.value_ = v;
    return r;
  }
  static void same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_) {
      throw ModulusMismatch("residues modulo " + std::to_string(a.modulus_) + " and " +
                            std::to_string(b.modulus_));
    }
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_;
};

/// base^exp; a negative exponent means a power of the inverse.
inline Residue mod_pow(const Residue& base, std::int64_t exp) {
  Residue b = exp < 0 ? base.inverse() : base;
  std::uint64_t e = exp < 0 ? static_cast<std::uint64_t>(-(exp + 1)) + 1 : static_cast<std::uint64_t>(exp);
  Residue r(pow_mod(b.value(), e, b.modulus()), b.modulus());
  return r;
}

// ---------------------------------------------------------------------------
// Primality and factorization

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  // These bases are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime decomposition of a positive integer; primes strictly increasing.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;
};

namespace detail {

inline std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  std::uint64_t f = pollard_brent(n);
  split(f, primes);
  split(n / f, primes);
}

}  // namespace detail

/// Trial division below 2^20, Pollard-Brent rho for what remains.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization f{n, {}};
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  constexpr std::uint64_t kTrialLimit = std::uint64_t{1} << 20;
  for (std::uint64_t p = 2; p < kTrialLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  if (rest > 1) {
    if (rest < kTrialLimit * kTrialLimit) {
      primes.push_back(rest);  // no factor below its square root
    } else {
      detail::split(rest, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p) {
      ++f.factors.back().exponent;
    } else {
      f.factors.push_back({p, 1});
    }
  }
  return f;
}

inline std::uint64_t totient(const Factorization& f) {
  std::uint64_t phi = f.value;
  for (const auto& [p, e] : f.factors) phi = phi / p * (p - 1);
  return phi;
}

inline int moebius(const Factorization& f) {
  int mu = 1;
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline bool is_squarefree(const Factorization& f) {
  return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

// ---------------------------------------------------------------------------
// Symbols

/// Jacobi symbol (a/n) for odd n >= 1 by the binary reciprocity algorithm.
/// Negative a is first reduced into [0, n).
inline int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw DomainError("jacobi: n must be odd and positive, got " + std::to_string(n));
  std::uint64_t m = static_cast<std::uint64_t>(n);
  std::uint64_t x = reduce(a, m);
  int t = 1;
  while (x != 0) {
    int twos = std::countr_zero(x);
    x >>= twos;
    if ((twos & 1) && (m % 8 == 3 || m % 8 == 5)) t = -t;
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) t = -t;
    x %= m;
  }
  return m == 1 ? t : 0;
}

inline void require_odd_prime(std::uint64_t p, const char* who) {
  if (p < 3 || !is_prime(p)) {
    throw DomainError(std::string(who) + ": " + std::to_string(p) + " is not an odd prime");
  }
}

/// The residue r in [0, p) with num = den * r (mod p).
inline Residue rational_mod_p(std::int64_t num, std::int64_t den, std::uint64_t p) {
  require_odd_prime(p, "rational_mod_p");
  Residue d(den, p);
  if (d.is_zero()) {
    throw PoleError("rational_mod_p: " + std::to_string(p) + " divides the denominator " + std::to_string(den));
  }
  return Residue(num, p) * d.inverse();
}

/// Legendre symbol of the p-adic integer num/den.
inline int legendre_of_padic(std::int64_t num, std::int64_t den, std::uint64_t p) {
  Residue r = rational_mod_p(num, den, p);
  return jacobi(static_cast<std::int64_t>(r.value()), static_cast<std::int64_t>(p));
}

// ---------------------------------------------------------------------------
// Power sums modulo p

/// sum_{i=0}^{p-1} i^k mod p: -1 when k > 0 and (p-1) | k, else 0 (0^0 = 1).
inline Residue power_sum_prediction(std::uint64_t k, std::uint64_t p) {
  return Residue((k > 0 && k % (p - 1) == 0) ? -1 : 0, p);
}

/// sum_{i=2}^{p-2} i^k mod p: -3, -2, 0 as (p-1) | k, 2 | k only, k odd.
inline Residue inner_power_sum_prediction(std::uint64_t k, std::uint64_t p) {
  if (k % (p - 1) == 0) return Residue(-3, p);
  if (k % 2 == 0) return Residue(-2, p);
  return Residue(0, p);
}

/// Odd primes in [lo, hi].
inline std::vector<std::uint64_t> odd_primes_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::int64_t v = std::max<std::int64_t>(lo, 3); v <= hi; ++v) {
    if (is_prime(static_cast<std::uint64_t>(v))) out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

}  // namespace binform::arith

#endif  // BINFORM_ARITH_HPP
