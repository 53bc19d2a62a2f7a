#ifndef BINFORM_FORMULAS_HPP
#define BINFORM_FORMULAS_HPP

// Closed-form right-hand sides for the determinant families in forms.hpp.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "binform/arith.hpp"
#include "binform/detkit.hpp"
#include "binform/errors.hpp"
#include "binform/matrix.hpp"

namespace binform::formulas {

using arith::Residue;

namespace detail {

inline void require_prime_above3(std::uint64_t p, const char* who) {
  if (p <= 3 || !arith::is_prime(p)) {
    throw DomainError(std::string(who) + ": need a prime > 3, got " + std::to_string(p));
  }
}

}  // namespace detail

/// Predicted det[x + H(i,j)] mod p over 1 <= i,j <= p-1, where
/// H(X,Y) = sum_{k=0}^{n} a_k X^k Y^(n-k) and p-2 <= n <= 2p-3.
///
/// n = p-1:  (x + a_0 + a_{p-1}) * prod_{k=1}^{p-2} a_k.
/// otherwise: (-1)^n * prod_{k=0}^{p-2} (sum of a_j over j = k mod p-1).
inline Residue shift_closed_form(std::span<const std::int64_t> coeffs, std::int64_t x, std::uint64_t p) {
  arith::require_odd_prime(p, "shift_closed_form");
  if (coeffs.empty()) throw DomainError("shift_closed_form: need at least one coefficient");
  const std::size_t n = coeffs.size() - 1;
  if (n + 2 < p || n > 2 * p - 3) {
    throw DomainError("shift_closed_form: degree " + std::to_string(n) + " outside [" + std::to_string(p - 2) + ", " +
                      std::to_string(2 * p - 3) + "]");
  }
  auto a = [&](std::size_t k) { return Residue(coeffs[k], p); };
  if (n == p - 1) {
    Residue out = Residue(x, p) + a(0) + a(p - 1);
    for (std::size_t k = 1; k <= p - 2; ++k) out *= a(k);
    return out;
  }
  Residue out(n % 2 == 0 ? 1 : -1, p);
  for (std::size_t k = 0; k <= p - 2; ++k) {
    Residue folded(0, p);
    for (std::size_t j = k; j <= n; j += p - 1) folded += a(j);
    out *= folded;
  }
  return out;
}

/// True iff n lies in [(p+1)/2, p-2], the degree window in which
/// det[x + (i^2+cij+dj^2)^n] mod p does not depend on x.
inline bool shift_independence_applicable(std::int64_t n, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return p > 3 && n >= (sp + 1) / 2 && n <= sp - 2;
}

/// Coefficients a_0..a_{2e} (mod p) of (X^2 + cXY + dY^2)^e, a_k attached to
/// X^k Y^(2e-k). Feeds shift_closed_form for the form-shaped shift.
inline std::vector<std::int64_t> form_power_coeffs(std::int64_t c, std::int64_t d, std::uint64_t e, std::uint64_t p) {
  arith::require_odd_prime(p, "form_power_coeffs");
  const std::uint64_t cr = arith::reduce(c, p);
  const std::uint64_t dr = arith::reduce(d, p);
  std::vector<std::uint64_t> poly{1};
  for (std::uint64_t step = 0; step < e; ++step) {
    std::vector<std::uint64_t> next(poly.size() + 2, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] = (next[k] + arith::mul_mod(poly[k], dr, p)) % p;
      next[k + 1] = (next[k + 1] + arith::mul_mod(poly[k], cr, p)) % p;
      next[k + 2] = (next[k + 2] + poly[k]) % p;
    }
    poly = std::move(next);
  }
  return {poly.begin(), poly.end()};
}

/// Predicted det[P(i j^-1)] mod p over 2 <= i,j <= p-2 for
/// P(T) = sum_{k=0}^{p-2} a_k T^k:
///   4 * (sum of hat_a over even k) * (sum of hat_a over odd k),
/// where hat_a_k is the product of the other coefficients of k's parity.
inline Residue rational_argument_closed_form(std::span<const Residue> coeffs, std::uint64_t p) {
  detail::require_prime_above3(p, "rational_argument_closed_form");
  if (coeffs.size() != p - 1) {
    throw DomainError("rational_argument_closed_form: need p-1 = " + std::to_string(p - 1) + " coefficients");
  }
  Residue even_sum(0, p);
  Residue odd_sum(0, p);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    // Direct product rather than (class product)/a_k: a_k may vanish.
    Residue hat(1, p);
    for (std::size_t j = k % 2; j < coeffs.size(); j += 2) {
      if (j != k) hat *= coeffs[j];
    }
    (k % 2 == 0 ? even_sum : odd_sum) += hat;
  }
  return Residue(4, p) * even_sum * odd_sum;
}

/// a_0..a_{p-2} with (T^2+T+1)^{p-2} = sum_k a_k T^k (mod p) for T in [1, p-1].
inline std::vector<Residue> trinomial_power_coeffs(std::uint64_t p) {
  detail::require_prime_above3(p, "trinomial_power_coeffs");
  std::vector<Residue> out;
  out.reserve(p - 1);
  const bool one_mod_3 = p % 3 == 1;
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    const auto sk = static_cast<std::int64_t>(k);
    if (one_mod_3) {
      switch (k % 3) {
        case 0: out.push_back(arith::rational_mod_p(3 * sk + 5, 3, p)); break;
        case 1: out.push_back(arith::rational_mod_p(-3 * sk - 4, 3, p)); break;
        default: out.push_back(arith::rational_mod_p(-1, 3, p)); break;
      }
    } else {
      out.push_back(arith::rational_mod_p(k % 3 == 1 ? -2 : 1, 3, p));
    }
  }
  return out;
}

struct SigmaSums {
  Residue sigma1;
  Residue sigma2;
};

/// sigma1 = sum_{k=1}^{(p-1)/6} (1/(18k-13) - 1/(18k-2)) + 1/6
/// sigma2 = sum_{k=1}^{(p-1)/6} (1/(18k-4) - 1/(18k-11)) + 1/6
/// Throws PoleError if any denominator vanishes mod p.
inline SigmaSums sigma_sums(std::uint64_t p) {
  detail::require_prime_above3(p, "sigma_sums");
  if (p % 3 != 1) throw DomainError("sigma_sums: need p = 1 (mod 3), got " + std::to_string(p));
  Residue s1 = arith::rational_mod_p(1, 6, p);
  Residue s2 = s1;
  const auto terms = static_cast<std::int64_t>((p - 1) / 6);
  for (std::int64_t k = 1; k <= terms; ++k) {
    s1 += arith::rational_mod_p(1, 18 * k - 13, p) - arith::rational_mod_p(1, 18 * k - 2, p);
    s2 += arith::rational_mod_p(1, 18 * k - 4, p) - arith::rational_mod_p(1, 18 * k - 11, p);
  }
  return {s1, s2};
}

enum class Dp11Case { TwoMod3, SevenMod9, OneFourMod9, Unsupported };

inline std::string_view to_string(Dp11Case c) {
  switch (c) {
    case Dp11Case::TwoMod3: return "p=2(mod 3)";
    case Dp11Case::SevenMod9: return "p=7(mod 9)";
    case Dp11Case::OneFourMod9: return "p=1,4(mod 9)";
    case Dp11Case::Unsupported: return "unsupported";
  }
  return "?";
}

/// What the closed forms say about det[(i^2+ij+j^2)^{p-2}] mod p over 2..p-2.
struct Dp11Prediction {
  Dp11Case case_label = Dp11Case::Unsupported;
  std::optional<Residue> predicted_residue;  // TwoMod3, SevenMod9
  std::optional<int> predicted_symbol;       // TwoMod3, OneFourMod9
  std::optional<Residue> sigma1;             // OneFourMod9
  std::optional<Residue> sigma2;             // OneFourMod9
};

inline Dp11Case dp11_case(std::uint64_t p) {
  if (p <= 3) return Dp11Case::Unsupported;
  if (p % 3 == 2) return Dp11Case::TwoMod3;
  return p % 9 == 7 ? Dp11Case::SevenMod9 : Dp11Case::OneFourMod9;
}

inline Dp11Prediction predict_dp_minus_11(std::uint64_t p) {
  if (!arith::is_prime(p)) throw DomainError("predict_dp_minus_11: " + std::to_string(p) + " is not prime");
  Dp11Prediction out;
  out.case_label = dp11_case(p);
  const auto sp = static_cast<std::int64_t>(p);
  switch (out.case_label) {
    case Dp11Case::TwoMod3:
      // (p-8)/3 is -1 at p = 5; mod_pow reads that as the inverse.
      out.predicted_residue = arith::mod_pow(Residue(2, p), (sp - 8) / 3) * Residue(81, p);
      out.predicted_symbol = arith::jacobi(2, sp);
      break;
    case Dp11Case::SevenMod9:
      out.predicted_residue = Residue(0, p);
      break;
    case Dp11Case::OneFourMod9: {
      const SigmaSums s = sigma_sums(p);
      out.sigma1 = s.sigma1;
      out.sigma2 = s.sigma2;
      out.predicted_symbol = arith::jacobi(static_cast<std::int64_t>((s.sigma1 * s.sigma2).value()), sp);
      break;
    }
    case Dp11Case::Unsupported: break;
  }
  return out;
}

/// 1! 2! ... m!
inline mpz_class superfactorial(std::size_t m) {
  mpz_class out = 1;
  mpz_class fact = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    fact *= static_cast<unsigned long>(k);
    out *= fact;
  }
  return out;
}

struct IdentitySides {
  mpz_class lhs;
  mpz_class rhs;
};

/// Both sides of det[P(i,j)]_{1<=i,j<=n} = 1!2!...(n-1)! det[a_jk], where
/// P(x,j) = sum_{k=1}^{n} a_jk x^(k-1) and coeff(j-1, k-1) = a_jk.
inline IdentitySides poly_grid_det_identity(const IntMatrix& coeff) {
  const std::size_t n = coeff.dim();
  const IntMatrix grid = IntMatrix::generate(n, [&](std::size_t r, std::size_t c) {
    const mpz_class x = static_cast<unsigned long>(r + 1);
    mpz_class acc = 0;
    for (std::size_t k = n; k-- > 0;) acc = acc * x + coeff(c, k);  // Horner in x = i
    return acc;
  }, 1);
  return {detkit::det_exact(grid), superfactorial(n - 1) * detkit::det_exact(coeff)};
}

}  // namespace binform::formulas

#endif  // BINFORM_FORMULAS_HPP
