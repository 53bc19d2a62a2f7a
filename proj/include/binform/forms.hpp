#ifndef BINFORM_FORMS_HPP
#define BINFORM_FORMS_HPP

// Matrix families generated by the binary form i^2 + c*i*j + d*j^2, and the
// determinants attached to them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "binform/arith.hpp"
#include "binform/detkit.hpp"
#include "binform/errors.hpp"
#include "binform/matrix.hpp"

namespace binform::forms {

using arith::Residue;

enum class FamilyKind {
  SymbolBracket,  // Jacobi symbols, indices 0..n-1
  SymbolParen,    // Jacobi symbols, indices 1..n-1
  SymbolBrace,    // Jacobi symbols, indices 2..n-2
  PowerFull,      // form^e mod p, indices 1..p-1
  PowerInner,     // form^e mod p, indices 2..p-2
  PowerZeroFull,  // form^e mod p, indices 0..p-1
  ShiftedPower,   // x + H(i,j) mod p, indices 1..p-1
};

inline std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::SymbolBracket: return "bracket";
    case FamilyKind::SymbolParen: return "paren";
    case FamilyKind::SymbolBrace: return "brace";
    case FamilyKind::PowerFull: return "power-full";
    case FamilyKind::PowerInner: return "power-inner";
    case FamilyKind::PowerZeroFull: return "power-zero-full";
    case FamilyKind::ShiftedPower: return "shifted";
  }
  return "?";
}

inline bool is_symbol_kind(FamilyKind k) {
  return k == FamilyKind::SymbolBracket || k == FamilyKind::SymbolParen || k == FamilyKind::SymbolBrace;
}

/// Selects one matrix family. Fields that the kind does not use stay empty.
///
/// ShiftedPower has two shapes: with `coeffs` it is x + sum_k a_k i^k j^(n-k);
/// without, it is x + (i^2 + c*i*j + d*j^2)^e.
struct FormFamily {
  FamilyKind kind = FamilyKind::SymbolBracket;
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::optional<std::uint64_t> exponent;
  std::optional<std::int64_t> shift;
  std::optional<std::vector<std::int64_t>> coeffs;

  static FormFamily symbol(FamilyKind kind, std::int64_t c, std::int64_t d) {
    if (!is_symbol_kind(kind)) throw DomainError("FormFamily::symbol: not a symbol kind");
    return {kind, c, d, std::nullopt, std::nullopt, std::nullopt};
  }

  static FormFamily power(FamilyKind kind, std::int64_t c, std::int64_t d, std::uint64_t e) {
    if (kind != FamilyKind::PowerFull && kind != FamilyKind::PowerInner && kind != FamilyKind::PowerZeroFull) {
      throw DomainError("FormFamily::power: not a power kind");
    }
    return {kind, c, d, e, std::nullopt, std::nullopt};
  }

  static FormFamily shifted_form(std::int64_t c, std::int64_t d, std::uint64_t e, std::int64_t x) {
    return {FamilyKind::ShiftedPower, c, d, e, x, std::nullopt};
  }

  static FormFamily shifted(std::vector<std::int64_t> coeffs, std::int64_t x) {
    if (coeffs.empty()) throw DomainError("FormFamily::shifted: need at least one coefficient");
    return {FamilyKind::ShiftedPower, 0, 0, std::nullopt, x, std::move(coeffs)};
  }
};

/// i^2 + c*i*j + d*j^2 reduced into [0, m), evaluated in 128 bits.
inline std::uint64_t form_value(std::int64_t i, std::int64_t j, std::int64_t c, std::int64_t d, std::uint64_t m) {
  using arith::i128;
  const i128 v = i128{i} * i + i128{c} * i * j + i128{d} * j * j;
  return arith::reduce(v, m);
}

struct IndexRange {
  std::int64_t first;
  std::int64_t last;
  std::size_t size() const { return static_cast<std::size_t>(last - first + 1); }
};

/// Index range of a family over modulus n (Jacobi) or p (powers).
inline IndexRange index_range(FamilyKind kind, std::int64_t n) {
  switch (kind) {
    case FamilyKind::SymbolBracket:
    case FamilyKind::PowerZeroFull: return {0, n - 1};
    case FamilyKind::SymbolParen:
    case FamilyKind::PowerFull:
    case FamilyKind::ShiftedPower: return {1, n - 1};
    case FamilyKind::SymbolBrace:
    case FamilyKind::PowerInner: return {2, n - 2};
  }
  return {0, -1};
}

// ---------------------------------------------------------------------------
// Jacobi-symbol matrices

/// Entry (i,j) = jacobi(i^2 + c*i*j + d*j^2, n) over the family's range.
inline IntMatrix symbol_matrix(const FormFamily& family, std::int64_t n) {
  if (!is_symbol_kind(family.kind)) throw DomainError("symbol_matrix: family is not a symbol kind");
  if (n % 2 == 0 || n < 3) throw DomainError("symbol_matrix: n must be odd and >= 3, got " + std::to_string(n));
  if (family.kind == FamilyKind::SymbolBrace && n < 5) throw DomainError("symbol_matrix: brace family needs n >= 5");
  const IndexRange range = index_range(family.kind, n);
  const auto un = static_cast<std::uint64_t>(n);
  return IntMatrix::generate(
      range.size(),
      [&](std::size_t r, std::size_t c) {
        const std::int64_t i = range.first + static_cast<std::int64_t>(r);
        const std::int64_t j = range.first + static_cast<std::int64_t>(c);
        return mpz_class(arith::jacobi(static_cast<std::int64_t>(form_value(i, j, family.c, family.d, un)), n));
      },
      static_cast<int>(range.first));
}

/// det over 0 <= i,j <= n-1.
inline mpz_class bracket_cd(std::int64_t c, std::int64_t d, std::int64_t n) {
  return detkit::det_exact(symbol_matrix(FormFamily::symbol(FamilyKind::SymbolBracket, c, d), n));
}

/// det over 1 <= i,j <= n-1.
inline mpz_class paren_cd(std::int64_t c, std::int64_t d, std::int64_t n) {
  return detkit::det_exact(symbol_matrix(FormFamily::symbol(FamilyKind::SymbolParen, c, d), n));
}

/// det over 2 <= i,j <= n-2; n >= 5.
inline mpz_class brace_cd(std::int64_t c, std::int64_t d, std::int64_t n) {
  return detkit::det_exact(symbol_matrix(FormFamily::symbol(FamilyKind::SymbolBrace, c, d), n));
}

// ---------------------------------------------------------------------------
// Power matrices modulo p

namespace detail {

inline void require_prime(std::uint64_t p, std::uint64_t min, const char* who) {
  if (p < min || !arith::is_prime(p)) {
    throw DomainError(std::string(who) + ": need a prime >= " + std::to_string(min) + ", got " + std::to_string(p));
  }
}

/// powers[k] = base^k mod p for k in [0, count); 0^0 = 1.
inline std::vector<std::uint64_t> power_table(std::uint64_t base, std::size_t count, std::uint64_t p) {
  std::vector<std::uint64_t> out(count);
  std::uint64_t acc = 1;
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = acc;
    acc = arith::mul_mod(acc, base, p);
  }
  return out;
}

}  // namespace detail

/// x + sum_k a_k i^k j^(n-k) mod p for 1 <= i,j <= p-1, n = coeffs.size()-1.
inline ResidueMatrix shifted_power_matrix(std::span<const std::int64_t> coeffs, std::int64_t x, std::uint64_t p) {
  detail::require_prime(p, 3, "shifted_power_matrix");
  if (coeffs.empty()) throw DomainError("shifted_power_matrix: need at least one coefficient");
  const std::size_t deg = coeffs.size() - 1;
  std::vector<std::uint64_t> a(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) a[k] = arith::reduce(coeffs[k], p);
  std::vector<std::vector<std::uint64_t>> pw(p);
  for (std::uint64_t v = 1; v < p; ++v) pw[v] = detail::power_table(v, deg + 1, p);
  const std::uint64_t shift = arith::reduce(x, p);
  return ResidueMatrix::generate(
      p - 1,
      [&](std::size_t r, std::size_t c) {
        const auto& pi = pw[r + 1];
        const auto& pj = pw[c + 1];
        arith::u128 acc = shift;
        for (std::size_t k = 0; k <= deg; ++k) {
          acc += static_cast<arith::u128>(arith::mul_mod(a[k], pi[k], p)) * pj[deg - k];
        }
        return static_cast<std::uint64_t>(acc % p);
      },
      1);
}

/// The matrix of a power family (or a form-shaped ShiftedPower) mod p.
inline ResidueMatrix power_matrix(const FormFamily& family, std::uint64_t p) {
  if (is_symbol_kind(family.kind)) throw DomainError("power_matrix: family is a symbol kind");
  if (family.kind == FamilyKind::ShiftedPower && family.coeffs) {
    return shifted_power_matrix(*family.coeffs, family.shift.value_or(0), p);
  }
  if (!family.exponent) throw DomainError("power_matrix: exponent required");
  detail::require_prime(p, family.kind == FamilyKind::PowerInner ? 5 : 3, "power_matrix");
  const std::uint64_t e = *family.exponent;
  const std::uint64_t shift = arith::reduce(family.shift.value_or(0), p);
  const IndexRange range = index_range(family.kind, static_cast<std::int64_t>(p));
  return ResidueMatrix::generate(
      range.size(),
      [&](std::size_t r, std::size_t c) {
        const std::int64_t i = range.first + static_cast<std::int64_t>(r);
        const std::int64_t j = range.first + static_cast<std::int64_t>(c);
        const std::uint64_t v = arith::pow_mod(form_value(i, j, family.c, family.d, p), e, p);
        return (v + shift) % p;
      },
      static_cast<int>(range.first));
}

/// det mod p of a power family; the convention 0^0 = 1 applies.
inline Residue power_det_mod_p(const FormFamily& family, std::uint64_t p) {
  return detkit::det_mod_p(power_matrix(family, p), p);
}

inline Residue shifted_power_det_mod_p(std::span<const std::int64_t> coeffs, std::int64_t x, std::uint64_t p) {
  return detkit::det_mod_p(shifted_power_matrix(coeffs, x, p), p);
}

/// det[x + (i^2 + c*i*j + d*j^2)^e] mod p over 1 <= i,j <= p-1.
inline Residue shifted_form_power_det_mod_p(std::int64_t c, std::int64_t d, std::uint64_t e, std::int64_t x,
                                            std::uint64_t p) {
  return power_det_mod_p(FormFamily::shifted_form(c, d, e, x), p);
}

/// det[P(i * j^-1)] mod p over 2 <= i,j <= p-2, with P(T) = sum_k a_k T^k.
inline Residue rational_matrix_det_mod_p(std::span<const Residue> coeffs, std::uint64_t p) {
  detail::require_prime(p, 5, "rational_matrix_det_mod_p");
  if (coeffs.size() != p - 1) {
    throw DomainError("rational_matrix_det_mod_p: need p-1 = " + std::to_string(p - 1) + " coefficients");
  }
  std::vector<std::uint64_t> values(p);  // P(t) for every t in F_p
  for (std::uint64_t t = 0; t < p; ++t) {
    std::uint64_t acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      if (coeffs[k].modulus() != p) throw ModulusMismatch("rational_matrix_det_mod_p: coefficient modulus");
      acc = (arith::mul_mod(acc, t, p) + coeffs[k].value()) % p;
    }
    values[t] = acc;
  }
  ResidueMatrix m = ResidueMatrix::generate(
      p - 3,
      [&](std::size_t r, std::size_t c) {
        const std::uint64_t i = r + 2;
        const std::uint64_t j_inv = arith::inverse_mod(c + 2, p);
        return values[arith::mul_mod(i, j_inv, p)];
      },
      2);
  return detkit::det_mod_p(std::move(m), p);
}

}  // namespace binform::forms

#endif  // BINFORM_FORMS_HPP
