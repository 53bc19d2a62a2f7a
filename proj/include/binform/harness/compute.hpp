#ifndef BINFORM_HARNESS_COMPUTE_HPP
#define BINFORM_HARNESS_COMPUTE_HPP

// Single evaluations for the `compute` subcommand.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "binform/arith.hpp"
#include "binform/errors.hpp"
#include "binform/formulas.hpp"
#include "binform/forms.hpp"

namespace binform::harness {

inline constexpr std::string_view kComputeFamilies =
    "bracket, paren, brace, power-full, power-inner, power-zero-full, dp, dp-inner, shifted, rational";

struct ComputeRequest {
  std::string family;
  std::optional<std::int64_t> c, d, n, p, e, x;
  std::vector<std::int64_t> coeffs;
};

struct ComputeResult {
  std::vector<std::string> lines;
  bool consistent = true;  // false iff an applicable prediction disagrees
};

namespace detail {

inline std::int64_t need(const std::optional<std::int64_t>& v, std::string_view family, std::string_view flag) {
  if (!v) throw UsageError("family '" + std::string(family) + "' requires --" + std::string(flag));
  return *v;
}

inline std::string residue_text(const arith::Residue& r) {
  std::string s = r.str();
  if (r.symmetric() < 0) {
    s += " (≡ " + std::to_string(r.symmetric()) + " mod " + std::to_string(r.modulus()) + ")";
  }
  return s;
}

inline std::uint64_t prime_arg(std::int64_t p, std::int64_t min) {
  if (p < min || !arith::is_prime(static_cast<std::uint64_t>(p))) {
    throw UsageError("--p must be a prime >= " + std::to_string(min) + ", got " + std::to_string(p));
  }
  return static_cast<std::uint64_t>(p);
}

inline void predict(ComputeResult& out, std::string_view label, bool holds) {
  out.lines.push_back(std::string(label) + ": " + (holds ? "yes" : "no"));
  out.consistent = out.consistent && holds;
}

inline void symbol_family(const ComputeRequest& req, ComputeResult& out) {
  const std::int64_t n = need(req.n, req.family, "n");
  const std::int64_t c = need(req.c, req.family, "c");
  const std::int64_t d = need(req.d, req.family, "d");
  if (n < 3 || n % 2 == 0) throw UsageError("--n must be odd and >= 3, got " + std::to_string(n));
  if (req.family == "brace" && n < 5) throw UsageError("family 'brace' requires --n >= 5");

  const int dn = arith::jacobi(d, n);
  if (req.family == "bracket") {
    const mpz_class det = forms::bracket_cd(c, d, n);
    out.lines.push_back("value: " + det.get_str());
    const arith::Factorization f = arith::factorize(static_cast<std::uint64_t>(n));
    if (!arith::is_squarefree(f)) predict(out, "n not squarefree, predicted 0", det == 0);
    if (dn == -1) {
      const std::uint64_t phi = arith::totient(f);
      const mpz_class mod = mpz_class(static_cast<unsigned long>(phi)) * phi;
      predict(out, "divisible by " + mod.get_str(), mpz_divisible_p(det.get_mpz_t(), mod.get_mpz_t()) != 0);
    } else if (dn == 1 && arith::is_prime(static_cast<std::uint64_t>(n))) {
      predict(out, "divisible by " + std::to_string(n - 1), det % (n - 1) == 0);
    }
  } else if (req.family == "paren") {
    const mpz_class det = forms::paren_cd(c, d, n);
    out.lines.push_back("value: " + det.get_str());
    if (dn == -1) predict(out, "(d/n) = -1, predicted 0", det == 0);
  } else {
    out.lines.push_back("value: " + forms::brace_cd(c, d, n).get_str());
  }
}

inline void power_family(const ComputeRequest& req, ComputeResult& out) {
  using forms::FamilyKind;
  const std::string& fam = req.family;
  const bool inner = fam == "power-inner" || fam == "dp-inner";
  const std::uint64_t p = prime_arg(need(req.p, fam, "p"), inner ? 5 : 3);
  const auto sp = static_cast<std::int64_t>(p);
  const std::int64_t c = need(req.c, fam, "c");
  const std::int64_t d = need(req.d, fam, "d");
  const bool reciprocal = fam == "dp" || fam == "dp-inner";
  const std::int64_t e = reciprocal ? req.e.value_or(sp - 2) : need(req.e, fam, "e");
  if (e < 0) throw UsageError("--e must be nonnegative");

  const FamilyKind kind = inner ? FamilyKind::PowerInner
                          : (fam == "power-zero-full" ? FamilyKind::PowerZeroFull : FamilyKind::PowerFull);
  const arith::Residue det =
      forms::power_det_mod_p(forms::FormFamily::power(kind, c, d, static_cast<std::uint64_t>(e)), p);
  out.lines.push_back("value: " + residue_text(det));

  if (kind == FamilyKind::PowerZeroFull && p > 3 && e >= (sp + 1) / 2 && e <= sp - 2) {
    predict(out, "exponent in [(p+1)/2, p-2], predicted 0", det.is_zero());
  }
  if (kind == FamilyKind::PowerFull && arith::jacobi(d, sp) == -1 && e >= 1 && e <= sp - 1) {
    predict(out, "(d/p) = -1, predicted 0", det.is_zero());
  }
  if (kind == FamilyKind::PowerInner && e == sp - 2) {
    const int symbol = arith::jacobi(static_cast<std::int64_t>(det.value()), sp);
    if (c == 1 && d == 1) {
      const formulas::Dp11Prediction pred = formulas::predict_dp_minus_11(p);
      out.lines.push_back("case: " + std::string(formulas::to_string(pred.case_label)));
      if (pred.sigma1) out.lines.push_back("sigma1: " + residue_text(*pred.sigma1));
      if (pred.sigma2) out.lines.push_back("sigma2: " + residue_text(*pred.sigma2));
      if (pred.predicted_residue) {
        predict(out, "predicted " + pred.predicted_residue->str(), det == *pred.predicted_residue);
      }
      if (pred.predicted_symbol) {
        predict(out, "predicted Legendre symbol " + std::to_string(*pred.predicted_symbol),
                symbol == *pred.predicted_symbol);
      }
    } else {
      out.lines.push_back("Legendre symbol: " + std::to_string(symbol));
    }
  }
}

inline void shifted_family(const ComputeRequest& req, ComputeResult& out) {
  const std::uint64_t p = prime_arg(need(req.p, req.family, "p"), 3);
  const std::int64_t x = req.x.value_or(0);
  std::vector<std::int64_t> coeffs = req.coeffs;
  if (coeffs.empty()) {
    const std::int64_t c = need(req.c, req.family, "c");
    const std::int64_t d = need(req.d, req.family, "d");
    const std::int64_t e = need(req.e, req.family, "e");
    if (e < 0) throw UsageError("--e must be nonnegative");
    coeffs = formulas::form_power_coeffs(c, d, static_cast<std::uint64_t>(e), p);
  }
  const arith::Residue det = forms::shifted_power_det_mod_p(coeffs, x, p);
  out.lines.push_back("value: " + residue_text(det));
  const std::size_t n = coeffs.size() - 1;
  if (n + 2 >= p && n <= 2 * p - 3) {
    const arith::Residue closed = formulas::shift_closed_form(coeffs, x, p);
    predict(out, "closed form " + closed.str(), det == closed);
  }
}

inline void rational_family(const ComputeRequest& req, ComputeResult& out) {
  const std::uint64_t p = prime_arg(need(req.p, req.family, "p"), 5);
  if (req.coeffs.size() != p - 1) {
    throw UsageError("family 'rational' requires exactly p-1 = " + std::to_string(p - 1) + " values in --coeffs");
  }
  std::vector<arith::Residue> coeffs;
  for (std::int64_t a : req.coeffs) coeffs.emplace_back(a, p);
  const arith::Residue det = forms::rational_matrix_det_mod_p(coeffs, p);
  out.lines.push_back("value: " + residue_text(det));
  const arith::Residue closed = formulas::rational_argument_closed_form(coeffs, p);
  predict(out, "closed form " + closed.str(), det == closed);
}

}  // namespace detail

/// Evaluates one determinant and any closed form that applies to it.
inline ComputeResult compute(const ComputeRequest& req) {
  ComputeResult out;
  const std::string& f = req.family;
  if (f == "bracket" || f == "paren" || f == "brace") {
    detail::symbol_family(req, out);
  } else if (f == "power-full" || f == "power-inner" || f == "power-zero-full" || f == "dp" || f == "dp-inner") {
    detail::power_family(req, out);
  } else if (f == "shifted") {
    detail::shifted_family(req, out);
  } else if (f == "rational") {
    detail::rational_family(req, out);
  } else {
    throw UsageError("unknown family '" + f + "' (expected one of: " + std::string(kComputeFamilies) + ")");
  }
  return out;
}

}  // namespace binform::harness

#endif  // BINFORM_HARNESS_COMPUTE_HPP
