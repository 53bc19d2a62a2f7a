#ifndef BINFORM_HARNESS_SCAN_HPP
#define BINFORM_HARNESS_SCAN_HPP

// Observational scan of three open divisibility statements for
// det[(i^2+cij+dj^2)^{p-2}] over 2 <= i,j <= p-2:
//   part i:   (c,d) = (2,2), p = 7 (mod 8)
//   part ii:  (c,d) = (3,3), p = 2 (mod 3), p > 5
//   part iii: (c,d) = (3,1), p = 3, 7 (mod 20)
// Nothing is asserted; primes where p does not divide the determinant are
// reported as counterexamples.

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "binform/arith.hpp"
#include "binform/errors.hpp"
#include "binform/forms.hpp"
#include "binform/harness/record.hpp"
#include "binform/harness/runner.hpp"
#include "binform/harness/suites.hpp"

namespace binform::harness {

enum class ConjecturePart { I, II, III };

inline constexpr std::int64_t kDefaultScanPMax = 500;

inline ConjecturePart parse_part(std::string_view s) {
  if (s == "i") return ConjecturePart::I;
  if (s == "ii") return ConjecturePart::II;
  if (s == "iii") return ConjecturePart::III;
  throw UsageError("unknown conjecture part '" + std::string(s) + "' (expected i, ii or iii)");
}

inline std::string_view to_string(ConjecturePart part) {
  switch (part) {
    case ConjecturePart::I: return "i";
    case ConjecturePart::II: return "ii";
    case ConjecturePart::III: return "iii";
  }
  return "?";
}

struct ScanTarget {
  std::int64_t c;
  std::int64_t d;
};

inline ScanTarget scan_target(ConjecturePart part) {
  switch (part) {
    case ConjecturePart::I: return {2, 2};
    case ConjecturePart::II: return {3, 3};
    case ConjecturePart::III: return {3, 1};
  }
  return {0, 0};
}

inline bool in_scan_class(ConjecturePart part, std::uint64_t p) {
  switch (part) {
    case ConjecturePart::I: return p % 8 == 7;
    case ConjecturePart::II: return p % 3 == 2;
    case ConjecturePart::III: return p % 20 == 3 || p % 20 == 7;
  }
  return false;
}

struct ScanSummary {
  std::size_t checked = 0;
  std::size_t divisible = 0;
  std::vector<std::uint64_t> counterexamples;
  std::vector<VerificationRecord> records;
};

/// Builds the scan grid: one check per odd prime <= p_max in the part's class.
inline std::vector<Check> scan_checks(ConjecturePart part, std::int64_t p_max) {
  if (p_max < 7) throw UsageError("scan: --p-max must be >= 7");
  const ScanTarget target = scan_target(part);
  const std::string suite = "conjecture-" + std::string(to_string(part));
  std::vector<Check> checks;
  for (std::uint64_t p : arith::odd_primes_in(3, p_max)) {
    if (!in_scan_class(part, p)) continue;
    const auto sp = static_cast<std::int64_t>(p);
    VerificationRecord base{.suite = suite, .p = sp, .c = target.c, .d = target.d, .e = sp - 2};
    checks.push_back({base, [part, p, target](VerificationRecord& r) {
                        if (p <= 3) {
                          r.skip("p > 3 required");
                          return;
                        }
                        if (part == ConjecturePart::II && p <= 5) {
                          r.skip("part ii requires p > 5");
                          return;
                        }
                        const Residue det = forms::power_det_mod_p(
                            forms::FormFamily::power(forms::FamilyKind::PowerInner, target.c, target.d, p - 2), p);
                        r.computed = det.str();
                        r.predicted = "zero";
                        r.verdict = det.is_zero() ? Verdict::Pass : Verdict::Fail;
                      }});
  }
  return checks;
}

/// Runs the scan, streaming a report to `out` (if nonempty) plus a
/// `<out>.meta.json` sidecar with p_max and the summary.
inline ScanSummary scan_conjecture(ConjecturePart part, std::int64_t p_max, const std::string& out,
                                   unsigned threads = 1, ReportFormat format = ReportFormat::Csv,
                                   const RecordSink& sink = {}) {
  const std::vector<Check> checks = scan_checks(part, p_max);
  ScanSummary summary;
  if (out.empty()) {
    summary.records = run_checks(checks, threads, sink);
  } else {
    std::ofstream os(out);
    if (!os) throw UsageError("cannot write " + out);
    ReportWriter writer(os, format);
    summary.records = run_checks(checks, threads, [&](const VerificationRecord& r) {
      writer.write(r);
      if (sink) sink(r);
    });
    writer.finish();
  }
  for (const auto& r : summary.records) {
    if (r.verdict == Verdict::Skip) continue;
    ++summary.checked;
    if (r.verdict == Verdict::Pass) {
      ++summary.divisible;
    } else {
      summary.counterexamples.push_back(static_cast<std::uint64_t>(*r.p));
    }
  }
  if (!out.empty()) {
    const ScanTarget target = scan_target(part);
    detail::write_meta(out + ".meta.json", {{"command", "scan conjecture"},
                                            {"part", to_string(part)},
                                            {"c", target.c},
                                            {"d", target.d},
                                            {"p_max", p_max},
                                            {"p_max_note", "no search bound is known; p_max is a run choice"},
                                            {"checked", summary.checked},
                                            {"divisible", summary.divisible},
                                            {"counterexamples", summary.counterexamples}});
  }
  return summary;
}

}  // namespace binform::harness

#endif  // BINFORM_HARNESS_SCAN_HPP
