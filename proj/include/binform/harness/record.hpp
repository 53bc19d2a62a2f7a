#ifndef BINFORM_HARNESS_RECORD_HPP
#define BINFORM_HARNESS_RECORD_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "binform/errors.hpp"

namespace binform::harness {

enum class Verdict { Pass, Fail, Skip };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Skip: return "Skip";
  }
  return "?";
}

/// One row of a campaign report.
///
/// `predicted` is a decimal integer, a residue "r mod m", "divisibility:m",
/// "zero", or "symbol:s" (Legendre symbol). A Skip record carries its reason
/// in `predicted` as "skip:<reason>".
struct VerificationRecord {
  std::string suite;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> e;
  std::optional<std::uint64_t> seed;
  std::string computed;
  std::string predicted;
  Verdict verdict = Verdict::Skip;
  std::int64_t elapsed_ms = 0;

  void skip(std::string_view reason) {
    verdict = Verdict::Skip;
    predicted = "skip:" + std::string(reason);
  }
};

enum class ReportFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "suite,param_n,param_p,param_c,param_d,param_e,param_seed,computed,predicted,verdict,elapsed_ms";

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

template <class T>
std::string opt_field(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

template <class T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace detail

inline std::string to_csv_row(const VerificationRecord& r) {
  using detail::csv_field;
  using detail::opt_field;
  std::string row = csv_field(r.suite);
  for (const auto& f : {opt_field(r.n), opt_field(r.p), opt_field(r.c), opt_field(r.d), opt_field(r.e),
                        opt_field(r.seed)}) {
    row += ',';
    row += f;
  }
  row += ',' + csv_field(r.computed) + ',' + csv_field(r.predicted) + ',' + std::string(to_string(r.verdict)) + ',' +
         std::to_string(r.elapsed_ms);
  return row;
}

inline nlohmann::ordered_json to_json(const VerificationRecord& r) {
  using detail::opt_json;
  return {{"suite", r.suite},
          {"param_n", opt_json(r.n)},
          {"param_p", opt_json(r.p)},
          {"param_c", opt_json(r.c)},
          {"param_d", opt_json(r.d)},
          {"param_e", opt_json(r.e)},
          {"param_seed", opt_json(r.seed)},
          {"computed", r.computed},
          {"predicted", r.predicted},
          {"verdict", to_string(r.verdict)},
          {"elapsed_ms", r.elapsed_ms}};
}

/// Streams records to `os` as they arrive; flushes after every row.
class ReportWriter {
 public:
  ReportWriter(std::ostream& os, ReportFormat format) : os_(os), format_(format) {
    if (format_ == ReportFormat::Csv) {
      os_ << kCsvHeader << '\n';
    } else {
      os_ << "[";
    }
    os_.flush();
  }
  ReportWriter(const ReportWriter&) = delete;
  ReportWriter& operator=(const ReportWriter&) = delete;
  ~ReportWriter() { finish(); }

  void write(const VerificationRecord& r) {
    if (format_ == ReportFormat::Csv) {
      os_ << to_csv_row(r) << '\n';
    } else {
      os_ << (rows_ == 0 ? "\n  " : ",\n  ") << to_json(r).dump();
    }
    ++rows_;
    os_.flush();
  }

  void finish() {
    if (finished_) return;
    finished_ = true;
    if (format_ == ReportFormat::Json) os_ << (rows_ == 0 ? "]\n" : "\n]\n");
    os_.flush();
  }

 private:
  std::ostream& os_;
  ReportFormat format_;
  std::size_t rows_ = 0;
  bool finished_ = false;
};

inline ReportFormat parse_format(std::string_view s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  throw UsageError("unknown report format '" + std::string(s) + "' (expected csv or json)");
}

}  // namespace binform::harness

#endif  // BINFORM_HARNESS_RECORD_HPP
