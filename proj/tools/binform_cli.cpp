// binform: evaluate binary-form determinants and run verification campaigns.
//
//   binform compute --family bracket --c 1 --d 7 --n 15
//   binform verify thm-divisibility --n-max 105 --out report.csv
//   binform scan conjecture --part i --p-max 500 --out scan.csv
//
// Exit codes: 0 all pass / scan completed, 1 failure or counterexample,
// 2 usage or configuration error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "binform/binform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

template <class T>
void optional_flag(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
  using namespace binform;

  CLI::App app{"Determinants of Jacobi-symbol and power matrices of i^2 + c*i*j + d*j^2"};
  app.require_subcommand(1);

  // compute
  harness::ComputeRequest req;
  auto* compute = app.add_subcommand("compute", "Evaluate one determinant and any closed form that applies");
  compute->add_option("--family", req.family, std::string("One of: ") + std::string(harness::kComputeFamilies))
      ->required();
  optional_flag(compute, "--c", req.c, "Coefficient c of the form");
  optional_flag(compute, "--d", req.d, "Coefficient d of the form");
  optional_flag(compute, "--n", req.n, "Odd modulus n (symbol families)");
  optional_flag(compute, "--p", req.p, "Prime p (power, shifted and rational families)");
  optional_flag(compute, "--e", req.e, "Exponent (power families; defaults to p-2 for dp and dp-inner)");
  optional_flag(compute, "--x", req.x, "Shift x (shifted family)");
  compute->add_option("--coeffs", req.coeffs, "Comma-separated coefficients a_0,a_1,... (shifted, rational)")
      ->delimiter(',');

  // verify
  harness::CampaignConfig cfg;
  cfg.threads = default_threads();
  std::string verify_format = "csv";
  auto* verify = app.add_subcommand("verify", "Run a verification suite over a parameter grid");
  verify->add_option("suite", cfg.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(harness::kSuites.begin(), harness::kSuites.end())));
  optional_flag(verify, "--n-min", cfg.n_min, "Smallest n (or matrix dimension for engines)");
  optional_flag(verify, "--n-max", cfg.n_max, "Largest n (or matrix dimension for engines)");
  optional_flag(verify, "--p-min", cfg.p_min, "Smallest prime");
  optional_flag(verify, "--p-max", cfg.p_max, "Largest prime");
  optional_flag(verify, "--c-min", cfg.c_min, "Smallest c");
  optional_flag(verify, "--c-max", cfg.c_max, "Largest c");
  optional_flag(verify, "--d-min", cfg.d_min, "Smallest d");
  optional_flag(verify, "--d-max", cfg.d_max, "Largest d");
  optional_flag(verify, "--trials", cfg.trials, "Random trials per grid point");
  verify->add_option("--seed", cfg.seed, "Seed for sampled suites")->capture_default_str();
  verify->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", cfg.out, "Report path (stdout when omitted)");
  verify->add_option("--format", verify_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // scan conjecture
  std::string part = "i";
  std::int64_t scan_p_max = harness::kDefaultScanPMax;
  std::string scan_out;
  std::string scan_format = "csv";
  unsigned scan_threads = default_threads();
  auto* scan = app.add_subcommand("scan", "Observational scans");
  scan->require_subcommand(1);
  auto* conjecture = scan->add_subcommand("conjecture", "Scan the open divisibility statements");
  conjecture->add_option("--part", part, "i, ii or iii")->required()->check(CLI::IsMember({"i", "ii", "iii"}));
  conjecture->add_option("--p-max", scan_p_max, "Largest prime scanned")->capture_default_str();
  conjecture->add_option("--out", scan_out, "Report path (stdout when omitted)");
  conjecture->add_option("--format", scan_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  conjecture->add_option("--threads", scan_threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) {
      const harness::ComputeResult result = harness::compute(req);
      for (const auto& line : result.lines) std::cout << line << '\n';
      return result.consistent ? kExitOk : kExitFail;
    }

    if (*verify) {
      cfg.format = harness::parse_format(verify_format);
      std::vector<harness::VerificationRecord> records;
      if (cfg.out.empty()) {
        harness::ReportWriter writer(std::cout, cfg.format);
        records = harness::run_suite(cfg, [&](const harness::VerificationRecord& r) { writer.write(r); });
      } else {
        records = harness::run_suite(cfg);
      }
      const harness::Tally t = harness::tally(records);
      std::cerr << cfg.suite << ": " << records.size() << " records, " << t.pass << " pass, " << t.fail << " fail, "
                << t.skip << " skip\n";
      return t.fail == 0 ? kExitOk : kExitFail;
    }

    if (*conjecture) {
      const harness::ReportFormat format = harness::parse_format(scan_format);
      const harness::ConjecturePart which = harness::parse_part(part);
      harness::ScanSummary summary;
      if (scan_out.empty()) {
        harness::ReportWriter writer(std::cout, format);
        summary = harness::scan_conjecture(which, scan_p_max, "", scan_threads, format,
                                           [&](const harness::VerificationRecord& r) { writer.write(r); });
      } else {
        summary = harness::scan_conjecture(which, scan_p_max, scan_out, scan_threads, format);
      }
      std::cerr << "conjecture part " << part << " up to p = " << scan_p_max << ": " << summary.checked
                << " primes checked, " << summary.divisible << " divisible";
      if (summary.counterexamples.empty()) {
        std::cerr << ", no counterexamples\n";
        return kExitOk;
      }
      std::cerr << ", counterexamples:";
      for (std::uint64_t p : summary.counterexamples) std::cerr << ' ' << p;
      std::cerr << '\n';
      return kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PoleError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
