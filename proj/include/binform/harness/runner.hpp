#ifndef BINFORM_HARNESS_RUNNER_HPP
#define BINFORM_HARNESS_RUNNER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "binform/harness/record.hpp"

namespace binform::harness {

/// A grid point: the record skeleton (suite + params) and the work that fills
/// in computed/predicted/verdict.
struct Check {
  VerificationRecord base;
  std::function<void(VerificationRecord&)> run;
};

using RecordSink = std::function<void(const VerificationRecord&)>;

namespace detail {

inline VerificationRecord execute(const Check& check) {
  VerificationRecord rec = check.base;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    check.run(rec);
  } catch (const std::exception& ex) {
    rec.verdict = Verdict::Fail;
    rec.computed = std::string("error: ") + ex.what();
  }
  rec.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace detail

/// Runs every check on `threads` workers. The sink sees records in grid
/// order, each as soon as it and all its predecessors are done.
inline std::vector<VerificationRecord> run_checks(const std::vector<Check>& checks, unsigned threads,
                                                  const RecordSink& sink = {}) {
  std::vector<VerificationRecord> out;
  out.reserve(checks.size());
  if (threads <= 1 || checks.size() <= 1) {
    for (const Check& check : checks) {
      out.push_back(detail::execute(check));
      if (sink) sink(out.back());
    }
    return out;
  }

  std::vector<std::optional<VerificationRecord>> slots(checks.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      VerificationRecord rec = detail::execute(checks[i]);
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(rec);
      }
      ready.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  const unsigned count = std::min<std::size_t>(threads, checks.size());
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);

  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return slots[i].has_value(); });
    out.push_back(std::move(*slots[i]));
    slots[i].reset();
    lock.unlock();
    if (sink) sink(out.back());
  }
  return out;
}

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

inline Tally tally(const std::vector<VerificationRecord>& records) {
  Tally t;
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::Pass: ++t.pass; break;
      case Verdict::Fail: ++t.fail; break;
      case Verdict::Skip: ++t.skip; break;
    }
  }
  return t;
}

}  // namespace binform::harness

#endif  // BINFORM_HARNESS_RUNNER_HPP
