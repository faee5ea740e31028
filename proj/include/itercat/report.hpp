#pragma once

#include <cstddef>
#include <string>
#include <thread>
#include <vector>

namespace itercat {

/// One violated axiom instance. `locator` identifies the offending tuple,
/// e.g. {"1", "2", "T", "F", "T", "F"} for an interchange component.
struct Finding {
  std::string axiom;
  std::vector<std::string> locator;
  std::string expected;
  std::string found;

  std::string locator_string() const;
  friend bool operator==(const Finding&, const Finding&) = default;
  friend auto operator<=>(const Finding&, const Finding&) = default;
};

class CheckReport {
 public:
  void add(std::string axiom, std::vector<std::string> locator, std::string expected,
           std::string found);
  void add(Finding f) { findings_.push_back(std::move(f)); }

  /// Appends `other`, prepending `prefix` to every locator.
  void merge(const CheckReport& other, const std::vector<std::string>& prefix = {});

  /// Sorts findings by (axiom, locator) and drops exact duplicates.
  void normalize();

  bool ok() const { return findings_.empty(); }
  std::size_t size() const { return findings_.size(); }
  const std::vector<Finding>& findings() const { return findings_; }

  /// Human-readable text, one finding per line.
  std::string to_text() const;
  /// Tab-separated: axiom, locator tuple, expected, found.
  std::string to_lines() const;

 private:
  std::vector<Finding> findings_;
};

struct CheckOptions {
  int jobs = 1;
  /// 0 disables the guard.
  std::size_t max_tuples = 0;
};

/// Throws BudgetExceeded when `estimated` exceeds the configured budget.
void guard_budget(const CheckOptions& opts, std::size_t estimated, const std::string& what);

/// Runs fn(index, report) for index in [0, n), splitting the range across
/// opts.jobs threads. Per-thread reports are merged and normalized, so the
/// result does not depend on the thread count.
template <typename Fn>
CheckReport run_partitioned(std::size_t n, const CheckOptions& opts, Fn&& fn) {
  std::size_t jobs = opts.jobs < 1 ? 1 : static_cast<std::size_t>(opts.jobs);
  if (jobs > n) jobs = n == 0 ? 1 : n;
  std::vector<CheckReport> parts(jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += jobs) fn(i, parts[t]);
      });
    }
    for (auto& th : threads) th.join();
  }
  CheckReport out;
  for (auto& p : parts) out.merge(p);
  out.normalize();
  return out;
}

}  // namespace itercat
