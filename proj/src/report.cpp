#include "itercat/report.hpp"

#include <algorithm>
#include <sstream>

#include "itercat/error.hpp"

namespace itercat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonComposable: return "NonComposable";
    case ErrorKind::MissingEntry: return "MissingEntry";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::FoldExceeded: return "FoldExceeded";
    case ErrorKind::BadIndices: return "BadIndices";
    case ErrorKind::InvalidSymmetry: return "InvalidSymmetry";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

std::string Finding::locator_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < locator.size(); ++i) {
    if (i) s += ",";
    s += locator[i];
  }
  return s + ")";
}

void CheckReport::add(std::string axiom, std::vector<std::string> locator, std::string expected,
                      std::string found) {
  findings_.push_back({std::move(axiom), std::move(locator), std::move(expected), std::move(found)});
}

void CheckReport::merge(const CheckReport& other, const std::vector<std::string>& prefix) {
  for (const auto& f : other.findings_) {
    Finding g = f;
    g.locator.insert(g.locator.begin(), prefix.begin(), prefix.end());
    findings_.push_back(std::move(g));
  }
}

void CheckReport::normalize() {
  std::sort(findings_.begin(), findings_.end());
  findings_.erase(std::unique(findings_.begin(), findings_.end()), findings_.end());
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  if (findings_.empty()) {
    os << "PASS: no findings\n";
    return os.str();
  }
  os << "FAIL: " << findings_.size() << " finding(s)\n";
  for (const auto& f : findings_) {
    os << "  [" << f.axiom << "] at " << f.locator_string() << ": expected " << f.expected
       << ", found " << f.found << "\n";
  }
  return os.str();
}

std::string CheckReport::to_lines() const {
  std::ostringstream os;
  for (const auto& f : findings_) {
    os << f.axiom << '\t' << f.locator_string() << '\t' << f.expected << '\t' << f.found << '\n';
  }
  return os.str();
}

void guard_budget(const CheckOptions& opts, std::size_t estimated, const std::string& what) {
  if (opts.max_tuples != 0 && estimated > opts.max_tuples) {
    throw Error(ErrorKind::BudgetExceeded, what + " needs an estimated " +
                                               std::to_string(estimated) +
                                               " instances (budget " +
                                               std::to_string(opts.max_tuples) + ")");
  }
}

}  // namespace itercat
