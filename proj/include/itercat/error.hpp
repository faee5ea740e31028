#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace itercat {

enum class ErrorKind {
  NonComposable,
  MissingEntry,
  ShapeMismatch,
  IndexOutOfRange,
  FoldExceeded,
  BadIndices,
  InvalidSymmetry,
  BoundaryMismatch,
  ParseError,
  DuplicateName,
  DanglingReference,
  UnknownSuite,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace itercat
