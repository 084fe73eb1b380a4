#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expdom {

enum class ErrorKind {
  MalformedHeader,
  MalformedEdge,
  MalformedGraph6,
  MalformedSet,
  VertexOutOfRange,
  DuplicateEdge,
  Loop,
  Io,
  InvalidArgument,
  Precondition,
  NotATree,
  NotSubcubic,
  NotCubic,
  Guard,
  BudgetExhausted,
  StaleStep,
  NotACover,
  NotDominating,
  AlreadyDominating,
  UnknownName,
  BoundViolation,
  Integrity,
};

std::string_view error_kind_name(ErrorKind kind);

/// Domain error carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the exact solver when every subset up to the size budget failed.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(int lower_bound, long long explored)
      : Error(ErrorKind::BudgetExhausted,
              "no exponential dominating set within budget; gamma_e >= " +
                  std::to_string(lower_bound)),
        lower_bound_(lower_bound),
        explored_(explored) {}

  int lower_bound() const noexcept { return lower_bound_; }
  long long explored() const noexcept { return explored_; }

 private:
  int lower_bound_;
  long long explored_;
};

}  // namespace expdom
