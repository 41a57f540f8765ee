#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mutwb {

enum class ErrorKind {
  IndexOutOfRange,
  InvalidArgument,
  LoopAtVertex,
  NotSimple,
  NotRegular,
  NonMonomialConstant,
  DivisionByZeroExpr,
  PoleAtPoint,
  ZeroMonodromy,
  NotSplitOverBase,
  NotSemisimple,
  BudgetExceeded,
  Overflow,
  Parse,
};

/// Machine-readable reason string, e.g. "not-simple". Used verbatim on the wire.
std::string_view reason_of(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view reason() const noexcept { return reason_of(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) {
    fail(ErrorKind::IndexOutOfRange, std::string(what) + ": index " + std::to_string(i) +
                                         " out of range (size " + std::to_string(n) + ")");
  }
}

}  // namespace mutwb
