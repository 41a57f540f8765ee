#include "mutwb/error.hpp"

namespace mutwb {

std::string_view reason_of(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::LoopAtVertex: return "loop-at-vertex";
    case ErrorKind::NotSimple: return "not-simple";
    case ErrorKind::NotRegular: return "not-regular";
    case ErrorKind::NonMonomialConstant: return "non-monomial-constant";
    case ErrorKind::DivisionByZeroExpr: return "division-by-zero";
    case ErrorKind::PoleAtPoint: return "pole-at-point";
    case ErrorKind::ZeroMonodromy: return "zero-monodromy";
    case ErrorKind::NotSplitOverBase: return "not-split-over-base";
    case ErrorKind::NotSemisimple: return "not-semisimple";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mutwb
