#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchflip {

enum class ErrorCode {
  // graph_core
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EdgeNotInGraph,
  InvalidFlip,
  InvalidSlide,
  NotAMatching,
  // oracle
  BudgetExceeded,
  SizeMismatch,
  // strongly_orderable
  NotAPermutation,
  NoPerfectMatching,
  NotPerfect,
  OrderInvalid,
  // outerplanar
  NotTwoConnected,
  NotOuterplanar,
  // cograph
  NotACograph,
  CycleInDifference,
  ConditionViolated,
  // hardness
  MalformedMachine,
  InvalidConfiguration,
  NotBipartite,
  UnbalancedSides,
  KOdd,
  KTooSmall,
  InvalidArgument,
  // io
  ParseError,
  // a broken algorithmic invariant; always a bug
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace matchflip
