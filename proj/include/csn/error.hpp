#pragma once

#include <stdexcept>
#include <string>

namespace csn {

enum class ErrorCode {
  NodeCount,        // n != L*R + E
  KRange,           // k outside [1, n-1]
  NodeShape,        // L < 1, R < 1 or E < 0
  DInvalid,         // d_I != R - 1
  BandwidthOrder,   // beta_I < beta_C
  NegativeValue,    // alpha or beta_C below zero
  DCRange,          // d_C outside [k - R + 1, n - R]
  Infeasible,       // cannot select k nodes
  InvalidOrder,     // cluster order does not fit the system
  S0Range,          // closed-form sequencing needs s0 in {0, 1}
  PositionRange,    // separate position outside [1, k]
  UnsupportedE,     // no closed form for E >= 2
  Unstorable,       // file larger than the saturated capacity
  BudgetExceeded,   // enumeration would exceed the budget
  SingularSystem,   // collection set does not determine the message
  AlignmentFailure, // repair downloads cannot recover the lost symbols
  SearchExhausted,  // no code instance within the attempt budget
  InvalidField,     // modulus not prime
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace csn
