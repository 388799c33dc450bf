#pragma once

#include <stdexcept>
#include <string>

namespace dnsurf {

enum class ErrorCode {
  // gluing spec / construction
  NonInvolutiveGluing,
  SelfGluedFace,
  InvalidComplexData,
  // poset queries
  UnknownVertex,
  NotVertexDetermined,
  NotAnAutomorphism,
  FixedFace,
  DegenerateOrbitFace,
  // cochains
  ComplexMismatch,
  NotACocycle,
  NotACutFunction,
  // closedness
  NotClosed,
  NotClosed3ManifoldFVector,
  // generators
  TooSmall,
  // analysis
  BadParity,
  NoSuchR,
  WrongH1Dimension,
  BudgetExceeded,
  // serialization
  FormatError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace dnsurf
