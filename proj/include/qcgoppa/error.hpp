#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcgoppa {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class Errc {
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  ContextMismatch,
  NonDivisorDegree,
  TableMiss,
  NotInSubfield,
  DivisionByZeroPoly,
  DegreeZero,
  ScaleExceeded,
  SingularMatrix,
  OrderNotFound,
  DomainNotClosed,
  UnsupportedOrder,
  CubeRootAbsent,
  RootAtA,
  CoefficientsNotRational,
  FixedBeta,
  DegenerateMatrix,
  UnsupportedS,
  NoCubeRootOfUnity,
  RootInSupport,
  OrbitNotUniform,
  NotClosed,
  NonDivisor,
  InvalidSupport,
  ParseError,
  InvalidArgument,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qcgoppa
