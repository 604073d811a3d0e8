#include "qcgoppa/error.hpp"

namespace qcgoppa {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NonDivisorDegree: return "NonDivisorDegree";
    case Errc::TableMiss: return "TableMiss";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::OrderNotFound: return "OrderNotFound";
    case Errc::DomainNotClosed: return "DomainNotClosed";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::CubeRootAbsent: return "CubeRootAbsent";
    case Errc::RootAtA: return "RootAtA";
    case Errc::CoefficientsNotRational: return "CoefficientsNotRational";
    case Errc::FixedBeta: return "FixedBeta";
    case Errc::DegenerateMatrix: return "DegenerateMatrix";
    case Errc::UnsupportedS: return "UnsupportedS";
    case Errc::NoCubeRootOfUnity: return "NoCubeRootOfUnity";
    case Errc::RootInSupport: return "RootInSupport";
    case Errc::OrbitNotUniform: return "OrbitNotUniform";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NonDivisor: return "NonDivisor";
    case Errc::InvalidSupport: return "InvalidSupport";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qcgoppa
