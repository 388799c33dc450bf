#include "dnsurf/errors.hpp"

namespace dnsurf {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonInvolutiveGluing: return "NonInvolutiveGluing";
    case ErrorCode::SelfGluedFace: return "SelfGluedFace";
    case ErrorCode::InvalidComplexData: return "InvalidComplexData";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotVertexDetermined: return "NotVertexDetermined";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::FixedFace: return "FixedFace";
    case ErrorCode::DegenerateOrbitFace: return "DegenerateOrbitFace";
    case ErrorCode::ComplexMismatch: return "ComplexMismatch";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotACutFunction: return "NotACutFunction";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotClosed3ManifoldFVector: return "NotClosed3ManifoldFVector";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::NoSuchR: return "NoSuchR";
    case ErrorCode::WrongH1Dimension: return "WrongH1Dimension";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "UnknownError";
}

}  // namespace dnsurf
