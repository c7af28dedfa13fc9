#include "phaseshift/error.hpp"

namespace phaseshift {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::Precondition: return "precondition violated";
    case ErrorCode::Degenerate: return "degenerate result";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::Quadrature: return "quadrature failure";
    case ErrorCode::Usage: return "usage error";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace phaseshift
