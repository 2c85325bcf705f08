#include "iinf/error.hpp"

namespace iinf {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonInjective: return "NonInjective";
    case ErrorKind::SourceIsHole: return "SourceIsHole";
    case ErrorKind::TargetIsFixed: return "TargetIsFixed";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotDRelated: return "NotDRelated";
    case ErrorKind::NotBijection: return "NotBijection";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::EqualElements: return "EqualElements";
    case ErrorKind::ConstraintOutsideDomain: return "ConstraintOutsideDomain";
    case ErrorKind::WindowTooLarge: return "WindowTooLarge";
  }
  return "Error";
}

}  // namespace iinf
