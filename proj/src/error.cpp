#include "kpx/error.hpp"

namespace kpx {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::MissingEndpoint: return "MissingEndpoint";
      case ErrorKind::BadSquare: return "BadSquare";
      case ErrorKind::BadEdge: return "BadEdge";
      case ErrorKind::DuplicateId: return "DuplicateId";
      case ErrorKind::NotBijective: return "NotBijective";
      case ErrorKind::CubeInconsistent: return "CubeInconsistent";
      case ErrorKind::NotComposable: return "NotComposable";
      case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
      case ErrorKind::RangeMismatch: return "RangeMismatch";
      case ErrorKind::NotAcyclic: return "NotAcyclic";
      case ErrorKind::NotInPi: return "NotInPi";
      case ErrorKind::PairNotEligible: return "PairNotEligible";
      case ErrorKind::IndexEscapesPi: return "IndexEscapesPi";
      case ErrorKind::NotCore: return "NotCore";
      case ErrorKind::UnknownSymbol: return "UnknownSymbol";
      case ErrorKind::UnknownId: return "UnknownId";
      case ErrorKind::NotField: return "NotField";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::CoefficientNotInRing: return "CoefficientNotInRing";
      case ErrorKind::BadRing: return "BadRing";
      case ErrorKind::Internal: return "Internal";
    }
    return "Internal";
  }

}  // namespace kpx
