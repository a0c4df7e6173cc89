#ifndef KPX_ERROR_HPP_
#define KPX_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kpx {

  enum class ErrorKind {
    MissingEndpoint,
    BadSquare,
    BadEdge,
    DuplicateId,
    NotBijective,
    CubeInconsistent,
    NotComposable,
    DegreeOutOfRange,
    RangeMismatch,
    NotAcyclic,
    NotInPi,
    PairNotEligible,
    IndexEscapesPi,
    NotCore,
    UnknownSymbol,
    UnknownId,
    NotField,
    ParseError,
    CoefficientNotInRing,
    BadRing,
    Internal
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above so
  // that callers (and the CLI exit-code mapping) can dispatch on it.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
          kind_(kind),
          detail_(detail) {}

    ErrorKind kind() const noexcept {
      return kind_;
    }

    std::string const& detail() const noexcept {
      return detail_;
    }

   private:
    ErrorKind   kind_;
    std::string detail_;
  };

}  // namespace kpx

#endif  // KPX_ERROR_HPP_
