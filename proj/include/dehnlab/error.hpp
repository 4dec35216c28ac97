#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dehnlab {

  enum class ErrorKind {
    UnknownGenerator,
    SyntaxError,
    ExponentOverflow,
    EmptyRelator,
    AlphabetMismatch,
    NotWellDefined,
    StrategyUnlicensed,
    FactorCountMismatch,
    NotClosed,
    NotTrivial,
    InvalidCertificate,
    TooFewFactors,
    MembershipViolation,
    StateLimit,
    DegenerateInput,
    ConstructionError,
    InvalidArgument
  };

  std::string_view to_string(ErrorKind kind);

  // Every failure raised by the library carries one of the kinds above. The
  // position is only meaningful for SyntaxError (byte offset into the input).
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message, std::size_t position = 0);

    ErrorKind kind() const noexcept {
      return _kind;
    }
    std::size_t position() const noexcept {
      return _position;
    }

   private:
    ErrorKind   _kind;
    std::size_t _position;
  };

}  // namespace dehnlab
