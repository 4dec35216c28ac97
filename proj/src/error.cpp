#include "dehnlab/error.hpp"

namespace dehnlab {

  std::string_view to_string(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::UnknownGenerator: return "UnknownGenerator";
      case ErrorKind::SyntaxError: return "SyntaxError";
      case ErrorKind::ExponentOverflow: return "ExponentOverflow";
      case ErrorKind::EmptyRelator: return "EmptyRelator";
      case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
      case ErrorKind::NotWellDefined: return "NotWellDefined";
      case ErrorKind::StrategyUnlicensed: return "StrategyUnlicensed";
      case ErrorKind::FactorCountMismatch: return "FactorCountMismatch";
      case ErrorKind::NotClosed: return "NotClosed";
      case ErrorKind::NotTrivial: return "NotTrivial";
      case ErrorKind::InvalidCertificate: return "InvalidCertificate";
      case ErrorKind::TooFewFactors: return "TooFewFactors";
      case ErrorKind::MembershipViolation: return "MembershipViolation";
      case ErrorKind::StateLimit: return "StateLimit";
      case ErrorKind::DegenerateInput: return "DegenerateInput";
      case ErrorKind::ConstructionError: return "ConstructionError";
      case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& message, std::size_t position)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind),
        _position(position) {}

}  // namespace dehnlab
