#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltafilt {

enum class Errc {
  DimensionMismatch,
  NotPrime,
  UnknownLabel,
  CycleDetected,
  CapExceeded,
  PreconditionViolated,
  InvalidAlgebra,
  InvalidRepresentation,
  NotHereditary,
  ZeroModule,
  NotASubmodule,
  NoRetraction,
  NotValidated,
  FactorNotInDelta,
  NestingViolation,
  SplitFailed,
  NotSorted,
  ModuleMismatch,
  NotExact,
  NotIdempotent,
  TraceSumMismatch,
  IllegalSwap,
  ParseError,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotPrime: return "NotPrime";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InvalidAlgebra: return "InvalidAlgebra";
    case Errc::InvalidRepresentation: return "InvalidRepresentation";
    case Errc::NotHereditary: return "NotHereditary";
    case Errc::ZeroModule: return "ZeroModule";
    case Errc::NotASubmodule: return "NotASubmodule";
    case Errc::NoRetraction: return "NoRetraction";
    case Errc::NotValidated: return "NotValidated";
    case Errc::FactorNotInDelta: return "FactorNotInDelta";
    case Errc::NestingViolation: return "NestingViolation";
    case Errc::SplitFailed: return "SplitFailed";
    case Errc::NotSorted: return "NotSorted";
    case Errc::ModuleMismatch: return "ModuleMismatch";
    case Errc::NotExact: return "NotExact";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::TraceSumMismatch: return "TraceSumMismatch";
    case Errc::IllegalSwap: return "IllegalSwap";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace deltafilt
