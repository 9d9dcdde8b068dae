#include "petaluma/jet.hpp"

#include "petaluma/error.hpp"

namespace petaluma {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EvenLength: return "EvenLength";
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::NormalizationFailure: return "NormalizationFailure";
    case Errc::IntegralityFailure: return "IntegralityFailure";
    case Errc::UnitFailure: return "UnitFailure";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::MultiComponent: return "MultiComponent";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::NotThreeEdgeConnected: return "NotThreeEdgeConnected";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InconsistentCode: return "InconsistentCode";
    case Errc::ParamError: return "ParamError";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace petaluma
