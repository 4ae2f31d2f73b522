#include "spechtlab/error.hpp"

namespace spechtlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::UnsupportedPrime: return "UnsupportedPrime";
    case Errc::NotSubtractable: return "NotSubtractable";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NodeOutsideDiagram: return "NodeOutsideDiagram";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::TooFewBeads: return "TooFewBeads";
    case Errc::BadRunnerIndex: return "BadRunnerIndex";
    case Errc::InvalidExpansion: return "InvalidExpansion";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotRestricted: return "NotRestricted";
    case Errc::NotJm: return "NotJm";
    case Errc::NotACore: return "NotACore";
    case Errc::SwapNotLegal: return "SwapNotLegal";
    case Errc::ChainNotFoundWithinBound: return "ChainNotFoundWithinBound";
    case Errc::NotSimple: return "NotSimple";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace spechtlab
