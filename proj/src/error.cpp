#include "flatpipe/error.hpp"

namespace flatpipe {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NonPositive: return "NonPositive";
    case Errc::PorosityRange: return "PorosityRange";
    case Errc::AngleRange: return "AngleRange";
    case Errc::GridTooSmall: return "GridTooSmall";
    case Errc::FootprintOutside: return "FootprintOutside";
    case Errc::OverlappingFootprints: return "OverlappingFootprints";
    case Errc::NegativePower: return "NegativePower";
    case Errc::IncompatibleSource: return "IncompatibleSource";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroDrop: return "ZeroDrop";
    case Errc::BracketFailure: return "BracketFailure";
    case Errc::NotStripLayout: return "NotStripLayout";
    case Errc::EmptyList: return "EmptyList";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::InvalidValue: return "InvalidValue";
  }
  return "Unknown";
}

Error::Error(Errc code, std::string module, const std::string& message, int line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      module_(std::move(module)),
      line_(line) {}

}  // namespace flatpipe
