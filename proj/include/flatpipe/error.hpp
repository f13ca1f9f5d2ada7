#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatpipe {

enum class Errc {
  OutOfRange,
  NonPositive,
  PorosityRange,
  AngleRange,
  GridTooSmall,
  FootprintOutside,
  OverlappingFootprints,
  NegativePower,
  IncompatibleSource,
  NoConvergence,
  ShapeMismatch,
  ZeroDrop,
  BracketFailure,
  NotStripLayout,
  EmptyList,
  NotIncreasing,
  UnknownKey,
  MalformedLine,
  InvalidValue,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `module()` names the component that
/// detected it ("fluids", "elliptic", ...), which the CLI echoes in its
/// one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string module, const std::string& message, int line = 0);

  Errc code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }
  /// 1-based line number for config-file errors, 0 otherwise.
  int line() const noexcept { return line_; }

 private:
  Errc code_;
  std::string module_;
  int line_;
};

}  // namespace flatpipe
