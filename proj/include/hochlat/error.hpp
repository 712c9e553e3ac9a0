#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hochlat {

enum class ErrorKind {
  CycleDetected,
  NotCover,
  NotBounded,
  NotGraded,
  NotInterval,
  TooLarge,
  NotALattice,
  NoUniqueMin,
  NotSemidistributive,
  NotJoinSemidistributive,
  NotExtremal,
  ChainOrderingFailed,
  NotAFace,
  MalformedLabelSet,
  MalformedWord,
  SizeBound,
  InterpolationDegeneracy,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable; the message
/// carries the witness (offending pair, bound, etc.).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hochlat
