#pragma once

#include <stdexcept>
#include <string>

namespace kframe {

/// Failure categories shared by all modules. The CLI maps any thrown
/// Error to exit code 2; negative-but-well-defined analysis results
/// (e.g. "not a frame") are ordinary return values, not errors.
enum class Errc {
  NotSquare,
  NotHermitian,
  NotPSD,
  Singular,
  NormExceedsOne,
  DimensionMismatch,
  InvalidSymmetry,
  LengthMismatch,
  NotAFrame,
  EpsilonOutOfRange,
  NotSquareInvertible,
  NotAProjection,
  DoesNotCommuteWithJ,
  OverlappingMasks,
  SignatureMismatch,
  BadIndexCover,
  SubfamilyNotFrame,
  NotUnitNorm,
  KLessThanN,
  NotFFCritical,
  VerificationFailed,
  SearchLimitExceeded,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kframe
