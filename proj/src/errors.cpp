#include "kframe/errors.hpp"

namespace kframe {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotPSD: return "NotPSD";
    case Errc::Singular: return "Singular";
    case Errc::NormExceedsOne: return "NormExceedsOne";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidSymmetry: return "InvalidSymmetry";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotAFrame: return "NotAFrame";
    case Errc::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case Errc::NotSquareInvertible: return "NotSquareInvertible";
    case Errc::NotAProjection: return "NotAProjection";
    case Errc::DoesNotCommuteWithJ: return "DoesNotCommuteWithJ";
    case Errc::OverlappingMasks: return "OverlappingMasks";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::BadIndexCover: return "BadIndexCover";
    case Errc::SubfamilyNotFrame: return "SubfamilyNotFrame";
    case Errc::NotUnitNorm: return "NotUnitNorm";
    case Errc::KLessThanN: return "KLessThanN";
    case Errc::NotFFCritical: return "NotFFCritical";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::SearchLimitExceeded: return "SearchLimitExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace kframe
