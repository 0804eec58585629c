#pragma once

#include <stdexcept>

namespace indrep {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedRank : Error { using Error::Error; };
struct ForeignRoot : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct EnumerationBoundExceeded : Error { using Error::Error; };
struct UnsupportedRankOne : Error { using Error::Error; };
struct SubRootSystemViolation : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct UnsupportedCocycle : Error { using Error::Error; };
struct DecompositionViolation : Error { using Error::Error; };
struct NonAbelianR : Error { using Error::Error; };
struct InvalidGroupTable : Error { using Error::Error; };
struct CensusMismatch : Error { using Error::Error; };
struct RamifiedComponent : Error { using Error::Error; };
struct InconsistentInput : Error { using Error::Error; };
struct NotSelfDual : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace indrep
