#pragma once

/// @file core.hpp
/// Shared scalar type, error machinery, and numeric thresholds used across
/// the library.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cqg {

/// All coefficients live in the complex double field.
using Complex = std::complex<double>;

/// Machine-level tolerance knobs. Every routine that compares against zero
/// takes one of these (or a caller-supplied override); nothing hard-codes a
/// magic number at a call site.
namespace thresholds {
/// Entries with modulus at or below this are dropped from sparse storage.
inline constexpr double kPrune = 1e-14;
/// Relative pivot threshold for Gaussian elimination: a pivot counts as zero
/// when its modulus is below kPivot times the largest modulus in the input.
inline constexpr double kPivot = 1e-10;
/// Default residual / positivity tolerance for axiom verification.
inline constexpr double kVerify = 1e-9;
}  // namespace thresholds

/// Error categories surfaced by the library. Each value names the structural
/// fact that failed to hold, not the routine that noticed.
enum class Errc {
  kDimensionMismatch,   ///< tensor/matrix shapes are incompatible
  kNoSolution,          ///< linear system is inconsistent
  kNotHermitian,        ///< eigensolver input is not Hermitian
  kNoConvergence,       ///< iterative routine exhausted its sweep budget
  kNotAHopfAlgebra,     ///< antipode does not exist / axioms inconsistent
  kNotCosemisimple,     ///< no normalizable two-sided integral functional
  kSingularGramForm,    ///< a required sesquilinear form is degenerate
  kNotACocycle,         ///< 2-cocycle conditions fail
  kNotAMatchedPair,     ///< matched-pair compatibilities fail
  kNotALinkedPair,      ///< cocycle linked-pair axioms fail
  kNotASingerPair,      ///< commutative/cocommutative pair axioms fail
  kStarCompatFailed,    ///< a star structure cannot be attached
  kInvalidArgument,     ///< malformed input data
  kParseError,          ///< malformed input file
};

/// Converts an error code to its stable identifier (used in CLI output).
inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kNoSolution: return "NoSolution";
    case Errc::kNotHermitian: return "NotHermitian";
    case Errc::kNoConvergence: return "NoConvergence";
    case Errc::kNotAHopfAlgebra: return "NotAHopfAlgebra";
    case Errc::kNotCosemisimple: return "NotCosemisimple";
    case Errc::kSingularGramForm: return "SingularGramForm";
    case Errc::kNotACocycle: return "NotACocycle";
    case Errc::kNotAMatchedPair: return "NotAMatchedPair";
    case Errc::kNotALinkedPair: return "NotALinkedPair";
    case Errc::kNotASingerPair: return "NotASingerPair";
    case Errc::kStarCompatFailed: return "StarCompatFailed";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Library exception: a structural precondition failed. Verification
/// routines, by contrast, return residual reports instead of throwing.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace cqg
