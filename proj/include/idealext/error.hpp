#ifndef IDEALEXT_ERROR_HPP
#define IDEALEXT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idealext {

enum class ErrorCode {
  DimensionMismatch,
  Overflow,
  InvalidBox,
  ComplementNotClosed,
  GcdNotOne,
  InvalidSemigroup,
  NotMember,
  EmptyGeneratorSet,
  ZeroGenerator,
  InfinitelyManyAtoms,
  NeedsBoundedMode,
  WrongDimension,
  NoFactorization,
  LdUndefined,
  BasisMismatch,
  NotVerifiedGapAbsorbing,
  EmptyL,
  SingleRClass,
  CapExceeded,
  InfiniteGaps,
  NotAtom,
  FormulaOutOfScope,
  Unsupported,
  InvalidSpec,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the omega search when the length cap truncated the search below
/// the proven bound; carries the best value seen so far.
class CapExceededError : public Error {
 public:
  CapExceededError(std::uint64_t partial_lower_bound, const std::string& what)
      : Error(ErrorCode::CapExceeded, what), lower_bound_(partial_lower_bound) {}

  std::uint64_t partial_lower_bound() const noexcept { return lower_bound_; }

 private:
  std::uint64_t lower_bound_;
};

}  // namespace idealext

#endif  // IDEALEXT_ERROR_HPP
