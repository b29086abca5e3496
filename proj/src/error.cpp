#include "idealext/error.hpp"

namespace idealext {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidBox: return "InvalidBox";
    case ErrorCode::ComplementNotClosed: return "ComplementNotClosed";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::InvalidSemigroup: return "InvalidSemigroup";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::InfinitelyManyAtoms: return "InfinitelyManyAtoms";
    case ErrorCode::NeedsBoundedMode: return "NeedsBoundedMode";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NoFactorization: return "NoFactorization";
    case ErrorCode::LdUndefined: return "LdUndefined";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::NotVerifiedGapAbsorbing: return "NotVerifiedGapAbsorbing";
    case ErrorCode::EmptyL: return "EmptyL";
    case ErrorCode::SingleRClass: return "SingleRClass";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InfiniteGaps: return "InfiniteGaps";
    case ErrorCode::NotAtom: return "NotAtom";
    case ErrorCode::FormulaOutOfScope: return "FormulaOutOfScope";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

}  // namespace idealext
