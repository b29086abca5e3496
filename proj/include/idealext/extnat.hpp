#ifndef IDEALEXT_EXTNAT_HPP
#define IDEALEXT_EXTNAT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "idealext/error.hpp"

namespace idealext {

/// A value of ℕ ∪ {∞}. Infinity is a tag, never a sentinel integer.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  std::uint64_t value() const {
    if (infinite_) throw Error(ErrorCode::Overflow, "value() called on infinity");
    return value_;
  }

  friend ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) return infinity();
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &out))
      throw Error(ErrorCode::Overflow, "extended natural addition");
    return ExtNat(out);
  }

  /// ∞ - k = ∞; a finite value below k throws.
  friend ExtNat operator-(ExtNat a, std::uint64_t k) {
    if (a.infinite_) return a;
    if (a.value_ < k) throw Error(ErrorCode::Overflow, "extended natural subtraction below zero");
    return ExtNat(a.value_ - k);
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return infinite_ ? "infinity" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, ExtNat e) { return os << e.str(); }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline ExtNat min(ExtNat a, ExtNat b) { return b < a ? b : a; }
inline ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

}  // namespace idealext

#endif  // IDEALEXT_EXTNAT_HPP
