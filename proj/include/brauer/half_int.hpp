#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace brauer {

/// Exact element of (1/2)Z, stored as twice its value.
///
/// Contents c_delta(x), charged-sequence entries and root indices all live in
/// Z or Z + 1/2 depending on the parity of delta, so every index in the
/// library is a HalfInt.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }
  /// The half-integer (2k + 1)/2; handy for writing literals like 3/2 as half(3).
  static constexpr HalfInt half(std::int64_t odd) { return HalfInt(odd); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_zero() const { return twice_ == 0; }
  constexpr bool is_negative() const { return twice_ < 0; }

  /// Only meaningful when is_integer().
  constexpr std::int64_t integer_value() const { return twice_ / 2; }

  constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator+(std::int64_t k) const { return HalfInt(twice_ + 2 * k); }
  constexpr HalfInt operator-(std::int64_t k) const { return HalfInt(twice_ - 2 * k); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}

  std::int64_t twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

/// Twice-value parity test: does `index` lie in (delta-1)/2 + Z ?
constexpr bool in_root_index_set(HalfInt index, std::int64_t delta) {
  return ((index.twice() - (delta - 1)) % 2) == 0;
}

/// The charge d = delta/2 - 1 of the wedge sector attached to B(delta).
constexpr HalfInt charge_for_delta(std::int64_t delta) { return HalfInt::from_twice(delta - 2); }

/// Inverse of charge_for_delta.
constexpr std::int64_t delta_for_charge(HalfInt charge) { return charge.twice() + 2; }

}  // namespace brauer

template <>
struct std::hash<brauer::HalfInt> {
  std::size_t operator()(brauer::HalfInt h) const noexcept {
    return std::hash<std::int64_t>{}(h.twice());
  }
};
