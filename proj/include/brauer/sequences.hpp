#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/half_int.hpp"
#include "brauer/partitions.hpp"

namespace brauer {

/// The strictly increasing sequence i_{d,lambda} = (d - lambda_1 + 1, d - lambda_2 + 2, ...)
/// with fixed tail entry(k) = d + k for k > length(lambda).
///
/// Only (charge, shape) is stored; entries are computed on demand.
class ChargedSequence {
 public:
  ChargedSequence() = default;
  ChargedSequence(Partition shape, HalfInt charge) : charge_(charge), shape_(std::move(shape)) {}

  HalfInt charge() const { return charge_; }
  const Partition& shape() const { return shape_; }

  /// entry(k) for k >= 1.
  HalfInt entry(std::size_t k) const {
    return charge_ - shape_.row(k - 1) + static_cast<std::int64_t>(k);
  }

  /// entry(1), ..., entry(n).
  std::vector<HalfInt> window(std::size_t n) const {
    std::vector<HalfInt> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) out.push_back(entry(k));
    return out;
  }

  /// 1-based index k with entry(k) == value, or 0 if no entry equals value.
  std::size_t index_of(HalfInt value) const {
    const std::size_t len = shape_.length();
    for (std::size_t k = 1; k <= len; ++k) {
      HalfInt e = entry(k);
      if (e == value) return k;
      if (e > value) return 0;
    }
    // tail: value = d + k with k > len
    HalfInt offset = value - charge_;
    if (!offset.is_integer()) return 0;
    std::int64_t k = offset.integer_value();
    return k > static_cast<std::int64_t>(len) ? static_cast<std::size_t>(k) : 0;
  }

  bool has_zero_entry() const { return index_of(HalfInt{}) != 0; }

  /// Number of negative entries (finite because the tail eventually exceeds 0).
  std::int64_t negative_entry_count() const {
    std::int64_t count = 0;
    std::size_t k = 1;
    for (; k <= shape_.length(); ++k)
      if (entry(k).is_negative()) ++count;
    for (; (charge_ + static_cast<std::int64_t>(k)).is_negative(); ++k) ++count;
    return count;
  }

  /// Builds the sequence whose first entries are `prefix` and whose remaining
  /// entries follow the tail d + k. Throws if the result is not strictly
  /// increasing or does not join the tail.
  static ChargedSequence from_entries(HalfInt charge, std::span<const HalfInt> prefix) {
    std::vector<int> parts;
    for (std::size_t k = 1; k <= prefix.size(); ++k) {
      HalfInt e = prefix[k - 1];
      if (k > 1 && !(prefix[k - 2] < e)) throw std::invalid_argument("entries not strictly increasing");
      HalfInt diff = charge + static_cast<std::int64_t>(k) - e;
      if (!diff.is_integer() || diff.is_negative())
        throw std::invalid_argument("entry " + e.str() + " incompatible with charge " + charge.str());
      parts.push_back(static_cast<int>(diff.integer_value()));
    }
    return ChargedSequence(Partition(std::move(parts)), charge);
  }

  bool operator==(const ChargedSequence&) const = default;
  auto operator<=>(const ChargedSequence& o) const {
    if (auto c = charge_ <=> o.charge_; c != 0) return c;
    return shape_ <=> o.shape_;
  }

 private:
  HalfInt charge_;
  Partition shape_;
};

inline ChargedSequence make_sequence(const Partition& lambda, HalfInt charge) {
  return ChargedSequence(lambda, charge);
}

enum class NegParity { Even = 0, Odd = 1, Any = 2 };

inline std::string to_string(NegParity p) {
  switch (p) {
    case NegParity::Even: return "0";
    case NegParity::Odd: return "1";
    case NegParity::Any: return "*";
  }
  return "?";
}

/// Canonical W_infinity (type D) orbit invariant of a charged sequence.
///
/// `deviation` maps an absolute value v to (multiplicity of v among |entry(k)|)
/// minus (multiplicity among the vacuum entries |d + k|). `parity` is the
/// number of negative entries mod 2, or Any when a zero entry frees the sign.
struct OrbitKey {
  HalfInt charge;
  std::map<HalfInt, std::int64_t> deviation;
  NegParity parity = NegParity::Even;

  bool operator==(const OrbitKey&) const = default;
  auto operator<=>(const OrbitKey&) const = default;
};

inline OrbitKey orbit_key(const ChargedSequence& s) {
  OrbitKey key{s.charge(), {}, NegParity::Even};
  const std::size_t len = s.shape().length();
  for (std::size_t k = 1; k <= len; ++k) {
    key.deviation[s.entry(k).abs()] += 1;
    key.deviation[(s.charge() + static_cast<std::int64_t>(k)).abs()] -= 1;
  }
  std::erase_if(key.deviation, [](const auto& kv) { return kv.second == 0; });
  if (s.has_zero_entry())
    key.parity = NegParity::Any;
  else
    key.parity = s.negative_entry_count() % 2 ? NegParity::Odd : NegParity::Even;
  return key;
}

/// Decides t = w(s) for some w in W_infinity. W_infinity acts by permutations
/// composed with an even number of sign changes; a zero entry makes the
/// number of sign changes free.
inline bool same_orbit(const ChargedSequence& s, const ChargedSequence& t) {
  if (s.charge() != t.charge()) throw std::invalid_argument("orbits compare only within one sector");
  // beyond the longer shape both sequences are the literal tail d + k
  const std::size_t window = std::max(s.shape().length(), t.shape().length());
  std::vector<HalfInt> abs_s, abs_t;
  for (std::size_t k = 1; k <= window; ++k) {
    abs_s.push_back(s.entry(k).abs());
    abs_t.push_back(t.entry(k).abs());
  }
  std::sort(abs_s.begin(), abs_s.end());
  std::sort(abs_t.begin(), abs_t.end());
  if (abs_s != abs_t) return false;
  if (s.has_zero_entry()) return true;
  return (s.negative_entry_count() - t.negative_entry_count()) % 2 == 0;
}

}  // namespace brauer
