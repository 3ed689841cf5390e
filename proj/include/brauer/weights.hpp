#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "brauer/half_int.hpp"
#include "brauer/partitions.hpp"
#include "brauer/rational.hpp"

namespace brauer {

/// Finitely supported integer combination of simple roots alpha_i, i in I.
class RootVector {
 public:
  using Map = std::map<HalfInt, std::int64_t>;

  RootVector() = default;
  explicit RootVector(const Map& coeffs) {
    for (auto [i, c] : coeffs) add(i, c);
  }

  void add(HalfInt index, std::int64_t value) {
    if (value == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(index, value);
    if (!inserted && (it->second += value) == 0) coeffs_.erase(it);
  }

  std::int64_t coeff(HalfInt index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Sum of all coefficients.
  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto [i, c] : coeffs_) t += c;
    return t;
  }

  RootVector operator-() const {
    RootVector out;
    for (auto [i, c] : coeffs_) out.coeffs_.emplace(i, -c);
    return out;
  }
  RootVector& operator+=(const RootVector& o) {
    for (auto [i, c] : o.coeffs_) add(i, c);
    return *this;
  }
  RootVector& operator-=(const RootVector& o) {
    for (auto [i, c] : o.coeffs_) add(i, -c);
    return *this;
  }
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }

  bool operator==(const RootVector&) const = default;

 private:
  Map coeffs_;
};

/// Canonical image of a RootVector in Q / Q^theta.
///
/// Q^theta is spanned by alpha_i + alpha_{-i} (i > 0) and, when 0 is an
/// index, by 2 alpha_0. The class of v is therefore determined by
/// r_i = v_i - v_{-i} for i > 0 together with v_0 mod 2.
class SymWeight {
 public:
  using Map = std::map<HalfInt, std::int64_t>;

  SymWeight() = default;
  SymWeight(Map pos_part, std::optional<int> zero_parity)
      : zero_parity_(zero_parity) {
    for (auto [i, c] : pos_part)
      if (c != 0) pos_part_.emplace(i, c);
  }

  const Map& pos_part() const { return pos_part_; }
  /// Present iff 0 is a root index (delta odd).
  std::optional<int> zero_parity() const { return zero_parity_; }

  bool is_zero() const { return pos_part_.empty() && zero_parity_.value_or(0) == 0; }

  friend SymWeight operator+(const SymWeight& a, const SymWeight& b) {
    Map sum = a.pos_part_;
    for (auto [i, c] : b.pos_part_) sum[i] += c;
    std::optional<int> zp;
    if (a.zero_parity_ || b.zero_parity_)
      zp = (a.zero_parity_.value_or(0) + b.zero_parity_.value_or(0)) % 2;
    return SymWeight(std::move(sum), zp);
  }

  bool operator==(const SymWeight&) const = default;

 private:
  Map pos_part_;
  std::optional<int> zero_parity_;
};

namespace detail {
inline std::int64_t require_integral_delta(const Rational& delta, const char* what) {
  auto d = to_int64(delta);
  if (!d) throw std::invalid_argument(what);
  return *d;
}
}  // namespace detail

/// The alpha-part of wt(lambda) = omega_{(delta-1)/2} - sum_x alpha_{c_delta(x)}:
/// coefficient i counts the boxes with shifted content i. The common
/// omega_{(delta-1)/2} is never materialized.
inline RootVector weight_alpha_part(const Partition& lambda, std::int64_t delta) {
  RootVector v;
  for (HalfInt c : contents(lambda, delta)) v.add(c, 1);
  return v;
}

inline RootVector weight_alpha_part(const Partition& lambda, const Rational& delta) {
  return weight_alpha_part(lambda, detail::require_integral_delta(delta, "weights require integral delta"));
}

inline SymWeight reduce_mod_qtheta(const RootVector& v, std::int64_t delta) {
  SymWeight::Map pos;
  std::optional<int> zero_parity;
  const bool zero_is_index = (delta % 2 != 0);
  if (zero_is_index) zero_parity = 0;
  for (auto [i, c] : v.coeffs()) {
    if (!in_root_index_set(i, delta))
      throw std::invalid_argument("root index " + i.str() + " is not in I for delta = " +
                                  std::to_string(delta));
    if (i.is_zero()) {
      zero_parity = static_cast<int>(((c % 2) + 2) % 2);
    } else if (i.is_negative()) {
      pos[-i] -= c;
    } else {
      pos[i] += c;
    }
  }
  return SymWeight(std::move(pos), zero_parity);
}

/// Bar-weight equality: wt(lambda) and wt(mu) agree modulo Q^theta.
inline bool same_bar_weight(const Partition& lambda, const Partition& mu, std::int64_t delta) {
  return reduce_mod_qtheta(weight_alpha_part(lambda, delta) - weight_alpha_part(mu, delta), delta)
      .is_zero();
}

inline bool same_bar_weight(const Partition& lambda, const Partition& mu, const Rational& delta) {
  return same_bar_weight(lambda, mu,
                         detail::require_integral_delta(delta, "weights require integral delta"));
}

/// Bar-weight of a single partition; equal SymWeights <=> same_bar_weight.
inline SymWeight bar_weight(const Partition& lambda, std::int64_t delta) {
  return reduce_mod_qtheta(weight_alpha_part(lambda, delta), delta);
}

/// Finitely supported combination of fundamental weights omega_a.
using OmegaVector = std::map<HalfInt, std::int64_t>;

/// alpha_i = eps_{i-1/2} - eps_{i+1/2} with eps_{a-1/2} = omega_a - omega_{a-1}
/// gives alpha_i = 2 omega_i - omega_{i-1} - omega_{i+1}.
inline OmegaVector alpha_in_omega(HalfInt i) {
  return {{i - 1, -1}, {i, 2}, {i + 1, -1}};
}

inline OmegaVector omega_difference(const OmegaVector& a, const OmegaVector& b) {
  OmegaVector out = a;
  for (auto [k, v] : b) {
    if ((out[k] -= v) == 0) out.erase(k);
  }
  return out;
}

}  // namespace brauer
