#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "brauer/half_int.hpp"
#include "brauer/rational.hpp"
#include "brauer/sequences.hpp"
#include "brauer/weights.hpp"

namespace brauer {

/// Sparse vector in the sector of charge d of the semi-infinite wedge space,
/// in the basis w_i = w_{i_1} ^ w_{i_2} ^ ... indexed by charged sequences.
class WedgeVector {
 public:
  using Terms = std::map<ChargedSequence, Rational>;

  explicit WedgeVector(HalfInt charge) : charge_(charge) {}

  static WedgeVector basis(const ChargedSequence& s, Rational coeff = 1) {
    WedgeVector v(s.charge());
    v.add(s, std::move(coeff));
    return v;
  }

  HalfInt charge() const { return charge_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  void add(const ChargedSequence& s, const Rational& coeff) {
    if (s.charge() != charge_) throw std::invalid_argument("basis vector from a different sector");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  WedgeVector& operator+=(const WedgeVector& o) {
    if (o.charge_ != charge_) throw std::invalid_argument("vectors from different sectors");
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
  friend WedgeVector operator*(const Rational& k, const WedgeVector& v) {
    WedgeVector out(v.charge_);
    for (const auto& [s, c] : v.terms_) out.add(s, k * c);
    return out;
  }

  bool operator==(const WedgeVector&) const = default;

 private:
  HalfInt charge_;
  Terms terms_;
};

namespace detail {

inline void check_generator_index(HalfInt i, HalfInt charge) {
  // i in I  <=>  i - 1/2 in d + Z
  if (!(i - HalfInt::half(1) - charge).is_integer())
    throw std::invalid_argument("generator index " + i.str() + " does not match sector charge " +
                                charge.str());
}

/// Moves the entry equal to `from` to `to` (= from +- 1); nullopt if no entry
/// equals `from` or if `to` is already occupied.
inline std::optional<ChargedSequence> move_entry(const ChargedSequence& s, HalfInt from, HalfInt to) {
  const std::size_t k = s.index_of(from);
  if (k == 0 || s.index_of(to) != 0) return std::nullopt;
  auto entries = s.window(std::max(k, s.shape().length()));
  entries[k - 1] = to;
  return ChargedSequence::from_entries(s.charge(), entries);
}

}  // namespace detail

/// e_i on a basis vector: entry i - 1/2 becomes i + 1/2.
inline std::optional<ChargedSequence> raise_basis(HalfInt i, const ChargedSequence& s) {
  detail::check_generator_index(i, s.charge());
  return detail::move_entry(s, i - HalfInt::half(1), i + HalfInt::half(1));
}

/// f_i on a basis vector: entry i + 1/2 becomes i - 1/2.
inline std::optional<ChargedSequence> lower_basis(HalfInt i, const ChargedSequence& s) {
  detail::check_generator_index(i, s.charge());
  return detail::move_entry(s, i + HalfInt::half(1), i - HalfInt::half(1));
}

inline WedgeVector apply_raising(HalfInt i, const WedgeVector& v) {
  detail::check_generator_index(i, v.charge());
  WedgeVector out(v.charge());
  for (const auto& [s, c] : v.terms())
    if (auto r = raise_basis(i, s)) out.add(*r, c);
  return out;
}

inline WedgeVector apply_lowering(HalfInt i, const WedgeVector& v) {
  detail::check_generator_index(i, v.charge());
  WedgeVector out(v.charge());
  for (const auto& [s, c] : v.terms())
    if (auto r = lower_basis(i, s)) out.add(*r, c);
  return out;
}

/// The symmetric-pair generator b_i = e_i + f_{-i}.
inline WedgeVector apply_b(HalfInt i, const WedgeVector& v) {
  return apply_raising(i, v) + apply_lowering(-i, v);
}

/// wt_d(s) - wt_d(vacuum) in alpha-coordinates:
/// sum_k (eps_{d+k} - eps_{entry(k)}), each difference telescoped through
/// eps_a - eps_{a+1} = alpha_{a+1/2}.
inline RootVector relative_weight(const ChargedSequence& s) {
  RootVector v;
  const HalfInt half = HalfInt::half(1);
  for (std::size_t k = 1; k <= s.shape().length(); ++k) {
    const HalfInt vacuum = s.charge() + static_cast<std::int64_t>(k);
    // entry(k) <= vacuum; eps_vacuum - eps_entry = -(alpha_{entry+1/2} + ... + alpha_{vacuum-1/2})
    for (HalfInt a = s.entry(k); a < vacuum; a = a + 1) v.add(a + half, -1);
  }
  return v;
}

}  // namespace brauer
