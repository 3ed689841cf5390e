#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/partitions.hpp"
#include "brauer/rational.hpp"
#include "brauer/weights.hpp"

namespace brauer {

/// constant * prod_r (u - r)^{e_r} with rational roots and nonzero integer
/// exponents. The representation is canonical, so equality of rational
/// functions is equality of the stored data.
class FactoredRational {
 public:
  using Factors = std::map<Rational, std::int64_t>;

  FactoredRational() = default;
  explicit FactoredRational(Rational constant) : constant_(std::move(constant)) {
    if (constant_ == 0) throw std::invalid_argument("factored rational needs a nonzero constant");
  }

  /// (u - root)^exponent.
  static FactoredRational linear(const Rational& root, std::int64_t exponent = 1) {
    FactoredRational f;
    f.multiply_factor(root, exponent);
    return f;
  }

  const Rational& constant() const { return constant_; }
  const Factors& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }

  void multiply_factor(const Rational& root, std::int64_t exponent) {
    if (exponent == 0) return;
    auto [it, inserted] = factors_.try_emplace(root, exponent);
    if (!inserted && (it->second += exponent) == 0) factors_.erase(it);
  }

  FactoredRational& operator*=(const FactoredRational& o) {
    constant_ *= o.constant_;
    for (const auto& [r, e] : o.factors_) multiply_factor(r, e);
    return *this;
  }
  FactoredRational& operator/=(const FactoredRational& o) {
    constant_ /= o.constant_;
    for (const auto& [r, e] : o.factors_) multiply_factor(r, -e);
    return *this;
  }
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  friend FactoredRational operator/(FactoredRational a, const FactoredRational& b) { return a /= b; }

  /// Value at u; throws std::domain_error at a pole or zero.
  Rational evaluate(const Rational& u) const {
    Rational value = constant_;
    for (const auto& [r, e] : factors_) {
      Rational base = u - r;
      if (base == 0) throw std::domain_error("evaluation at a zero or pole");
      Rational p = 1;
      for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) p *= base;
      if (e > 0)
        value *= p;
      else
        value /= p;
    }
    return value;
  }

  /// e.g. "-(u-1/2)^4(u+3/2)/((u-3/2)(u+1/2)^2)"; factors by decreasing root.
  std::string str() const {
    auto factor_text = [](const Rational& r, std::int64_t e) {
      std::string s;
      if (r == 0)
        s = "u";
      else if (r > 0)
        s = "(u-" + format_rational(r) + ")";
      else
        s = "(u+" + format_rational(-r) + ")";
      if (e > 1) s += "^" + std::to_string(e);
      return s;
    };
    std::string num, den;
    std::int64_t den_count = 0;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
      if (it->second > 0) {
        num += factor_text(it->first, it->second);
      } else {
        den += factor_text(it->first, -it->second);
        den_count += -it->second;
      }
    }
    std::string out = constant_ < 0 ? "-" : "";
    Rational mag = constant_ < 0 ? Rational(-constant_) : constant_;
    if (mag == 1) {
      out += num.empty() ? "1" : num;
    } else {
      std::string c = format_rational(mag);
      if (!is_integral(mag)) c = "(" + c + ")";
      out += c + num;
    }
    if (!den.empty()) out += "/" + (den_count == 1 ? den : "(" + den + ")");
    return out;
  }

  bool operator==(const FactoredRational&) const = default;

 private:
  Rational constant_ = 1;
  Factors factors_;
};

/// gamma_c(u) = ((u+c)^2 - 1) / ((u-c)^2 - 1) * (u-c)^2 / (u+c)^2, cancelled.
inline FactoredRational gamma_factor(const Rational& c) {
  FactoredRational g;
  g.multiply_factor(-c - 1, 1);
  g.multiply_factor(-c + 1, 1);
  g.multiply_factor(c, 2);
  g.multiply_factor(c + 1, -1);
  g.multiply_factor(c - 1, -1);
  g.multiply_factor(-c, -2);
  return g;
}

/// Scalar by which the central series C(u) acts on the standard module
/// Delta(lambda): (1/2 - u)(1/2 + u) prod_{y in lambda} gamma_{c_delta(y)}(u).
inline FactoredRational central_character(const Partition& lambda, const Rational& delta) {
  FactoredRational f(Rational(-1));
  f.multiply_factor(Rational(1, 2), 1);
  f.multiply_factor(Rational(-1, 2), 1);
  for (const Rational& c : contents(lambda, delta)) f *= gamma_factor(c);
  return f;
}

inline bool centrally_equivalent(const Partition& lambda, const Partition& mu, const Rational& delta) {
  return central_character(lambda, delta) == central_character(mu, delta);
}

/// Zero/pole multiplicities as a combination of omega_a: root r with
/// exponent e contributes e to omega_r. Keys are raw rational roots.
inline std::map<Rational, std::int64_t> weight_of_rational(const FactoredRational& f) {
  return {f.factors().begin(), f.factors().end()};
}

/// OmegaVector with half-integer keys re-keyed by rationals for comparison
/// against weight_of_rational.
inline std::map<Rational, std::int64_t> omega_as_rational_map(const OmegaVector& w) {
  std::map<Rational, std::int64_t> out;
  for (auto [k, v] : w)
    if (v != 0) out.emplace(to_rational(k), v);
  return out;
}

/// Laurent series in u known exactly at degrees top() down to lowest(); any
/// lower-degree information has been truncated away.
class TruncatedLaurent {
 public:
  explicit TruncatedLaurent(int lowest) : lowest_(lowest) {}

  int lowest() const { return lowest_; }
  /// Highest degree with a nonzero coefficient (lowest() if the series is zero).
  int top() const { return coeffs_.empty() ? lowest_ : coeffs_.rbegin()->first; }

  Rational coefficient(int degree) const {
    if (degree < lowest_) throw std::out_of_range("coefficient below truncation order");
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void add(int degree, const Rational& value) {
    if (degree < lowest_ || value == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(degree, value);
    if (!inserted && (it->second += value) == 0) coeffs_.erase(it);
  }

  /// The series in -u.
  TruncatedLaurent negated_variable() const {
    TruncatedLaurent out(lowest_);
    for (const auto& [d, c] : coeffs_) out.add(d, (d % 2 == 0) ? c : Rational(-c));
    return out;
  }

  /// Product, exact down to max(lowest_a + top_b, lowest_b + top_a).
  friend TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    const int low = std::max(a.lowest_ + b.top(), b.lowest_ + a.top());
    TruncatedLaurent out(low);
    for (const auto& [da, ca] : a.coeffs_)
      for (const auto& [db, cb] : b.coeffs_)
        if (da + db >= low) out.add(da + db, ca * cb);
    return out;
  }

  const std::map<int, Rational>& coefficients() const { return coeffs_; }

 private:
  int lowest_;
  std::map<int, Rational> coeffs_;
};

/// gamma_a = delta ((delta-1)/2)^a for a = 0 .. count-1.
inline std::vector<Rational> brauer_gammas(const Rational& delta, int count) {
  std::vector<Rational> out;
  const Rational ratio = (delta - 1) / 2;
  Rational power = 1;
  for (int a = 0; a < count; ++a) {
    out.push_back(delta * power);
    power *= ratio;
  }
  return out;
}

/// O(u) = u - 1/2 + sum_{a=0}^{K} gamma_a u^{-a}.
inline TruncatedLaurent o_series_from(std::span<const Rational> gammas, int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
  if (gammas.size() < static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("need at least K+1 gamma coefficients");
  TruncatedLaurent o(-order);
  o.add(1, 1);
  o.add(0, Rational(-1, 2));
  for (int a = 0; a <= order; ++a) o.add(-a, gammas[static_cast<std::size_t>(a)]);
  return o;
}

inline TruncatedLaurent o_series(const Rational& delta, int order) {
  auto gammas = brauer_gammas(delta, order + 1);
  return o_series_from(gammas, order);
}

/// O(u) O(-u) == (1/2 - u)(1/2 + u) on every exactly known coefficient.
inline bool check_lemma_o(std::span<const Rational> gammas, int order) {
  const TruncatedLaurent o = o_series_from(gammas, order);
  const TruncatedLaurent product = o * o.negated_variable();
  for (int d = std::max(2, product.top()); d >= product.lowest(); --d) {
    Rational expected = d == 2 ? Rational(-1) : d == 0 ? Rational(1, 4) : Rational(0);
    if (product.coefficient(d) != expected) return false;
  }
  return true;
}

/// 2 gamma_k = -gamma_{k-1} + sum_{j=1}^{k} (-1)^{j-1} gamma_{j-1} gamma_{k-j}
/// for every odd k <= K.
inline bool check_admissible(std::span<const Rational> gammas, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  if (gammas.size() < static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("need at least K+1 gamma coefficients");
  auto g = [&](int a) -> const Rational& { return gammas[static_cast<std::size_t>(a)]; };
  for (int k = 1; k <= order; k += 2) {
    Rational rhs = -g(k - 1);
    for (int j = 1; j <= k; ++j) {
      Rational term = g(j - 1) * g(k - j);
      if (j % 2 == 1)
        rhs += term;
      else
        rhs -= term;
    }
    if (2 * g(k) != rhs) return false;
  }
  return true;
}

}  // namespace brauer
