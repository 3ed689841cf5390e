#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/half_int.hpp"
#include "brauer/rational.hpp"

namespace brauer {

/// A weakly decreasing list of positive integers.
///
/// Ordering (operator<=>) is the canonical enumeration order used across the
/// library and the CLI: by size first, then lexicographically descending, so
/// (2) comes before (1,1).
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument if `parts` is not a partition. Trailing
  /// zeros are accepted and dropped.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw std::invalid_argument("partition parts not weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  /// Number of boxes.
  int size() const { return size_; }
  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Row length with 0-based index; 0 past the last row.
  int row(std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }

  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(parts_[k]);
    }
    return out;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const Partition& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    // lexicographically larger partitions come first
    return std::lexicographical_compare_three_way(o.parts_.begin(), o.parts_.end(), parts_.begin(),
                                                  parts_.end());
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.str() << ')';
}

/// "2,1,1", "[2,1,1]", "" and "[]" are accepted.
inline Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced bracket in partition '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<int> parts;
  if (body.empty()) return Partition{};
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view token =
        trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("malformed partition token '" + std::string(token) + "'");
    if (value <= 0) throw ParseError("partition entry '" + std::string(token) + "' is not positive");
    if (!parts.empty() && value > parts.back())
      throw ParseError("not weakly decreasing at token '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

/// lambda^t_i = #{ j : lambda_j >= i }.
inline Partition transpose(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.row(0)), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

/// Box (row, column), both 1-based.
struct Box {
  int row;
  int col;
  int content() const { return col - row; }
  auto operator<=>(const Box&) const = default;
};

inline std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) out.push_back({static_cast<int>(i) + 1, j});
  return out;
}

/// Shifted contents c_delta(x) = (delta-1)/2 + c(x) for integral delta, sorted.
inline std::vector<HalfInt> contents(const Partition& lambda, std::int64_t delta) {
  std::vector<HalfInt> out;
  const HalfInt shift = HalfInt::from_twice(delta - 1);
  for (const Box& b : boxes(lambda)) out.push_back(shift + b.content());
  std::sort(out.begin(), out.end());
  return out;
}

/// Shifted contents for an arbitrary rational delta, sorted.
inline std::vector<Rational> contents(const Partition& lambda, const Rational& delta) {
  std::vector<Rational> out;
  const Rational shift = (delta - 1) / 2;
  for (const Box& b : boxes(lambda)) out.push_back(shift + b.content());
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline void partitions_of(int remaining, int max_part, std::vector<int>& prefix,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_of(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All partitions of exactly n, lexicographically descending.
inline std::vector<Partition> partitions_of_size(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  detail::partitions_of(n, n, prefix, out);
  return out;
}

/// All partitions of size <= max_size in canonical order.
inline std::vector<Partition> enumerate_partitions(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto layer = partitions_of_size(n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace brauer
