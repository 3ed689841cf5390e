#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "brauer/half_int.hpp"
#include "brauer/partitions.hpp"
#include "brauer/rational.hpp"
#include "brauer/sequences.hpp"
#include "brauer/weights.hpp"

// Convention: the public block operations take labels lambda of the simple
// modules L(lambda) and transpose internally (L(lambda^t), L(mu^t) are linked
// iff i_{d,lambda} ~ i_{d,mu}). The dot-action oracle takes lambda^t-level
// labels, i.e. the partitions the dot action is applied to.

namespace brauer {

/// Orbit key of make_sequence(transpose(lambda), delta/2 - 1), tagged with delta.
struct BlockKey {
  std::int64_t delta = 0;
  OrbitKey orbit;

  bool operator==(const BlockKey&) const = default;
  auto operator<=>(const BlockKey&) const = default;
};

/// The data behind a same_block decision, as reported by the CLI.
struct BlockComparison {
  bool same_block = false;
  bool semisimple = false;      // delta not an integer
  bool size_parity_differs = false;
  bool abs_multiset_equal = false;
  std::int64_t parity_lhs = 0;  // negative entries mod 2
  std::int64_t parity_rhs = 0;
  bool zero_entry = false;
};

inline ChargedSequence block_sequence(const Partition& lambda, std::int64_t delta) {
  return make_sequence(transpose(lambda), charge_for_delta(delta));
}

inline BlockComparison compare_blocks(const Partition& lambda, const Partition& mu, const Rational& delta) {
  BlockComparison r;
  auto d = to_int64(delta);
  if (!d) {
    // B(delta) is semisimple off the integers: every block is a singleton
    r.semisimple = true;
    r.same_block = (lambda == mu);
    r.abs_multiset_equal = r.same_block;
    return r;
  }
  const ChargedSequence s = block_sequence(lambda, *d);
  const ChargedSequence t = block_sequence(mu, *d);
  r.parity_lhs = s.negative_entry_count() % 2;
  r.parity_rhs = t.negative_entry_count() % 2;
  r.zero_entry = s.has_zero_entry();
  if ((lambda.size() - mu.size()) % 2 != 0) {
    r.size_parity_differs = true;
    return r;
  }
  r.same_block = same_orbit(s, t);
  // same charge, so equal deviations from the vacuum <=> equal |entry| multisets
  r.abs_multiset_equal = orbit_key(s).deviation == orbit_key(t).deviation;
  return r;
}

/// Are L(lambda) and L(mu) in the same block of B(delta)-lfdmod?
inline bool same_block(const Partition& lambda, const Partition& mu, const Rational& delta) {
  return compare_blocks(lambda, mu, delta).same_block;
}

inline BlockKey block_key(const Partition& lambda, std::int64_t delta) {
  return BlockKey{delta, orbit_key(block_sequence(lambda, delta))};
}

inline BlockKey block_key(const Partition& lambda, const Rational& delta) {
  auto d = to_int64(delta);
  if (!d) throw std::invalid_argument("block keys require integral delta");
  return block_key(lambda, *d);
}

struct BlockClassification {
  enum class Kind { Single, Split };
  Kind kind = Kind::Single;
  /// Set for Split: same bar-weight as lambda, different block.
  std::optional<Partition> partner;

  bool is_split() const { return kind == Kind::Split; }
};

/// Whether the bar-weight class of lambda is one block or two; in the split
/// case also returns a representative of the other block.
inline BlockClassification classify_weight_class(const Partition& lambda, std::int64_t delta) {
  const ChargedSequence s = block_sequence(lambda, delta);
  if (delta % 2 != 0 || s.has_zero_entry()) return {};

  // Smallest tail index k with i_k > 0 and -i_k < i_1; then
  // j = (-i_k, i_1, ..., i_{k-1}, i_{k+1}, ...) is again strictly increasing.
  const HalfInt first = s.entry(1);
  std::size_t k = s.shape().length() + 1;
  while (!(s.entry(k) > HalfInt{} && -s.entry(k) < first)) ++k;

  std::vector<HalfInt> j;
  j.reserve(k);
  j.push_back(-s.entry(k));
  for (std::size_t m = 1; m < k; ++m) j.push_back(s.entry(m));
  const ChargedSequence partner_seq = ChargedSequence::from_entries(s.charge(), j);
  return {BlockClassification::Kind::Split, transpose(partner_seq.shape())};
}

inline BlockClassification classify_weight_class(const Partition& lambda, const Rational& delta) {
  auto d = to_int64(delta);
  if (!d) throw std::invalid_argument("weight classes require integral delta");
  return classify_weight_class(lambda, *d);
}

namespace detail {

/// Applies `fn` to every item, optionally sharded over `jobs` threads; the
/// result keeps the input order.
template <typename Fn>
auto parallel_map(const std::vector<Partition>& items, Fn fn, int jobs) {
  using Result = std::decay_t<decltype(fn(items.front()))>;
  std::vector<Result> out(items.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || items.size() < 64) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::vector<std::future<void>> tasks;
  const std::size_t chunk = (items.size() + workers - 1) / workers;
  for (std::size_t lo = 0; lo < items.size(); lo += chunk) {
    const std::size_t hi = std::min(items.size(), lo + chunk);
    tasks.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = fn(items[i]);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

template <typename Pred>
std::vector<Partition> parallel_filter(const std::vector<Partition>& items, Pred pred, int jobs) {
  const std::vector<char> keep =
      parallel_map(items, [&](const Partition& p) -> char { return pred(p) ? 1 : 0; }, jobs);
  std::vector<Partition> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (keep[i]) out.push_back(items[i]);
  return out;
}

}  // namespace detail

/// All mu with |mu| <= max_size in the block of L(lambda), canonical order.
inline std::vector<Partition> enumerate_block_members(const Partition& lambda, const Rational& delta,
                                                      int max_size, int jobs = 1) {
  if (max_size < lambda.size()) throw std::invalid_argument("max size smaller than |lambda|");
  auto d = to_int64(delta);
  if (!d) return {lambda};
  const BlockKey key = block_key(lambda, *d);
  return detail::parallel_filter(
      enumerate_partitions(max_size),
      [&](const Partition& mu) {
        return (mu.size() - lambda.size()) % 2 == 0 && block_key(mu, *d) == key;
      },
      jobs);
}

/// Blocks of the Brauer algebra B_n(delta): the labels of size n, n-2, ...
/// grouped by block. Groups are ordered by their first member.
inline std::vector<std::vector<Partition>> brauer_algebra_blocks(int n, std::int64_t delta, int jobs = 1) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> labels;
  for (int m = n % 2; m <= n; m += 2) {
    auto layer = partitions_of_size(m);
    labels.insert(labels.end(), layer.begin(), layer.end());
  }
  const std::vector<BlockKey> keys =
      detail::parallel_map(labels, [&](const Partition& mu) { return block_key(mu, delta); }, jobs);
  std::vector<std::vector<Partition>> groups;
  std::vector<BlockKey> group_keys;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find(group_keys.begin(), group_keys.end(), keys[i]);
    if (it == group_keys.end()) {
      group_keys.push_back(keys[i]);
      groups.push_back({labels[i]});
    } else {
      groups[static_cast<std::size_t>(it - group_keys.begin())].push_back(labels[i]);
    }
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

// ---------------------------------------------------------------------------
// Dot-action oracle for W_n of type D_n.

/// Coordinates of nu + rho_n with rho_n = sum_i (1 - i - delta/2) delta_i.
using DotVector = std::vector<HalfInt>;

inline DotVector dot_vector(const Partition& nu, int n, std::int64_t delta) {
  if (nu.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument("partition " + nu.str() + " has more than n = " + std::to_string(n) + " parts");
  DotVector v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    v.push_back(HalfInt::from_int(nu.row(static_cast<std::size_t>(i - 1)) + 1 - i) - HalfInt::from_twice(delta));
  return v;
}

struct DotVectorHash {
  std::size_t operator()(const DotVector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (HalfInt x : v) {
      h ^= static_cast<std::size_t>(x.twice()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using DotOrbit = std::unordered_set<DotVector, DotVectorHash>;

/// Largest n the BFS accepts without an explicit override (|W_8| = 5 160 960).
inline constexpr int kDotOrbitDefaultCap = 8;

namespace detail {

inline void check_dot_rank(int n, bool allow_large) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > kDotOrbitDefaultCap && !allow_large)
    throw std::invalid_argument("dot-orbit BFS capped at n <= " + std::to_string(kDotOrbitDefaultCap) +
                                " (override required)");
}

/// BFS under s_0 (negate and swap the first two coordinates) and the
/// adjacent transpositions s_1, ..., s_{n-1}. Stops early once `target`
/// is reached when one is given.
inline bool dot_bfs(const DotVector& start, const DotVector* target, DotOrbit* orbit_out) {
  DotOrbit seen;
  std::deque<DotVector> queue;
  seen.insert(start);
  queue.push_back(start);
  if (target && start == *target) return true;
  const std::size_t n = start.size();
  while (!queue.empty()) {
    DotVector v = std::move(queue.front());
    queue.pop_front();
    auto visit = [&](DotVector w) {
      if (seen.insert(w).second) {
        if (target && w == *target) return true;
        queue.push_back(std::move(w));
      }
      return false;
    };
    if (n >= 2) {
      DotVector w = v;
      w[0] = -v[1];
      w[1] = -v[0];
      if (visit(std::move(w))) return true;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      DotVector w = v;
      std::swap(w[i], w[i + 1]);
      if (visit(std::move(w))) return true;
    }
  }
  if (orbit_out) *orbit_out = std::move(seen);
  return false;
}

}  // namespace detail

/// The full W_n-orbit of a + rho_n.
inline DotOrbit dot_orbit(const Partition& a, int n, std::int64_t delta, bool allow_large = false) {
  detail::check_dot_rank(n, allow_large);
  DotOrbit orbit;
  detail::dot_bfs(dot_vector(a, n, delta), nullptr, &orbit);
  return orbit;
}

/// Is b in W_n . a under w.a = w(a + rho_n) - rho_n ? Labels are
/// lambda^t-level partitions (see the convention note at the top).
inline bool dot_orbit_member(const Partition& a, const Partition& b, int n, std::int64_t delta,
                             bool allow_large = false) {
  detail::check_dot_rank(n, allow_large);
  const DotVector start = dot_vector(a, n, delta);
  const DotVector target = dot_vector(b, n, delta);
  return detail::dot_bfs(start, &target, nullptr);
}

}  // namespace brauer
