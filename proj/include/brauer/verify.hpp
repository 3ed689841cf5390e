#pragma once

// Cross-check matrix: each check compares a fast criterion against an
// independent oracle over a finite parameter range and reports the first
// counterexample it finds.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/blocks.hpp"
#include "brauer/box_oracle.hpp"
#include "brauer/central.hpp"
#include "brauer/wedge.hpp"

namespace brauer {

struct VerifyConfig {
  std::int64_t delta_min = -3;
  std::int64_t delta_max = 5;

  int orbit_max_size = 5;        // dot-BFS oracle, n = max size and n + 2
  int bridge_max_size = 10;
  std::int64_t bridge_delta_min = -4;
  std::int64_t bridge_delta_max = 6;
  int split_window = 8;          // classes collected from this size ...
  int split_radius = 16;         // ... and counted over members up to this size
  int central_max_size = 7;
  std::int64_t series_delta_min = -5;
  std::int64_t series_delta_max = 6;
  int order = 24;
  int wedge_max_size = 6;
  int wedge_max_index = 10;
  std::int64_t wedge_delta_min = -2;
  std::int64_t wedge_delta_max = 4;
  int infinite_max_size = 4;
  int infinite_extra = 16;
  std::int64_t infinite_delta_min = -2;
  std::int64_t infinite_delta_max = 4;
  int gamma_max_twice = 9;
  int key_max_size = 8;

  bool allow_large = false;
  bool inject_fault = false;
  int jobs = 1;

  /// The pinned ranges of the acceptance suite.
  static VerifyConfig acceptance() { return {}; }

  /// One size bound and one delta range for everything, as exposed by the CLI.
  static VerifyConfig scaled(int max_size, std::int64_t delta_min, std::int64_t delta_max, int order) {
    VerifyConfig c;
    c.delta_min = c.bridge_delta_min = c.series_delta_min = c.wedge_delta_min = c.infinite_delta_min = delta_min;
    c.delta_max = c.bridge_delta_max = c.series_delta_max = c.wedge_delta_max = c.infinite_delta_max = delta_max;
    c.orbit_max_size = c.bridge_max_size = c.split_window = c.central_max_size = c.wedge_max_size =
        c.key_max_size = max_size;
    c.split_radius = std::max(16, 2 * max_size);
    c.infinite_max_size = std::min(max_size, 4);
    c.wedge_max_index = 2 * max_size;
    c.gamma_max_twice = 2 * max_size - 1;
    c.order = order;
    return c;
  }
};

/// Caps enforced unless allow_large is set.
inline constexpr int kVerifyMaxSizeCap = 10;

inline void check_verify_caps(const VerifyConfig& c) {
  if (c.orbit_max_size < 0 || c.order < 0) throw std::invalid_argument("verify bounds must be nonnegative");
  if (c.allow_large) return;
  const int sizes[] = {c.orbit_max_size, c.bridge_max_size, c.split_window, c.central_max_size, c.wedge_max_size,
                       c.key_max_size};
  for (int s : sizes)
    if (s > kVerifyMaxSizeCap)
      throw std::invalid_argument("max size capped at " + std::to_string(kVerifyMaxSizeCap) + " (override required)");
  if (c.orbit_max_size + 2 > kDotOrbitDefaultCap)
    throw std::invalid_argument("dot-orbit BFS capped at n <= " + std::to_string(kDotOrbitDefaultCap) +
                                " (override required)");
}

struct CheckResult {
  std::string name;
  std::string range;
  bool passed = true;
  std::optional<std::string> counterexample;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace detail {

inline std::string range_text(std::int64_t lo, std::int64_t hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

inline std::vector<std::int64_t> deltas(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

/// Collects the first counterexample reported, in a deterministic order:
/// shards report with their index, the lowest index wins.
class FirstFailure {
 public:
  void report(std::size_t shard, std::string text) {
    std::lock_guard lock(mu_);
    if (!best_ || shard < best_->first) best_ = {shard, std::move(text)};
  }
  bool failed() const { return best_.has_value(); }
  std::optional<std::string> text() const {
    if (!best_) return std::nullopt;
    return best_->second;
  }

 private:
  std::mutex mu_;
  std::optional<std::pair<std::size_t, std::string>> best_;
};

/// Runs fn(shard) for shard in [0, count), over `jobs` threads.
inline void for_each_shard(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < std::min(workers, count); ++w)
    tasks.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    }));
  for (auto& t : tasks) t.get();
}

/// The sequence-side orbit decision, optionally with one parity flipped
/// (fault injection for testing the verifier itself).
inline bool orbit_decision(const ChargedSequence& s, const ChargedSequence& t, bool fault) {
  bool same = same_orbit(s, t);
  if (fault && !s.has_zero_entry() && s.negative_entry_count() % 2 == 1 &&
      orbit_key(s).deviation == orbit_key(t).deviation)
    same = !same;
  return same;
}

template <typename Fn>
CheckResult timed(std::string name, std::string range, Fn body) {
  CheckResult r;
  r.name = std::move(name);
  r.range = std::move(range);
  const auto start = std::chrono::steady_clock::now();
  r.counterexample = body();
  r.passed = !r.counterexample.has_value();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

// 1. Central equivalence without bar-weight equality at delta = 1.
inline CheckResult check_central_example(const VerifyConfig&) {
  return detail::timed("central-example", "delta=1, (2,2) vs (2,1)", []() -> std::optional<std::string> {
    const Partition lambda{2, 2}, mu{2, 1};
    const FactoredRational a = central_character(lambda, 1), b = central_character(mu, 1);
    if (a != b) return "central characters differ: " + a.str() + " vs " + b.str();
    if (a.str() != "-(u-1/2)(u+1/2)") return "unexpected canonical form " + a.str();
    if (same_bar_weight(lambda, mu, std::int64_t{1})) return "bar weights unexpectedly equal";
    const RootVector diff = weight_alpha_part(mu, std::int64_t{1}) - weight_alpha_part(lambda, std::int64_t{1});
    if (reduce_mod_qtheta(diff, 1) != reduce_mod_qtheta(RootVector({{HalfInt{}, -1}}), 1))
      return "weight difference is not the class of -alpha_0";
    return std::nullopt;
  });
}

// 2. Sequence orbits against the dot-action BFS.
inline CheckResult check_orbit_oracle(const VerifyConfig& c) {
  const int max = c.orbit_max_size;
  std::string range = "size<=" + std::to_string(max) + ", delta " + detail::range_text(c.delta_min, c.delta_max) +
                      ", n=max size and +2";
  return detail::timed("orbit-vs-dot-bfs", range, [&]() -> std::optional<std::string> {
    const auto all = enumerate_partitions(max);
    const auto ds = detail::deltas(c.delta_min, c.delta_max);
    // one BFS per (delta, a, n); every b is looked up in the cached orbit
    struct Job {
      std::int64_t delta;
      std::size_t a;
      int n;
    };
    std::vector<Job> jobs;
    for (std::int64_t delta : ds)
      for (std::size_t a = 0; a < all.size(); ++a) {
        std::set<int> ns;
        for (const auto& b : all) {
          if ((all[a].size() - b.size()) % 2 != 0) continue;
          const int n = std::max(all[a].size(), b.size());
          ns.insert(n);
          ns.insert(n + 2);
        }
        for (int n : ns) jobs.push_back({delta, a, n});
      }
    detail::FirstFailure failure;
    detail::for_each_shard(jobs.size(), c.jobs, [&](std::size_t k) {
      const Job& job = jobs[k];
      const Partition& a = all[job.a];
      const HalfInt d = charge_for_delta(job.delta);
      const DotOrbit orbit = dot_orbit(a, job.n, job.delta, c.allow_large);
      const ChargedSequence s = make_sequence(a, d);
      for (const auto& b : all) {
        if ((a.size() - b.size()) % 2 != 0) continue;
        const int n = std::max(a.size(), b.size());
        if (job.n != n && job.n != n + 2) continue;
        const bool bfs = orbit.count(dot_vector(b, job.n, job.delta)) > 0;
        const bool seq = detail::orbit_decision(s, make_sequence(b, d), c.inject_fault);
        if (bfs != seq) {
          std::ostringstream os;
          os << "a=" << a << " b=" << b << " n=" << job.n << " delta=" << job.delta << ": bfs=" << bfs
             << " sequence=" << seq;
          failure.report(k, os.str());
          return;
        }
      }
    });
    return failure.text();
  });
}

// 3. relative_weight of the transposed sequence is minus the alpha part of wt.
inline CheckResult check_weight_bridge(const VerifyConfig& c) {
  std::string range = "size<=" + std::to_string(c.bridge_max_size) + ", delta " +
                      detail::range_text(c.bridge_delta_min, c.bridge_delta_max);
  return detail::timed("weight-bridge", range, [&]() -> std::optional<std::string> {
    const auto all = enumerate_partitions(c.bridge_max_size);
    for (std::int64_t delta = c.bridge_delta_min; delta <= c.bridge_delta_max; ++delta) {
      const HalfInt d = charge_for_delta(delta);
      for (const auto& lambda : all)
        if (relative_weight(make_sequence(transpose(lambda), d)) != -weight_alpha_part(lambda, delta)) {
          std::ostringstream os;
          os << "lambda=" << lambda << " delta=" << delta;
          return os.str();
        }
    }
    return std::nullopt;
  });
}

// 4. Each bar-weight class is one block, or two for even delta without a zero entry.
inline CheckResult check_split_counts(const VerifyConfig& c) {
  std::string range = "classes from size<=" + std::to_string(c.split_window) + ", members size<=" +
                      std::to_string(c.split_radius) + ", delta " + detail::range_text(c.delta_min, c.delta_max);
  return detail::timed("split-counts", range, [&]() -> std::optional<std::string> {
    using Class = std::pair<SymWeight::Map, int>;
    auto class_of = [](const Partition& lambda, std::int64_t delta) -> Class {
      SymWeight w = bar_weight(lambda, delta);
      return {w.pos_part(), w.zero_parity().value_or(-1)};
    };
    const auto window = enumerate_partitions(c.split_window);
    const auto wide = enumerate_partitions(std::max(c.split_radius, c.split_window));
    const auto ds = detail::deltas(c.delta_min, c.delta_max);
    std::vector<std::optional<std::string>> found(ds.size());
    detail::for_each_shard(ds.size(), c.jobs, [&](std::size_t k) {
      const std::int64_t delta = ds[k];
      struct Info {
        Partition rep;
        bool zero = false;
        std::set<BlockKey> window_keys, keys;
      };
      std::map<Class, Info> classes;
      for (const auto& lambda : window) {
        auto [it, inserted] = classes.try_emplace(class_of(lambda, delta));
        if (inserted) {
          it->second.rep = lambda;
          it->second.zero = block_sequence(lambda, delta).has_zero_entry();
        }
        it->second.window_keys.insert(block_key(lambda, delta));
      }
      for (const auto& lambda : wide) {
        auto it = classes.find(class_of(lambda, delta));
        if (it != classes.end()) it->second.keys.insert(block_key(lambda, delta));
      }
      for (const auto& [cls, info] : classes) {
        const std::size_t expected = (delta % 2 == 0 && !info.zero) ? 2 : 1;
        if (info.keys.size() != expected || info.window_keys.size() > expected) {
          std::ostringstream os;
          os << "class of " << info.rep << " delta=" << delta << ": " << info.keys.size()
             << " block keys, expected " << expected;
          found[k] = os.str();
          return;
        }
      }
    });
    for (auto& f : found)
      if (f) return f;
    return std::nullopt;
  });
}

// 5. Bar-weight equality implies central equivalence; the converse for even delta.
inline CheckResult check_central_vs_weight(const VerifyConfig& c) {
  std::string range = "size<=" + std::to_string(c.central_max_size) + ", delta " +
                      detail::range_text(c.delta_min, c.delta_max);
  return detail::timed("central-vs-bar-weight", range, [&]() -> std::optional<std::string> {
    const auto all = enumerate_partitions(c.central_max_size);
    for (std::int64_t delta = c.delta_min; delta <= c.delta_max; ++delta) {
      std::vector<FactoredRational> chars;
      std::vector<SymWeight> weights;
      for (const auto& lambda : all) {
        chars.push_back(central_character(lambda, delta));
        weights.push_back(bar_weight(lambda, delta));
      }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          const bool w = weights[i] == weights[j], z = chars[i] == chars[j];
          if ((w && !z) || (delta % 2 == 0 && z && !w)) {
            std::ostringstream os;
            os << "lambda=" << all[i] << " mu=" << all[j] << " delta=" << delta << ": bar-weight " << w
               << ", central " << z;
            return os.str();
          }
        }
    }
    return std::nullopt;
  });
}

namespace detail {

/// gamma_1 + 1/3 stays out of every Brauer family; for order 0 there is no
/// gamma_1 to perturb and the check is skipped.
inline std::vector<Rational> perturbed(std::vector<Rational> gammas) {
  if (gammas.size() > 1) gammas[1] += Rational(1, 3);
  return gammas;
}

}  // namespace detail

// 6. O(u)O(-u) = (1/2-u)(1/2+u) to order K, and a perturbation is detected.
inline CheckResult check_lemma_o_range(const VerifyConfig& c) {
  std::string range = "delta " + detail::range_text(c.series_delta_min, c.series_delta_max) +
                      ", K=" + std::to_string(c.order);
  return detail::timed("series-identity", range, [&]() -> std::optional<std::string> {
    for (std::int64_t delta = c.series_delta_min; delta <= c.series_delta_max; ++delta) {
      const auto gammas = brauer_gammas(delta, c.order + 1);
      if (!check_lemma_o(gammas, c.order)) return "identity fails at delta=" + std::to_string(delta);
      if (c.order >= 1 && check_lemma_o(detail::perturbed(gammas), c.order))
        return "perturbed gamma_1 not detected at delta=" + std::to_string(delta);
    }
    return std::nullopt;
  });
}

// 7. Admissibility recursion for odd k <= K, and a planted violation at k = 1.
inline CheckResult check_admissible_range(const VerifyConfig& c) {
  std::string range = "delta " + detail::range_text(c.series_delta_min, c.series_delta_max) +
                      ", odd k<=" + std::to_string(c.order);
  return detail::timed("admissibility", range, [&]() -> std::optional<std::string> {
    for (std::int64_t delta = c.series_delta_min; delta <= c.series_delta_max; ++delta) {
      const auto gammas = brauer_gammas(delta, c.order + 1);
      if (!check_admissible(gammas, c.order)) return "recursion fails at delta=" + std::to_string(delta);
      if (c.order >= 1 && check_admissible(detail::perturbed(gammas), 1))
        return "planted violation at k=1 not detected, delta=" + std::to_string(delta);
    }
    return std::nullopt;
  });
}

// 8. b_i on basis vectors against the box-level add/remove model.
inline CheckResult check_wedge_boxes(const VerifyConfig& c) {
  std::string range = "size<=" + std::to_string(c.wedge_max_size) + ", |i|<=" + std::to_string(c.wedge_max_index) +
                      ", delta " + detail::range_text(c.wedge_delta_min, c.wedge_delta_max);
  return detail::timed("wedge-vs-boxes", range, [&]() -> std::optional<std::string> {
    const auto all = enumerate_partitions(c.wedge_max_size);
    const HalfInt half = HalfInt::half(1);
    for (std::int64_t delta = c.wedge_delta_min; delta <= c.wedge_delta_max; ++delta) {
      const HalfInt d = charge_for_delta(delta);
      for (const auto& shape : all) {
        const ChargedSequence s = make_sequence(shape, d);
        const RootVector before = relative_weight(s);
        for (std::int64_t t = -2 * c.wedge_max_index; t <= 2 * c.wedge_max_index; ++t) {
          const HalfInt i = HalfInt::from_twice(t);
          if (!(i - half - d).is_integer()) continue;
          auto fail = [&](const std::string& why) {
            std::ostringstream os;
            os << "shape=" << shape << " i=" << i << " delta=" << delta << ": " << why;
            return os.str();
          };
          std::set<Partition> expected;
          if (auto up = oracle::oracle_raise(i, d, shape)) expected.insert(*up);
          if (auto down = oracle::oracle_lower(-i, d, shape)) expected.insert(*down);
          std::set<Partition> got;
          for (const auto& [out, coeff] : apply_b(i, WedgeVector::basis(s)).terms()) {
            if (coeff != 1) return fail("coefficient " + format_rational(coeff));
            if (std::abs(out.shape().size() - shape.size()) != 1) return fail("output differs by more than a box");
            const RootVector in_minus_out = before - relative_weight(out);
            if (in_minus_out != RootVector({{i, -1}}) && in_minus_out != RootVector({{-i, 1}}))
              return fail("weight shift is not -alpha_i or +alpha_{-i}");
            got.insert(out.shape());
          }
          if (got != expected) return fail("output shapes differ from the box oracle");
        }
      }
    }
    return std::nullopt;
  });
}

// 9. Every block seen at small size has a second member within +extra boxes.
inline CheckResult check_infinitude(const VerifyConfig& c) {
  std::string range = "size<=" + std::to_string(c.infinite_max_size) + " (+" + std::to_string(c.infinite_extra) +
                      "), delta " + detail::range_text(c.infinite_delta_min, c.infinite_delta_max);
  return detail::timed("block-infinitude", range, [&]() -> std::optional<std::string> {
    const auto all = enumerate_partitions(c.infinite_max_size);
    for (std::int64_t delta = c.infinite_delta_min; delta <= c.infinite_delta_max; ++delta)
      for (const auto& lambda : all) {
        const auto members = enumerate_block_members(lambda, delta, lambda.size() + c.infinite_extra, c.jobs);
        if (members.size() < 2) {
          std::ostringstream os;
          os << "lambda=" << lambda << " delta=" << delta << ": block has " << members.size() << " member(s)";
          return os.str();
        }
      }
    return std::nullopt;
  });
}

// 10. wt(gamma_a(u)) = alpha_a - alpha_{-a}.
inline CheckResult check_gamma_weight(const VerifyConfig& c) {
  std::string range = "twice(a) " + detail::range_text(-c.gamma_max_twice, c.gamma_max_twice);
  return detail::timed("gamma-weight", range, [&]() -> std::optional<std::string> {
    for (std::int64_t t = -c.gamma_max_twice; t <= c.gamma_max_twice; ++t) {
      const HalfInt a = HalfInt::from_twice(t);
      OmegaVector expected = alpha_in_omega(a);
      for (auto [k, v] : alpha_in_omega(-a)) expected[k] -= v;
      if (weight_of_rational(gamma_factor(to_rational(a))) != omega_as_rational_map(expected))
        return "a=" + a.str();
    }
    return std::nullopt;
  });
}

// 11. Block keys against bar weights plus the parity/zero refinement.
inline CheckResult check_key_consistency(const VerifyConfig& c) {
  std::string range = "size<=" + std::to_string(c.key_max_size) + ", delta " +
                      detail::range_text(c.delta_min, c.delta_max);
  return detail::timed("key-consistency", range, [&]() -> std::optional<std::string> {
    const auto all = enumerate_partitions(c.key_max_size);
    const auto ds = detail::deltas(c.delta_min, c.delta_max);
    std::vector<std::optional<std::string>> found(ds.size());
    detail::for_each_shard(ds.size(), c.jobs, [&](std::size_t k) {
      const std::int64_t delta = ds[k];
      std::vector<BlockKey> keys;
      std::vector<SymWeight> weights;
      std::vector<ChargedSequence> seqs;
      for (const auto& lambda : all) {
        keys.push_back(block_key(lambda, delta));
        weights.push_back(bar_weight(lambda, delta));
        seqs.push_back(block_sequence(lambda, delta));
      }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          bool key_equal = keys[i] == keys[j];
          if (c.inject_fault && weights[i] == weights[j])
            key_equal = detail::orbit_decision(seqs[i], seqs[j], true);
          const bool parities = seqs[i].negative_entry_count() % 2 == seqs[j].negative_entry_count() % 2;
          const bool predicted =
              weights[i] == weights[j] && (delta % 2 != 0 || parities || seqs[i].has_zero_entry());
          if (key_equal != predicted) {
            std::ostringstream os;
            os << "lambda=" << all[i] << " mu=" << all[j] << " delta=" << delta << ": keys equal " << key_equal
               << ", predicted " << predicted;
            found[k] = os.str();
            return;
          }
        }
    });
    for (auto& f : found)
      if (f) return f;
    return std::nullopt;
  });
}

using CheckFn = CheckResult (*)(const VerifyConfig&);

/// All checks, in acceptance-criterion order.
inline const std::vector<CheckFn>& verify_checks() {
  static const std::vector<CheckFn> checks{
      check_central_example, check_orbit_oracle,  check_weight_bridge,    check_split_counts,
      check_central_vs_weight, check_lemma_o_range, check_admissible_range, check_wedge_boxes,
      check_infinitude,      check_gamma_weight,  check_key_consistency,
  };
  return checks;
}

inline VerifyReport run_verify(const VerifyConfig& c) {
  check_verify_caps(c);
  VerifyReport report;
  for (CheckFn fn : verify_checks()) report.checks.push_back(fn(c));
  return report;
}

}  // namespace brauer
