#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace brauer::cli {

using nlohmann::ordered_json;

/// A bad value for a named flag; reported with exit status 2.
struct FlagError : std::runtime_error {
  FlagError(const std::string& flag, const std::string& what)
      : std::runtime_error("invalid value for " + flag + ": " + what) {}
};

namespace detail {

inline Rational delta_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw FlagError("--delta", e.what());
  }
}

inline std::int64_t integral_delta_arg(const std::string& text) {
  auto d = to_int64(delta_arg(text));
  if (!d) throw FlagError("--delta", "'" + text + "' must be an integer for this subcommand");
  return *d;
}

inline Partition partition_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const ParseError& e) {
    throw FlagError(flag, e.what());
  }
}

inline std::vector<Rational> gammas_arg(const std::string& text) {
  std::vector<Rational> out;
  std::string token;
  auto flush = [&] {
    try {
      out.push_back(parse_rational(token));
    } catch (const ParseError& e) {
      throw FlagError("--gammas", e.what());
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      token += c;
  }
  flush();
  return out;
}

/// Scalars as plain text, anything structured as compact JSON.
inline void render_text(const ordered_json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      render_text(value, out, prefix + key + ".");
    } else if (value.is_string()) {
      out << prefix << key << ": " << value.get<std::string>() << "\n";
    } else if (key == "checks" && value.is_array()) {
      for (const auto& c : value) {
        out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " ["
            << c["range"].get<std::string>() << "] " << c["seconds"].dump();
        if (!c["counterexample"].is_null()) out << " counterexample: " << c["counterexample"].get<std::string>();
        out << "\n";
      }
    } else {
      out << prefix << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name). Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block classification for the Brauer category B(delta)", "brauer_blocks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  int jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "Worker threads for enumeration and verify")->check(CLI::PositiveNumber);

  std::string delta, lhs, rhs, partition, a_text, b_text, op, index, gammas_text;
  int max_size = 0, n = 0, order = 24;
  bool allow_large = false, inject_fault = false;
  std::int64_t delta_min = -3, delta_max = 5;

  auto delta_option = [&](CLI::App* sub) {
    sub->add_option("--delta", delta, "delta as an integer or p/q")->required();
  };

  auto* same_block_cmd = app.add_subcommand("same-block", "Are L(lhs) and L(rhs) in the same block?");
  delta_option(same_block_cmd);
  same_block_cmd->add_option("--lhs", lhs, "Partition, e.g. \"2,1\"")->required();
  same_block_cmd->add_option("--rhs", rhs, "Partition")->required();

  auto* block_key_cmd = app.add_subcommand("block-key", "Canonical block key of L(partition)");
  delta_option(block_key_cmd);
  block_key_cmd->add_option("--partition", partition)->required();

  auto* block_cmd = app.add_subcommand("block", "Members of the block of L(partition) up to a size bound");
  delta_option(block_cmd);
  block_cmd->add_option("--partition", partition)->required();
  block_cmd->add_option("--max-size", max_size)->required()->check(CLI::NonNegativeNumber);

  auto* classify_cmd = app.add_subcommand("classify-weight-class", "Is the bar-weight class one block or two?");
  delta_option(classify_cmd);
  classify_cmd->add_option("--partition", partition)->required();

  auto* brauer_cmd = app.add_subcommand("brauer-blocks", "Blocks of the Brauer algebra B_n(delta)");
  delta_option(brauer_cmd);
  brauer_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

  auto* dot_cmd = app.add_subcommand("dot-orbit", "Dot-action orbit membership under W(D_n) by BFS");
  delta_option(dot_cmd);
  dot_cmd->add_option("--a", a_text, "Partition (lambda^t level)")->required();
  dot_cmd->add_option("--b", b_text, "Partition (lambda^t level)")->required();
  dot_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  dot_cmd->add_flag("--allow-large", allow_large, "Lift the n <= 8 cap");

  auto* central_cmd = app.add_subcommand("central-char", "Central character of the standard module");
  delta_option(central_cmd);
  central_cmd->add_option("--partition", partition)->required();

  auto* equiv_cmd = app.add_subcommand("centrally-equivalent", "Compare two central characters");
  delta_option(equiv_cmd);
  equiv_cmd->add_option("--lhs", lhs)->required();
  equiv_cmd->add_option("--rhs", rhs)->required();

  auto* series_cmd = app.add_subcommand("series-check", "O(u)O(-u) identity and admissibility at order K");
  series_cmd->add_option("--delta", delta, "delta as an integer or p/q");
  series_cmd->add_option("--order", order)->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--gammas", gammas_text, "Comma-separated gamma_0, gamma_1, ... instead of --delta");

  auto* wedge_cmd = app.add_subcommand("wedge-apply", "Apply e_i, f_i or b_i = e_i + f_{-i} to a basis vector");
  delta_option(wedge_cmd);
  wedge_cmd->add_option("--partition", partition)->required();
  wedge_cmd->add_option("--op", op)->required()->check(CLI::IsMember({"raise", "lower", "b"}));
  wedge_cmd->add_option("--index", index, "Generator index, e.g. 1/2")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-check matrix");
  max_size = 5;
  verify_cmd->add_option("--max-size", max_size)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--delta-min", delta_min);
  verify_cmd->add_option("--delta-max", delta_max);
  verify_cmd->add_option("--order", order)->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--allow-large", allow_large, "Lift the size and BFS caps");
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);  // --help
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  ordered_json result;
  int status = 0;
  try {
    if (*same_block_cmd) {
      const Rational d = detail::delta_arg(delta);
      const Partition l = detail::partition_arg("--lhs", lhs), r = detail::partition_arg("--rhs", rhs);
      const BlockComparison c = compare_blocks(l, r, d);
      result["delta"] = format_rational(d);
      result["lhs"] = json_io::to_json(l);
      result["rhs"] = json_io::to_json(r);
      result["same_block"] = c.same_block;
      if (auto di = to_int64(d))
        result["block_key"] = {{"lhs", json_io::to_json(block_key(l, *di))},
                               {"rhs", json_io::to_json(block_key(r, *di))}};
      else
        result["block_key"] = nullptr;
      result["reason"] = {{"semisimple", c.semisimple},
                          {"size_parity_differs", c.size_parity_differs},
                          {"abs_multiset_equal", c.abs_multiset_equal},
                          {"parity_lhs", c.parity_lhs},
                          {"parity_rhs", c.parity_rhs},
                          {"zero_entry", c.zero_entry}};
    } else if (*block_key_cmd) {
      const std::int64_t d = detail::integral_delta_arg(delta);
      const Partition p = detail::partition_arg("--partition", partition);
      result["delta"] = d;
      result["partition"] = json_io::to_json(p);
      result["sequence"] = json_io::to_json(block_sequence(p, d));
      result["block_key"] = json_io::to_json(block_key(p, d));
    } else if (*block_cmd) {
      const Rational d = detail::delta_arg(delta);
      const Partition p = detail::partition_arg("--partition", partition);
      if (max_size < p.size()) throw FlagError("--max-size", "smaller than |partition|");
      result["delta"] = format_rational(d);
      result["partition"] = json_io::to_json(p);
      result["max_size"] = max_size;
      result["members"] = json_io::to_json(enumerate_block_members(p, d, max_size, jobs));
    } else if (*classify_cmd) {
      const std::int64_t d = detail::integral_delta_arg(delta);
      const Partition p = detail::partition_arg("--partition", partition);
      const BlockClassification c = classify_weight_class(p, d);
      result["delta"] = d;
      result["partition"] = json_io::to_json(p);
      result["bar_weight"] = json_io::to_json(bar_weight(p, d));
      result["kind"] = c.is_split() ? "split" : "single";
      result["partner"] = c.partner ? json_io::to_json(*c.partner) : ordered_json(nullptr);
    } else if (*brauer_cmd) {
      const std::int64_t d = detail::integral_delta_arg(delta);
      ordered_json blocks = ordered_json::array();
      for (const auto& g : brauer_algebra_blocks(n, d, jobs)) blocks.push_back(json_io::to_json(g));
      result["delta"] = d;
      result["n"] = n;
      result["blocks"] = blocks;
    } else if (*dot_cmd) {
      const std::int64_t d = detail::integral_delta_arg(delta);
      const Partition a = detail::partition_arg("--a", a_text), b = detail::partition_arg("--b", b_text);
      if (n > kDotOrbitDefaultCap && !allow_large)
        throw FlagError("--n", "BFS capped at n <= " + std::to_string(kDotOrbitDefaultCap) + " (pass --allow-large)");
      if (a.length() > static_cast<std::size_t>(n)) throw FlagError("--a", "more than n parts");
      if (b.length() > static_cast<std::size_t>(n)) throw FlagError("--b", "more than n parts");
      result["delta"] = d;
      result["n"] = n;
      result["a"] = json_io::to_json(a);
      result["b"] = json_io::to_json(b);
      result["twice_a_plus_rho"] = json_io::to_json(dot_vector(a, n, d));
      result["twice_b_plus_rho"] = json_io::to_json(dot_vector(b, n, d));
      result["member"] = dot_orbit_member(a, b, n, d, allow_large);
    } else if (*central_cmd) {
      const Rational d = detail::delta_arg(delta);
      const Partition p = detail::partition_arg("--partition", partition);
      result = json_io::to_json(central_character(p, d));
      result["delta"] = format_rational(d);
      result["partition"] = json_io::to_json(p);
    } else if (*equiv_cmd) {
      const Rational d = detail::delta_arg(delta);
      const Partition l = detail::partition_arg("--lhs", lhs), r = detail::partition_arg("--rhs", rhs);
      const FactoredRational cl = central_character(l, d), cr = central_character(r, d);
      result["delta"] = format_rational(d);
      result["lhs"] = json_io::to_json(l);
      result["rhs"] = json_io::to_json(r);
      result["centrally_equivalent"] = cl == cr;
      result["lhs_character"] = json_io::to_json(cl);
      result["rhs_character"] = json_io::to_json(cr);
    } else if (*series_cmd) {
      std::vector<Rational> gammas;
      if (!gammas_text.empty()) {
        gammas = detail::gammas_arg(gammas_text);
        if (gammas.size() < static_cast<std::size_t>(order) + 1)
          throw FlagError("--gammas", "need at least order+1 = " + std::to_string(order + 1) + " values");
      } else if (!delta.empty()) {
        const Rational d = detail::delta_arg(delta);
        gammas = brauer_gammas(d, order + 1);
        result["delta"] = format_rational(d);
      } else {
        throw FlagError("--delta", "one of --delta or --gammas is required");
      }
      result["order"] = order;
      result["o_product_identity"] = check_lemma_o(gammas, order);
      result["admissible"] = check_admissible(gammas, order);
    } else if (*wedge_cmd) {
      const std::int64_t d = detail::integral_delta_arg(delta);
      const Partition p = detail::partition_arg("--partition", partition);
      HalfInt i;
      try {
        i = parse_half_int(index);
      } catch (const ParseError& e) {
        throw FlagError("--index", e.what());
      }
      const HalfInt charge = charge_for_delta(d);
      if (!(i - HalfInt::half(1) - charge).is_integer())
        throw FlagError("--index", i.str() + " is not a generator index at charge " + charge.str());
      const WedgeVector v = WedgeVector::basis(make_sequence(p, charge));
      const WedgeVector image = op == "raise" ? apply_raising(i, v) : op == "lower" ? apply_lowering(i, v) : apply_b(i, v);
      result["delta"] = d;
      result["op"] = op;
      result["twiceIndex"] = i.twice();
      result["input"] = json_io::to_json(make_sequence(p, charge));
      result["terms"] = json_io::to_json(image);
    } else if (*verify_cmd) {
      if (delta_min > delta_max) throw FlagError("--delta-min", "greater than --delta-max");
      VerifyConfig config = VerifyConfig::scaled(max_size, delta_min, delta_max, order);
      config.allow_large = allow_large;
      config.inject_fault = inject_fault;
      config.jobs = jobs;
      try {
        check_verify_caps(config);
      } catch (const std::invalid_argument& e) {
        throw FlagError("--max-size", e.what());
      }
      const VerifyReport report = run_verify(config);
      ordered_json checks = ordered_json::array();
      for (const auto& c : report.checks) checks.push_back(json_io::to_json(c));
      result["passed"] = report.passed();
      result["max_size"] = max_size;
      result["delta_min"] = delta_min;
      result["delta_max"] = delta_max;
      result["order"] = order;
      result["checks"] = checks;
      status = report.passed() ? 0 : 1;
    }
  } catch (const FlagError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (format == "text")
    detail::render_text(result, out);
  else
    out << result.dump(2) << "\n";
  return status;
}

}  // namespace brauer::cli
