#pragma once

// JSON forms of the library types. Half-integers are written as their
// doubled integer value under keys prefixed "twice".

#include <json.hpp>

#include "brauer/blocks.hpp"
#include "brauer/central.hpp"
#include "brauer/verify.hpp"
#include "brauer/wedge.hpp"

namespace brauer::json_io {

using nlohmann::ordered_json;

/// Integers that fit in 64 bits are numbers, larger ones decimal strings.
inline ordered_json big_integer(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline ordered_json to_json(const Partition& p) {
  ordered_json a = ordered_json::array();
  for (int part : p.parts()) a.push_back(part);
  return a;
}

inline ordered_json to_json(const std::vector<Partition>& ps) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

inline ordered_json rational_pair(const Rational& r) {
  return ordered_json::array({big_integer(numerator(r)), big_integer(denominator(r))});
}

inline ordered_json to_json(const RootVector& v) {
  ordered_json a = ordered_json::array();
  for (auto [i, c] : v.coeffs()) a.push_back({i.twice(), c});
  return a;
}

inline ordered_json to_json(const SymWeight& w) {
  ordered_json pos = ordered_json::array();
  for (auto [i, c] : w.pos_part()) pos.push_back({i.twice(), c});
  ordered_json j;
  j["pos"] = pos;
  j["zeroParity"] = w.zero_parity() ? ordered_json(*w.zero_parity()) : ordered_json(nullptr);
  return j;
}

inline ordered_json to_json(const ChargedSequence& s) {
  return {{"twiceCharge", s.charge().twice()}, {"shape", to_json(s.shape())}};
}

inline ordered_json parity_json(NegParity p) {
  switch (p) {
    case NegParity::Even: return 0;
    case NegParity::Odd: return 1;
    case NegParity::Any: break;
  }
  return "*";
}

inline ordered_json to_json(const OrbitKey& k) {
  ordered_json dev = ordered_json::array();
  for (auto [v, c] : k.deviation) dev.push_back({v.twice(), c});
  return {{"twiceCharge", k.charge.twice()}, {"devMap", dev}, {"negParity", parity_json(k.parity)}};
}

inline ordered_json to_json(const BlockKey& k) {
  ordered_json j = to_json(k.orbit);
  j["delta"] = k.delta;
  return j;
}

inline ordered_json to_json(const FactoredRational& f) {
  ordered_json factors = ordered_json::array();
  for (const auto& [root, e] : f.factors())
    factors.push_back({big_integer(numerator(root)), big_integer(denominator(root)), e});
  return {{"factored", f.str()}, {"constant", rational_pair(f.constant())}, {"factors", factors}};
}

inline ordered_json to_json(const WedgeVector& v) {
  ordered_json terms = ordered_json::array();
  for (const auto& [s, c] : v.terms())
    terms.push_back({{"shape", to_json(s.shape())},
                     {"twiceCharge", s.charge().twice()},
                     {"numerator", big_integer(numerator(c))},
                     {"denominator", big_integer(denominator(c))}});
  return terms;
}

inline ordered_json to_json(const DotVector& v) {
  ordered_json a = ordered_json::array();
  for (HalfInt x : v) a.push_back(x.twice());
  return a;
}

inline ordered_json to_json(const CheckResult& r) {
  return {{"name", r.name},
          {"range", r.range},
          {"passed", r.passed},
          {"counterexample", r.counterexample ? ordered_json(*r.counterexample) : ordered_json(nullptr)},
          {"seconds", r.seconds}};
}

}  // namespace brauer::json_io
