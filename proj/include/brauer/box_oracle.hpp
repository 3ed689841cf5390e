#pragma once

// Young-diagram level model of the generators e_i and f_{-i} on charged
// sequences, written against boxes and contents only. Used as an oracle for
// the entry-moving implementation in brauer/wedge.hpp.

#include <optional>
#include <vector>

#include "brauer/half_int.hpp"
#include "brauer/partitions.hpp"

namespace brauer::oracle {

/// Removes the removable corner whose content equals `content`, if any.
inline std::optional<Partition> remove_corner_with_content(const Partition& lambda, std::int64_t content) {
  for (std::size_t k = 0; k < lambda.length(); ++k) {
    const int row = static_cast<int>(k) + 1;
    const bool removable = lambda.row(k) > lambda.row(k + 1);
    if (removable && lambda.row(k) - row == content) {
      std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
      --parts[k];
      return Partition(parts);
    }
  }
  return std::nullopt;
}

/// Adds the addable box whose content equals `content`, if any.
inline std::optional<Partition> add_box_with_content(const Partition& lambda, std::int64_t content) {
  for (std::size_t k = 0; k <= lambda.length(); ++k) {
    const int row = static_cast<int>(k) + 1;
    const bool addable = k == 0 || lambda.row(k - 1) > lambda.row(k);
    if (addable && lambda.row(k) + 1 - row == content) {
      std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
      if (k == parts.size()) parts.push_back(0);
      ++parts[k];
      return Partition(parts);
    }
  }
  return std::nullopt;
}

/// Entry d - lambda_k + k of row k equals d - c for the last box of the
/// row (c its content), so moving entry i - 1/2 up by one removes the corner
/// of content d - i + 1/2.
inline std::optional<Partition> oracle_raise(HalfInt i, HalfInt charge, const Partition& shape) {
  const HalfInt c = charge - i + HalfInt::half(1);
  return remove_corner_with_content(shape, c.integer_value());
}

/// f_j moves entry j + 1/2 down by one: adds the box of content d - j + 1/2.
inline std::optional<Partition> oracle_lower(HalfInt j, HalfInt charge, const Partition& shape) {
  const HalfInt c = charge - j + HalfInt::half(1);
  return add_box_with_content(shape, c.integer_value());
}

}  // namespace brauer::oracle
