#pragma once

#include <optional>
#include <utility>

#include "idyn/subset.hpp"

namespace idyn {

/// Evidence attached to a decision.
///
/// Pair queries fill `u` and `v`; a success witness also carries the
/// exponent `n`, a failure carries the full range of exponents scanned.
/// Single-set witnesses (a violating open of a map check, a dense subset
/// that is not ideal-dense) use `u` only.
struct Witness {
  Subset u;
  std::optional<Subset> v;
  std::optional<unsigned> n;
  std::optional<std::pair<unsigned, unsigned>> n_range;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

}  // namespace idyn
