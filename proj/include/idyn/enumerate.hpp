#pragma once

#include <cstdint>
#include <vector>

#include "idyn/ideal.hpp"
#include "idyn/selfmap.hpp"
#include "idyn/topology.hpp"

namespace idyn {

inline constexpr std::size_t kMaxEnumerationSize = 5;

/// Every topology on the standard n-point ground set exactly once, ordered
/// by family mask (bit s set iff subset s is open).  Built from the
/// specialization preorders.  Throws SizeTooLarge unless 1 <= n <= 5.
std::vector<Topology> enumerate_topologies(std::size_t n);

/// Number of topologies on n labeled points, 0 <= n <= 5.
std::size_t count_topologies(std::size_t n);

/// Bit s of the result is set iff subset s is open.  Needs |X| <= 6.
std::uint64_t family_mask(const Topology& t);

/// P(M) for every M ⊆ X in increasing order of M; X itself is skipped when
/// `proper_only`.  Throws SizeTooLarge unless 1 <= n <= 5.
std::vector<Ideal> enumerate_ideals(std::size_t n, bool proper_only = false);

/// All n^n maps in lexicographic order of the image tuple (f(a), f(b), ...),
/// keeping only maps continuous for `t` when `continuous_only`.
/// Throws SizeTooLarge unless 1 <= n <= 5.
std::vector<SelfMap> enumerate_selfmaps(std::size_t n, const Topology* t = nullptr, bool continuous_only = false);

}  // namespace idyn
