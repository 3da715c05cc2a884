#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "idyn/topology.hpp"

namespace idyn {

/// Generalized-open classes.  `open` is the topology itself.
enum class OpenKind { open, semi, pre, b, beta };

inline constexpr std::array<OpenKind, 5> kAllOpenKinds{OpenKind::open, OpenKind::semi, OpenKind::pre,
                                                       OpenKind::b, OpenKind::beta};

std::string_view to_string(OpenKind kind);
std::optional<OpenKind> parse_open_kind(std::string_view text);

/// Defining containment for each kind:
///   semi  A ⊆ Cl(Int A)
///   pre   A ⊆ Int(Cl A)
///   b     A ⊆ Cl(Int A) ∪ Int(Cl A)
///   beta  A ⊆ Cl(Int(Cl A))
bool is_k_open(const Topology& t, OpenKind kind, Subset a);

/// All kind-open subsets, found by filtering the power set.
SetFamily k_opens(const Topology& t, OpenKind kind);

/// Intersection of the kind-closed supersets of `a`.  Kind-closed sets are
/// the complements of `family`, which must be the kind-open family of `t`.
Subset k_closure(const GroundSet& ground, const SetFamily& family, Subset a);
Subset k_closure(const Topology& t, OpenKind kind, Subset a);

}  // namespace idyn
