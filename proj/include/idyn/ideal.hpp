#pragma once

#include "idyn/selfmap.hpp"
#include "idyn/topology.hpp"

namespace idyn {

/// An ideal on a finite ground set.
///
/// Heredity plus finite additivity force every ideal on a finite set to be
/// the power set of the union of its members, so an ideal is stored by that
/// union (its support) and `members()` materializes the family on request.
class Ideal {
 public:
  const GroundSet& ground() const noexcept { return ground_; }

  /// Union of all members; the ideal is P(support()).
  Subset support() const noexcept { return support_; }
  bool contains(Subset s) const noexcept { return s.subset_of(support_); }
  /// X is not a member.
  bool proper() const noexcept { return support_ != ground_.full(); }
  /// The minimal ideal {∅}.
  bool trivial() const noexcept { return support_.empty(); }

  /// Every member in canonical order (2^|support| subsets).
  SetFamily members() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.support_ == b.support_ && a.ground_ == b.ground_;
  }

 private:
  Ideal(GroundSet ground, Subset support) : ground_(std::move(ground)), support_(support) {}

  friend Ideal ideal_from_generators(const SetFamily& generators, const GroundSet& ground);

  GroundSet ground_;
  Subset support_;
};

/// Smallest ideal containing `generators`: P(∪ generators).  Improper
/// ideals are allowed and reported through `proper()`.
Ideal ideal_from_generators(const SetFamily& generators, const GroundSet& ground);

Ideal trivial_ideal(const GroundSet& ground);
/// P(m).
Ideal power_ideal(const GroundSet& ground, Subset m);

/// Kuratowski local function A*(I): points x such that U∩A ∉ I for every
/// open U containing x.
Subset local_function(const Topology& t, const Ideal& ideal, Subset a);

/// ψ(A) = X ∖ (X ∖ A)*.
Subset psi(const Topology& t, const Ideal& ideal, Subset a);

/// Cl*(A) = A ∪ A*.
Subset star_closure(const Topology& t, const Ideal& ideal, Subset a);

struct StarOperators {
  Subset cl_star;
  Subset int_star;
};

/// Closure A ∪ A* and the interior of A in the *-topology.
StarOperators star_operators(const Topology& t, const Ideal& ideal, Subset a);

/// Topology generated by {O ∖ J : O open, J ∈ I}.
Topology star_topology(const Topology& t, const Ideal& ideal);

/// Subsets A with A ⊆ Int(A*).
SetFamily i_opens(const Topology& t, const Ideal& ideal);

struct IdealClassification {
  bool codense = false;             ///< no nonempty open belongs to I
  bool completely_codense = false;  ///< no nonempty preopen belongs to I
  bool compatible = false;
  bool hayashi_samuel = false;      ///< same as codense
};

IdealClassification classify_ideal(const Topology& t, const Ideal& ideal);

/// Compatibility by its definition: every A whose points each have an open
/// neighbourhood O with O∩A ∈ I is itself in I.
bool is_compatible(const Topology& t, const Ideal& ideal);

/// {f(S) : S ∈ I} = P(f(support)).
Ideal pushforward_ideal(const SelfMap& f, const Ideal& ideal);

/// {A : A ⊆ f⁻¹(S), S ∈ I} = P(f⁻¹(support)).
Ideal pullback_ideal(const SelfMap& f, const Ideal& ideal);

}  // namespace idyn
