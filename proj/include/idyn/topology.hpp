#pragma once

#include <vector>

#include "idyn/error.hpp"
#include "idyn/selfmap.hpp"
#include "idyn/subset.hpp"
#include "idyn/verdict.hpp"

namespace idyn {

/// A validated finite topology, stored extensionally as its family of opens.
///
/// Instances are only produced by `validate_topology` and
/// `generate_from_subbasis` (and the helpers built on them), so the axioms
/// always hold.
class Topology {
 public:
  const GroundSet& ground() const noexcept { return ground_; }
  const SetFamily& opens() const noexcept { return opens_; }
  std::size_t points() const noexcept { return ground_.size(); }

  bool is_open(Subset s) const { return opens_.contains(s); }
  bool is_closed(Subset s) const { return opens_.contains(ground_.complement(s)); }

  /// Smallest open set containing `p`.
  Subset minimal_neighborhood(Point p) const { return minimal_[p]; }

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.opens_ == b.opens_ && a.ground_ == b.ground_;
  }

 private:
  Topology(GroundSet ground, SetFamily opens);

  friend Topology validate_topology(SetFamily family, const GroundSet& ground);
  friend Topology generate_from_subbasis(const SetFamily& family, const GroundSet& ground);

  GroundSet ground_;
  SetFamily opens_;
  std::vector<Subset> minimal_;
};

/// Error raised by `validate_topology`; `first`/`second` hold the violating
/// pair and `missing` the absent union or intersection.
class TopologyError : public Error {
 public:
  TopologyError(ErrorCode code, const std::string& message, Subset first = {}, Subset second = {},
                Subset missing = {})
      : Error(code, message), first_(first), second_(second), missing_(missing) {}

  Subset first() const noexcept { return first_; }
  Subset second() const noexcept { return second_; }
  Subset missing() const noexcept { return missing_; }

 private:
  Subset first_, second_, missing_;
};

/// Checks the topology axioms.  Throws TopologyError with MissingEmpty,
/// MissingFull, NotUnionClosed or NotIntersectionClosed; reports the first
/// violating pair in canonical order.
Topology validate_topology(SetFamily family, const GroundSet& ground);

/// Smallest topology containing `family`.
Topology generate_from_subbasis(const SetFamily& family, const GroundSet& ground);

Topology discrete_topology(const GroundSet& ground);
Topology indiscrete_topology(const GroundSet& ground);

Subset closure(const Topology& t, Subset a);
Subset interior(const Topology& t, Subset a);

/// Opens containing `p`.  Throws UnknownPoint.
SetFamily open_neighborhoods(const Topology& t, Point p);

/// Opens O with O = Int(Cl(O)).
SetFamily regular_opens(const Topology& t);

/// The distinct minimal neighbourhoods.  Every basis of `t` contains them,
/// and they form a basis on their own.
SetFamily minimal_basis(const Topology& t);

/// Every basis of `t` (families of nonempty opens whose unions give all of
/// `t`), in canonical order of their inclusion masks.  Exponential in the
/// number of opens outside the minimal basis.
std::vector<SetFamily> all_bases(const Topology& t);

bool is_hausdorff(const Topology& t);

/// Preimage of every open is open; the witness is the first open whose
/// preimage is not.
Verdict is_continuous(const Topology& t, const SelfMap& f);

/// Image of every open is open; the witness is the first open whose image
/// is not.
Verdict is_open_map(const Topology& t, const SelfMap& f);

}  // namespace idyn
