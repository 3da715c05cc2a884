#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idyn/genopen.hpp"
#include "idyn/model.hpp"
#include "idyn/verdict.hpp"

namespace idyn {

/// A model viewed as a dynamical system.  In strict mode construction
/// rejects a discontinuous map with DiscontinuousMap; otherwise the map is
/// accepted and `continuous()` reports the fact.
class DynamicalSystem {
 public:
  explicit DynamicalSystem(Model model, bool strict_continuity = false);

  const Model& model() const noexcept { return model_; }
  const Topology& topology() const noexcept { return model_.topology(); }
  const Ideal& ideal() const noexcept { return model_.ideal(); }
  const SelfMap& map() const noexcept { return model_.map(); }
  const GroundSet& ground() const noexcept { return model_.ground(); }
  bool strict_continuity() const noexcept { return strict_; }
  bool continuous() const noexcept { return continuous_; }

 private:
  Model model_;
  bool strict_;
  bool continuous_;
};

/// Which sets a transitivity or non-wandering query ranges over, and whether
/// overlaps must be nonempty (plain) or outside the ideal (ideal-graded).
struct TransitivityKind {
  OpenKind base = OpenKind::open;
  bool ideal_graded = false;

  /// `transitive`, `i-transitive`, `semi-transitive`, `b-i-transitive`, ...
  std::string name() const;
  static std::optional<TransitivityKind> parse(std::string_view name);

  friend bool operator==(const TransitivityKind&, const TransitivityKind&) = default;
};

/// All ten kinds, plain before graded within each base.
std::vector<TransitivityKind> all_transitivity_kinds();

struct Orbit {
  std::vector<Point> sequence;  ///< x, f(x), ... up to the first repetition
  Subset set;
};

/// Throws UnknownPoint.
Orbit orbit(const DynamicalSystem& sys, Point x);

struct IterateHorizon {
  unsigned preperiod = 0;
  unsigned period = 1;
  std::vector<SelfMap> iterates;  ///< f^1 .. f^(p+q)
};

IterateHorizon iterate_horizon(const SelfMap& f);

/// For every ordered pair (U, V) of nonempty members of `family`, some
/// n in 1..p+q with f^n(U)∩V ⊄ `ideal_support` (an empty support gives the
/// plain ≠ ∅ test).  The failure witness is the first failing pair in
/// canonical order with the scanned exponent range.
Verdict transitive_over(const SetFamily& family, const SelfMap& f, Subset ideal_support);

/// Points x such that every nonempty member M of `family` containing x has
/// some n in 1..p+q with f^n(M)∩M ⊄ `ideal_support`.
Subset nonwandering_over(const SetFamily& family, const SelfMap& f, Subset ideal_support);

/// Throws ImproperIdeal for an ideal-graded query when X ∈ I.
Verdict check_transitive(const DynamicalSystem& sys, TransitivityKind kind);

/// Ω(f), Ω_I(f) and their generalized-open variants.  Throws ImproperIdeal
/// for an ideal-graded query when X ∈ I.
Subset nonwandering_set(const DynamicalSystem& sys, TransitivityKind kind);

enum class DensityGrade { dense, i_dense, star_dense };

std::string_view to_string(DensityGrade grade);
std::optional<DensityGrade> parse_density_grade(std::string_view text);

/// Points whose orbit satisfies the chosen density predicate.  Throws
/// ImproperIdeal for the ideal grades when X ∈ I.
Subset transitive_points(const DynamicalSystem& sys, DensityGrade grade);

/// f(A) ⊆ A.
bool is_invariant(const SelfMap& f, Subset a);

enum class Direction { forward, backward };

/// ⋃_{n=0}^{p+q} f^n(U) (forward) or f^{-n}(U) (backward).
Subset forward_union(const DynamicalSystem& sys, Subset u, Direction direction);

}  // namespace idyn
