#pragma once

#include <array>
#include <optional>
#include <vector>

#include "idyn/density.hpp"
#include "idyn/dynamics.hpp"
#include "idyn/genopen.hpp"
#include "idyn/ideal.hpp"

namespace idyn {

/// Per-topology tables shared by every instance of one topology during
/// enumeration (closure, interior and kind-closure of every subset, each
/// kind-open family).  Needs |X| <= 5.  Not thread-safe: one owner.
class TopologyFacts {
 public:
  explicit TopologyFacts(Topology t);

  const Topology& topology() const noexcept { return topology_; }
  const GroundSet& ground() const noexcept { return topology_.ground(); }
  Subset full() const noexcept { return full_; }

  Subset closure(Subset a) const { return closure_[a.bits()]; }
  Subset interior(Subset a) const { return interior_[a.bits()]; }
  const SetFamily& kopen(OpenKind kind) const { return kopen_[static_cast<std::size_t>(kind)]; }
  Subset kclosure(OpenKind kind, Subset a) const { return kclosure_[static_cast<std::size_t>(kind)][a.bits()]; }
  bool hausdorff() const noexcept { return hausdorff_; }

  /// Every basis when there are at most 10 optional opens; otherwise the
  /// minimal basis and the basis of all nonempty opens.
  const std::vector<SetFamily>& bases() const;

 private:
  Topology topology_;
  Subset full_;
  std::vector<Subset> closure_, interior_;
  std::array<SetFamily, 5> kopen_;
  std::array<std::vector<Subset>, 5> kclosure_;
  bool hausdorff_;
  mutable std::optional<std::vector<SetFamily>> bases_;
};

/// Ideal-independent facts for one (topology, map) pair, memoized.
class MapFacts {
 public:
  MapFacts(const TopologyFacts& top, const SelfMap& f) : top_(top), map_(f) {}

  const TopologyFacts& top() const noexcept { return top_; }
  const SelfMap& map() const noexcept { return map_; }

  bool continuous();
  bool open_map();
  const Verdict& transitive(OpenKind kind);
  Subset nonwandering(OpenKind kind);

 private:
  const TopologyFacts& top_;
  const SelfMap& map_;
  std::optional<bool> continuous_, open_map_;
  std::array<std::optional<Verdict>, 5> transitive_;
  std::array<std::optional<Subset>, 5> nonwandering_;
};

/// Memoized facts about one model instance (topology, ideal, map).
///
/// Ideal-graded queries on an improper ideal are answered directly from the
/// definitions: no overlap escapes P(X), so transitivity fails and Ω_I = ∅.
class InstanceFacts {
 public:
  InstanceFacts(MapFacts& plain, const Ideal& ideal);

  const TopologyFacts& top() const noexcept { return plain_.top(); }
  MapFacts& plain() noexcept { return plain_; }
  const SelfMap& map() const noexcept { return plain_.map(); }
  const Ideal& ideal() const noexcept { return ideal_; }
  const GroundSet& ground() const noexcept { return plain_.top().ground(); }
  Subset full() const noexcept { return plain_.top().full(); }

  bool continuous() { return plain_.continuous(); }
  bool open_map() { return plain_.open_map(); }

  /// Plain or ideal-graded transitivity over kind-open sets.
  const Verdict& transitive(TransitivityKind kind);
  bool transitive(OpenKind base, bool graded) { return transitive({base, graded}).holds; }
  Subset nonwandering(TransitivityKind kind);

  Subset local(Subset a);
  Subset psi(Subset a) { return ground().complement(local(ground().complement(a))); }
  Subset cl_star(Subset a) { return a | local(a); }
  bool dense(Subset a) const { return top().closure(a) == full(); }
  bool i_dense(Subset a) { return local(a) == full(); }
  bool star_dense(Subset a) { return cl_star(a) == full(); }

  bool codense();
  bool completely_codense();
  bool compatible();

  /// Image of the ideal under f^k (k >= 1).
  Ideal pushed(unsigned k) const;

  /// Some point whose orbit satisfies the grade.
  bool has_orbit(DensityGrade grade);

 private:
  MapFacts& plain_;
  const Ideal& ideal_;
  std::array<std::optional<Verdict>, 5> graded_;
  std::array<std::optional<Subset>, 5> graded_nonwandering_;
  std::vector<std::optional<Subset>> local_;
  std::optional<bool> codense_, completely_codense_, compatible_;
};

}  // namespace idyn
