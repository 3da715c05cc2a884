#pragma once

#include <memory>
#include <vector>

#include "idyn/subset.hpp"

namespace idyn {

/// A total function from a ground set to itself.
///
/// The sequence of positive iterates f, f^2, ... is eventually periodic on a
/// finite set.  It is computed once at construction by stepping until an
/// iterate repeats, so `iterate(k)` for k in 1..preperiod()+period() lists
/// every distinct positive iterate and f^(p+q+1) = f^(p+1).
class SelfMap {
 public:
  /// Throws MapNotTotal unless `images` assigns an in-range point to every
  /// point of `ground`.
  SelfMap(const GroundSet& ground, std::vector<Point> images);

  static SelfMap identity(const GroundSet& ground);
  static SelfMap constant(const GroundSet& ground, Point value);

  const GroundSet& ground() const noexcept { return ground_; }
  const std::vector<Point>& images() const noexcept { return images_; }
  Point operator()(Point p) const { return images_[p]; }

  Subset image(Subset s) const noexcept;
  Subset preimage(Subset s) const noexcept;

  unsigned preperiod() const noexcept { return horizon_->preperiod; }
  unsigned period() const noexcept { return horizon_->period; }
  /// p + q: the number of distinct positive iterates.
  unsigned horizon() const noexcept { return horizon_->preperiod + horizon_->period; }

  /// Image table of f^k for 1 <= k <= horizon().
  const std::vector<Point>& iterate(unsigned k) const { return horizon_->iterates[k - 1]; }

  /// f^k(s) for 0 <= k <= horizon() (k = 0 is the identity).
  Subset iterate_image(unsigned k, Subset s) const noexcept;
  /// (f^k)^{-1}(s) for 0 <= k <= horizon().
  Subset iterate_preimage(unsigned k, Subset s) const noexcept;

  /// Composite g∘f ("first this, then g").
  SelfMap then(const SelfMap& g) const;

  friend bool operator==(const SelfMap& a, const SelfMap& b) {
    return a.images_ == b.images_ && a.ground_ == b.ground_;
  }

 private:
  struct Horizon {
    unsigned preperiod = 0;
    unsigned period = 1;
    std::vector<std::vector<Point>> iterates;
  };

  static std::shared_ptr<const Horizon> compute_horizon(const std::vector<Point>& images);

  GroundSet ground_;
  std::vector<Point> images_;
  std::shared_ptr<const Horizon> horizon_;
};

}  // namespace idyn
