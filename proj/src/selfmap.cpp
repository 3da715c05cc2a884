#include "idyn/selfmap.hpp"

#include <map>

#include "idyn/error.hpp"

namespace idyn {

SelfMap::SelfMap(const GroundSet& ground, std::vector<Point> images)
    : ground_(ground), images_(std::move(images)) {
  if (images_.size() != ground_.size()) {
    throw Error(ErrorCode::MapNotTotal, "map assigns " + std::to_string(images_.size()) +
                                            " images on a ground set of " +
                                            std::to_string(ground_.size()) + " points");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] >= ground_.size()) {
      throw Error(ErrorCode::MapNotTotal,
                  "image of '" + ground_.label(static_cast<Point>(i)) + "' is out of range");
    }
  }
  horizon_ = compute_horizon(images_);
}

SelfMap SelfMap::identity(const GroundSet& ground) {
  std::vector<Point> images(ground.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Point>(i);
  return SelfMap(ground, std::move(images));
}

SelfMap SelfMap::constant(const GroundSet& ground, Point value) {
  return SelfMap(ground, std::vector<Point>(ground.size(), value));
}

std::shared_ptr<const SelfMap::Horizon> SelfMap::compute_horizon(const std::vector<Point>& images) {
  auto h = std::make_shared<Horizon>();
  std::map<std::vector<Point>, unsigned> seen;  // iterate -> exponent
  std::vector<Point> current = images;
  for (unsigned k = 1;; ++k) {
    auto [it, inserted] = seen.emplace(current, k);
    if (!inserted) {
      h->preperiod = it->second - 1;
      h->period = k - it->second;
      return h;
    }
    h->iterates.push_back(current);
    std::vector<Point> next(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) next[i] = images[current[i]];
    current = std::move(next);
  }
}

Subset SelfMap::image(Subset s) const noexcept {
  Subset out;
  s.for_each([&](Point p) { out = out.with(images_[p]); });
  return out;
}

Subset SelfMap::preimage(Subset s) const noexcept {
  Subset out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (s.contains(images_[i])) out = out.with(static_cast<Point>(i));
  }
  return out;
}

Subset SelfMap::iterate_image(unsigned k, Subset s) const noexcept {
  if (k == 0) return s;
  const auto& table = horizon_->iterates[k - 1];
  Subset out;
  s.for_each([&](Point p) { out = out.with(table[p]); });
  return out;
}

Subset SelfMap::iterate_preimage(unsigned k, Subset s) const noexcept {
  if (k == 0) return s;
  const auto& table = horizon_->iterates[k - 1];
  Subset out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (s.contains(table[i])) out = out.with(static_cast<Point>(i));
  }
  return out;
}

SelfMap SelfMap::then(const SelfMap& g) const {
  if (!(g.ground_ == ground_)) throw Error(ErrorCode::GroundMismatch, "composing maps on different ground sets");
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = g.images_[images_[i]];
  return SelfMap(ground_, std::move(out));
}

}  // namespace idyn
