#include "idyn/enumerate.hpp"

#include <algorithm>

namespace idyn {

namespace {

void require_size(std::size_t n) {
  if (n == 0 || n > kMaxEnumerationSize) {
    throw Error(ErrorCode::SizeTooLarge, "enumeration supports ground sizes 1.." +
                                             std::to_string(kMaxEnumerationSize) + ", got " + std::to_string(n));
  }
}

// Minimal-neighbourhood tables (U_x = {y : x ≤ y}) of every preorder on n
// points.  Each preorder's up-sets form one topology and every finite
// topology arises from exactly one preorder.
template <class Fn>
void for_each_preorder(std::size_t n, Fn&& fn) {
  const std::size_t off_diagonal = n * (n - 1);
  std::vector<Subset> up(n);
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << off_diagonal); ++rel) {
    std::size_t bit = 0;
    for (std::size_t x = 0; x < n; ++x) {
      Subset u = Subset::singleton(static_cast<Point>(x));
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        if ((rel >> bit++) & 1U) u = u.with(static_cast<Point>(y));
      }
      up[x] = u;
    }
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x) {
      up[x].for_each([&](Point y) {
        if (!up[y].subset_of(up[x])) transitive = false;
      });
    }
    if (transitive) fn(up);
  }
}

std::uint64_t upset_mask(std::size_t n, const std::vector<Subset>& up) {
  std::uint64_t mask = 0;
  for (Subset::Bits a = 0; a < (Subset::Bits{1} << n); ++a) {
    bool open = true;
    Subset(a).for_each([&](Point x) {
      if (!up[x].subset_of(Subset(a))) open = false;
    });
    if (open) mask |= std::uint64_t{1} << a;
  }
  return mask;
}

}  // namespace

std::size_t count_topologies(std::size_t n) {
  if (n == 0) return 1;
  require_size(n);
  std::size_t count = 0;
  for_each_preorder(n, [&](const std::vector<Subset>&) { ++count; });
  return count;
}

std::uint64_t family_mask(const Topology& t) {
  std::uint64_t mask = 0;
  for (auto o : t.opens()) mask |= std::uint64_t{1} << o.bits();
  return mask;
}

std::vector<Topology> enumerate_topologies(std::size_t n) {
  require_size(n);
  std::vector<std::uint64_t> masks;
  for_each_preorder(n, [&](const std::vector<Subset>& up) { masks.push_back(upset_mask(n, up)); });
  std::sort(masks.begin(), masks.end());

  const GroundSet ground = GroundSet::standard(n);
  std::vector<Topology> out;
  out.reserve(masks.size());
  for (auto mask : masks) {
    std::vector<Subset> opens;
    for (Subset::Bits a = 0; a < (Subset::Bits{1} << n); ++a) {
      if ((mask >> a) & 1U) opens.emplace_back(a);
    }
    out.push_back(validate_topology(SetFamily(std::move(opens)), ground));
  }
  return out;
}

std::vector<Ideal> enumerate_ideals(std::size_t n, bool proper_only) {
  require_size(n);
  const GroundSet ground = GroundSet::standard(n);
  std::vector<Ideal> out;
  for (Subset::Bits m = 0; m < (Subset::Bits{1} << n); ++m) {
    if (proper_only && Subset(m) == ground.full()) continue;
    out.push_back(power_ideal(ground, Subset(m)));
  }
  return out;
}

std::vector<SelfMap> enumerate_selfmaps(std::size_t n, const Topology* t, bool continuous_only) {
  require_size(n);
  const GroundSet ground = t ? t->ground() : GroundSet::standard(n);
  if (ground.size() != n) throw Error(ErrorCode::GroundMismatch, "topology size does not match n");
  std::vector<SelfMap> out;
  std::vector<Point> images(n, 0);
  for (;;) {
    SelfMap f(ground, images);
    if (!continuous_only || !t || is_continuous(*t, f).holds) out.push_back(std::move(f));
    // Advance the tuple; the last point varies fastest.
    std::size_t i = n;
    while (i > 0 && images[i - 1] == n - 1) images[--i] = 0;
    if (i == 0) break;
    ++images[i - 1];
  }
  return out;
}

}  // namespace idyn
