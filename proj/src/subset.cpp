#include "idyn/subset.hpp"

#include <algorithm>
#include <unordered_set>

#include "idyn/error.hpp"

namespace idyn {

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.empty() || labels.size() > kMaxPoints) {
    throw Error(ErrorCode::InvalidGroundSet,
                "ground set must have 1.." + std::to_string(kMaxPoints) + " points, got " +
                    std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw Error(ErrorCode::InvalidGroundSet, "empty point label");
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::InvalidGroundSet, "duplicate point label '" + label + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::standard(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  }
  return GroundSet(std::move(labels));
}

std::optional<Point> GroundSet::find(std::string_view label) const {
  const auto& ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return static_cast<Point>(i);
  }
  return std::nullopt;
}

Point GroundSet::point(std::string_view label) const {
  if (auto p = find(label)) return *p;
  throw Error(ErrorCode::UnknownPoint, "unknown point '" + std::string(label) + "'");
}

Subset GroundSet::subset(std::initializer_list<std::string_view> labels) const {
  Subset s;
  for (auto label : labels) s = s.with(point(label));
  return s;
}

void GroundSet::require_fits(Subset s) const {
  if (!fits(s)) {
    throw Error(ErrorCode::SubsetOutOfRange,
                "subset has points outside a ground set of size " + std::to_string(size()));
  }
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Point p) {
    if (!first) out += ' ';
    first = false;
    out += (p < size()) ? label(p) : "#" + std::to_string(p);
  });
  out += '}';
  return out;
}

SetFamily::SetFamily(std::vector<Subset> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily::SetFamily(std::initializer_list<Subset> members)
    : SetFamily(std::vector<Subset>(members)) {}

bool SetFamily::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Subset SetFamily::union_all() const noexcept {
  Subset u;
  for (auto s : members_) u |= s;
  return u;
}

bool SetFamily::subset_of(const SetFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

SetFamily power_set(const GroundSet& ground) {
  std::vector<Subset> all;
  const std::uint64_t count = std::uint64_t{1} << ground.size();
  all.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    all.emplace_back(static_cast<Subset::Bits>(bits));
  }
  return SetFamily(std::move(all));
}

std::string format_family(const GroundSet& ground, const SetFamily& family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ' ';
    out += ground.format(family[i]);
  }
  out += ']';
  return out;
}

}  // namespace idyn
