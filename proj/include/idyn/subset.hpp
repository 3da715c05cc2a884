#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idyn {

inline constexpr std::size_t kMaxPoints = 32;

/// Index of a point inside its ground set.
using Point = std::uint8_t;

/// A subset of a ground set of at most 32 points, one bit per point.
///
/// Subsets carry no reference to their ground set; the ground set fixes the
/// meaning of each bit and supplies the complement.  Ordering is by the
/// numeric value of the bits, which is the canonical order used by every
/// family, report and witness.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() noexcept = default;
  constexpr explicit Subset(Bits bits) noexcept : bits_(bits) {}

  static constexpr Subset singleton(Point p) noexcept { return Subset(Bits{1} << p); }

  /// The subset {0, ..., n-1}.
  static constexpr Subset first(std::size_t n) noexcept {
    return Subset(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(Point p) const noexcept { return (bits_ >> p) & 1U; }
  constexpr bool subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool meets(Subset other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr Subset with(Point p) const noexcept { return Subset(bits_ | (Bits{1} << p)); }
  constexpr Subset without(Point p) const noexcept { return Subset(bits_ & ~(Bits{1} << p)); }

  constexpr Subset& operator|=(Subset o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Subset, Subset) noexcept = default;
  friend constexpr auto operator<=>(Subset, Subset) noexcept = default;

  /// Calls `fn(Point)` for each member in increasing order.
  template <class Fn>
  constexpr void for_each(Fn&& fn) const {
    for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
      fn(static_cast<Point>(std::countr_zero(rest)));
    }
  }

 private:
  Bits bits_ = 0;
};

/// Ordered, labeled carrier of 1..32 points.  Copies share the label storage.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  /// Points named a, b, c, ... (used by enumeration).
  static GroundSet standard(std::size_t n);

  std::size_t size() const noexcept { return labels_->size(); }
  Subset full() const noexcept { return Subset::first(size()); }
  bool fits(Subset s) const noexcept { return s.subset_of(full()); }
  Subset complement(Subset s) const noexcept { return full() - s; }

  const std::string& label(Point p) const { return (*labels_)[p]; }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  std::optional<Point> find(std::string_view label) const;

  /// Point lookup that throws UnknownPoint.
  Point point(std::string_view label) const;

  /// Builds a subset from labels; throws UnknownPoint.
  Subset subset(std::initializer_list<std::string_view> labels) const;

  /// Throws SubsetOutOfRange when `s` has bits past the last point.
  void require_fits(Subset s) const;

  /// Renders as `{a c}`; the empty set renders as `{}`.
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Duplicate-free collection of subsets kept in canonical (numeric) order.
class SetFamily {
 public:
  using const_iterator = std::vector<Subset>::const_iterator;

  SetFamily() = default;
  explicit SetFamily(std::vector<Subset> members);
  SetFamily(std::initializer_list<Subset> members);

  bool contains(Subset s) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  Subset operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Subset>& members() const noexcept { return members_; }

  /// Union of all members.
  Subset union_all() const noexcept;

  /// True if every member of this family is a member of `other`.
  bool subset_of(const SetFamily& other) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<Subset> members_;
};

/// Every subset of `ground`, in canonical order.
SetFamily power_set(const GroundSet& ground);

/// Renders as `[{} {a} {a c}]`.
std::string format_family(const GroundSet& ground, const SetFamily& family);

}  // namespace idyn
