#include "idyn/topology.hpp"

#include <unordered_set>

namespace idyn {

Topology::Topology(GroundSet ground, SetFamily opens)
    : ground_(std::move(ground)), opens_(std::move(opens)), minimal_(ground_.size()) {
  for (std::size_t p = 0; p < ground_.size(); ++p) {
    Subset smallest = ground_.full();
    for (auto o : opens_) {
      if (o.contains(static_cast<Point>(p))) smallest &= o;
    }
    minimal_[p] = smallest;
  }
}

namespace {

void require_members_fit(const SetFamily& family, const GroundSet& ground) {
  for (auto s : family) ground.require_fits(s);
}

}  // namespace

Topology validate_topology(SetFamily family, const GroundSet& ground) {
  require_members_fit(family, ground);
  if (!family.contains(Subset{})) {
    throw TopologyError(ErrorCode::MissingEmpty, "family does not contain the empty set");
  }
  if (!family.contains(ground.full())) {
    throw TopologyError(ErrorCode::MissingFull, "family does not contain the full set " +
                                                    ground.format(ground.full()));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Subset a = family[i], b = family[j];
      if (!family.contains(a | b)) {
        throw TopologyError(ErrorCode::NotUnionClosed,
                            "union of " + ground.format(a) + " and " + ground.format(b) + " = " +
                                ground.format(a | b) + " is missing",
                            a, b, a | b);
      }
      if (!family.contains(a & b)) {
        throw TopologyError(ErrorCode::NotIntersectionClosed,
                            "intersection of " + ground.format(a) + " and " + ground.format(b) +
                                " = " + ground.format(a & b) + " is missing",
                            a, b, a & b);
      }
    }
  }
  return Topology(ground, std::move(family));
}

Topology generate_from_subbasis(const SetFamily& family, const GroundSet& ground) {
  require_members_fit(family, ground);
  // Minimal neighbourhoods of the generated topology, then all their unions.
  std::vector<Subset> basis;
  for (std::size_t p = 0; p < ground.size(); ++p) {
    Subset smallest = ground.full();
    for (auto s : family) {
      if (s.contains(static_cast<Point>(p))) smallest &= s;
    }
    basis.push_back(smallest);
  }
  SetFamily distinct(std::move(basis));

  std::unordered_set<Subset::Bits> seen{0};
  std::vector<Subset> opens{Subset{}};
  for (auto b : distinct) {
    const std::size_t count = opens.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Subset u = opens[i] | b;
      if (seen.insert(u.bits()).second) opens.push_back(u);
    }
  }
  return Topology(ground, SetFamily(std::move(opens)));
}

Topology discrete_topology(const GroundSet& ground) {
  std::vector<Subset> singletons;
  for (std::size_t p = 0; p < ground.size(); ++p) singletons.push_back(Subset::singleton(static_cast<Point>(p)));
  return generate_from_subbasis(SetFamily(std::move(singletons)), ground);
}

Topology indiscrete_topology(const GroundSet& ground) {
  return validate_topology(SetFamily{Subset{}, ground.full()}, ground);
}

Subset closure(const Topology& t, Subset a) {
  t.ground().require_fits(a);
  Subset out;
  for (std::size_t p = 0; p < t.points(); ++p) {
    if (t.minimal_neighborhood(static_cast<Point>(p)).meets(a)) out = out.with(static_cast<Point>(p));
  }
  return out;
}

Subset interior(const Topology& t, Subset a) {
  t.ground().require_fits(a);
  Subset out;
  for (std::size_t p = 0; p < t.points(); ++p) {
    if (t.minimal_neighborhood(static_cast<Point>(p)).subset_of(a)) out = out.with(static_cast<Point>(p));
  }
  return out;
}

SetFamily open_neighborhoods(const Topology& t, Point p) {
  if (p >= t.points()) {
    throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(p) + " is outside the ground set");
  }
  std::vector<Subset> out;
  for (auto o : t.opens()) {
    if (o.contains(p)) out.push_back(o);
  }
  return SetFamily(std::move(out));
}

SetFamily regular_opens(const Topology& t) {
  std::vector<Subset> out;
  for (auto o : t.opens()) {
    if (interior(t, closure(t, o)) == o) out.push_back(o);
  }
  return SetFamily(std::move(out));
}

SetFamily minimal_basis(const Topology& t) {
  std::vector<Subset> out;
  for (std::size_t p = 0; p < t.points(); ++p) out.push_back(t.minimal_neighborhood(static_cast<Point>(p)));
  return SetFamily(std::move(out));
}

std::vector<SetFamily> all_bases(const Topology& t) {
  const SetFamily required = minimal_basis(t);
  std::vector<Subset> optional;
  for (auto o : t.opens()) {
    if (!o.empty() && !required.contains(o)) optional.push_back(o);
  }
  if (optional.size() > 20) {
    throw Error(ErrorCode::SizeTooLarge, "too many bases to enumerate");
  }
  std::vector<SetFamily> bases;
  bases.reserve(std::size_t{1} << optional.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << optional.size()); ++mask) {
    std::vector<Subset> members(required.begin(), required.end());
    for (std::size_t i = 0; i < optional.size(); ++i) {
      if ((mask >> i) & 1U) members.push_back(optional[i]);
    }
    bases.emplace_back(std::move(members));
  }
  return bases;
}

bool is_hausdorff(const Topology& t) {
  for (std::size_t x = 0; x < t.points(); ++x) {
    for (std::size_t y = x + 1; y < t.points(); ++y) {
      if (t.minimal_neighborhood(static_cast<Point>(x)).meets(t.minimal_neighborhood(static_cast<Point>(y)))) {
        return false;
      }
    }
  }
  return true;
}

Verdict is_continuous(const Topology& t, const SelfMap& f) {
  for (auto o : t.opens()) {
    if (!t.is_open(f.preimage(o))) return {false, Witness{o, {}, {}, {}}};
  }
  return {true, {}};
}

Verdict is_open_map(const Topology& t, const SelfMap& f) {
  for (auto o : t.opens()) {
    if (!t.is_open(f.image(o))) return {false, Witness{o, {}, {}, {}}};
  }
  return {true, {}};
}

}  // namespace idyn
