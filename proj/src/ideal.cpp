#include "idyn/ideal.hpp"

#include <cassert>

#include "idyn/genopen.hpp"

namespace idyn {

namespace {

void require_same_ground(const Topology& t, const Ideal& ideal) {
  if (!(t.ground() == ideal.ground())) {
    throw Error(ErrorCode::GroundMismatch, "topology and ideal live on different ground sets");
  }
}

// Calls fn for every subset of `mask`, in increasing numeric order.
template <class Fn>
void for_each_submask(Subset mask, Fn&& fn) {
  const Subset::Bits m = mask.bits();
  Subset::Bits s = 0;
  do {
    fn(Subset(s));
    s = (s - m) & m;
  } while (s != 0);
}

}  // namespace

SetFamily Ideal::members() const {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << support_.size());
  for_each_submask(support_, [&](Subset s) { out.push_back(s); });
  return SetFamily(std::move(out));
}

Ideal ideal_from_generators(const SetFamily& generators, const GroundSet& ground) {
  for (auto g : generators) ground.require_fits(g);
  return Ideal(ground, generators.union_all());
}

Ideal trivial_ideal(const GroundSet& ground) { return ideal_from_generators(SetFamily{}, ground); }

Ideal power_ideal(const GroundSet& ground, Subset m) { return ideal_from_generators(SetFamily{m}, ground); }

Subset local_function(const Topology& t, const Ideal& ideal, Subset a) {
  require_same_ground(t, ideal);
  t.ground().require_fits(a);
  Subset out;
  for (std::size_t i = 0; i < t.points(); ++i) {
    const auto x = static_cast<Point>(i);
    bool every_neighbourhood_escapes = true;
    for (auto u : t.opens()) {
      if (u.contains(x) && ideal.contains(u & a)) {
        every_neighbourhood_escapes = false;
        break;
      }
    }
    if (every_neighbourhood_escapes) out = out.with(x);
  }
  return out;
}

Subset psi(const Topology& t, const Ideal& ideal, Subset a) {
  const GroundSet& x = t.ground();
  return x.complement(local_function(t, ideal, x.complement(a)));
}

Subset star_closure(const Topology& t, const Ideal& ideal, Subset a) {
  return a | local_function(t, ideal, a);
}

Topology star_topology(const Topology& t, const Ideal& ideal) {
  require_same_ground(t, ideal);
  std::vector<Subset> basis;
  for (auto o : t.opens()) {
    for_each_submask(o & ideal.support(), [&](Subset j) { basis.push_back(o - j); });
  }
  return generate_from_subbasis(SetFamily(std::move(basis)), t.ground());
}

StarOperators star_operators(const Topology& t, const Ideal& ideal, Subset a) {
  const Topology star = star_topology(t, ideal);
  return {star_closure(t, ideal, a), interior(star, a)};
}

SetFamily i_opens(const Topology& t, const Ideal& ideal) {
  std::vector<Subset> out;
  for (auto a : power_set(t.ground())) {
    if (a.subset_of(interior(t, local_function(t, ideal, a)))) out.push_back(a);
  }
  return SetFamily(std::move(out));
}

bool is_compatible(const Topology& t, const Ideal& ideal) {
  require_same_ground(t, ideal);
  for (auto a : power_set(t.ground())) {
    bool locally_small = true;
    a.for_each([&](Point x) {
      if (!locally_small) return;
      bool found = false;
      for (auto o : t.opens()) {
        if (o.contains(x) && ideal.contains(o & a)) {
          found = true;
          break;
        }
      }
      locally_small = found;
    });
    if (locally_small && !ideal.contains(a)) return false;
  }
  return true;
}

IdealClassification classify_ideal(const Topology& t, const Ideal& ideal) {
  require_same_ground(t, ideal);
  IdealClassification c;
  c.codense = true;
  for (auto o : t.opens()) {
    if (!o.empty() && ideal.contains(o)) {
      c.codense = false;
      break;
    }
  }
  c.completely_codense = true;
  for_each_submask(ideal.support(), [&](Subset s) {
    if (!s.empty() && is_k_open(t, OpenKind::pre, s)) c.completely_codense = false;
  });
#ifndef NDEBUG
  bool all_nowhere_dense = true;
  for_each_submask(ideal.support(), [&](Subset s) {
    if (!interior(t, closure(t, s)).empty()) all_nowhere_dense = false;
  });
  assert(all_nowhere_dense == c.completely_codense);
#endif
  c.compatible = is_compatible(t, ideal);
  c.hayashi_samuel = c.codense;
  return c;
}

Ideal pushforward_ideal(const SelfMap& f, const Ideal& ideal) {
  return ideal_from_generators(SetFamily{f.image(ideal.support())}, f.ground());
}

Ideal pullback_ideal(const SelfMap& f, const Ideal& ideal) {
  return ideal_from_generators(SetFamily{f.preimage(ideal.support())}, f.ground());
}

}  // namespace idyn
