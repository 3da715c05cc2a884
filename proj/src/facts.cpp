#include "idyn/facts.hpp"

namespace idyn {

TopologyFacts::TopologyFacts(Topology t) : topology_(std::move(t)), full_(topology_.ground().full()) {
  if (topology_.points() > 5) throw Error(ErrorCode::SizeTooLarge, "facts tables need at most 5 points");
  const std::size_t count = std::size_t{1} << topology_.points();
  closure_.resize(count);
  interior_.resize(count);
  for (std::size_t a = 0; a < count; ++a) {
    closure_[a] = idyn::closure(topology_, Subset(static_cast<Subset::Bits>(a)));
    interior_[a] = idyn::interior(topology_, Subset(static_cast<Subset::Bits>(a)));
  }
  for (auto kind : kAllOpenKinds) {
    const auto k = static_cast<std::size_t>(kind);
    kopen_[k] = k_opens(topology_, kind);
    kclosure_[k].resize(count);
    for (std::size_t a = 0; a < count; ++a) {
      kclosure_[k][a] = k_closure(topology_.ground(), kopen_[k], Subset(static_cast<Subset::Bits>(a)));
    }
  }
  hausdorff_ = is_hausdorff(topology_);
}

const std::vector<SetFamily>& TopologyFacts::bases() const {
  if (!bases_) {
    const SetFamily minimal = minimal_basis(topology_);
    std::size_t optional = 0;
    for (auto o : topology_.opens()) optional += (!o.empty() && !minimal.contains(o)) ? 1 : 0;
    if (optional <= 10) {
      bases_ = all_bases(topology_);
    } else {
      std::vector<Subset> nonempty;
      for (auto o : topology_.opens()) {
        if (!o.empty()) nonempty.push_back(o);
      }
      bases_ = std::vector<SetFamily>{minimal, SetFamily(std::move(nonempty))};
    }
  }
  return *bases_;
}

bool MapFacts::continuous() {
  if (!continuous_) continuous_ = is_continuous(top_.topology(), map_).holds;
  return *continuous_;
}

bool MapFacts::open_map() {
  if (!open_map_) open_map_ = is_open_map(top_.topology(), map_).holds;
  return *open_map_;
}

const Verdict& MapFacts::transitive(OpenKind kind) {
  auto& slot = transitive_[static_cast<std::size_t>(kind)];
  if (!slot) slot = transitive_over(top_.kopen(kind), map_, Subset{});
  return *slot;
}

Subset MapFacts::nonwandering(OpenKind kind) {
  auto& slot = nonwandering_[static_cast<std::size_t>(kind)];
  if (!slot) slot = nonwandering_over(top_.kopen(kind), map_, Subset{});
  return *slot;
}

InstanceFacts::InstanceFacts(MapFacts& plain, const Ideal& ideal)
    : plain_(plain), ideal_(ideal), local_(std::size_t{1} << plain.top().topology().points()) {}

const Verdict& InstanceFacts::transitive(TransitivityKind kind) {
  if (!kind.ideal_graded) return plain_.transitive(kind.base);
  auto& slot = graded_[static_cast<std::size_t>(kind.base)];
  if (!slot) slot = transitive_over(top().kopen(kind.base), map(), ideal_.support());
  return *slot;
}

Subset InstanceFacts::nonwandering(TransitivityKind kind) {
  if (!kind.ideal_graded) return plain_.nonwandering(kind.base);
  auto& slot = graded_nonwandering_[static_cast<std::size_t>(kind.base)];
  if (!slot) slot = nonwandering_over(top().kopen(kind.base), map(), ideal_.support());
  return *slot;
}

Subset InstanceFacts::local(Subset a) {
  auto& slot = local_[a.bits()];
  if (!slot) slot = local_function(top().topology(), ideal_, a);
  return *slot;
}

bool InstanceFacts::codense() {
  if (!codense_) codense_ = classify_ideal(top().topology(), ideal_).codense;
  return *codense_;
}

bool InstanceFacts::completely_codense() {
  if (!completely_codense_) {
    bool cc = true;
    for (auto p : top().kopen(OpenKind::pre)) {
      if (!p.empty() && ideal_.contains(p)) {
        cc = false;
        break;
      }
    }
    completely_codense_ = cc;
  }
  return *completely_codense_;
}

bool InstanceFacts::compatible() {
  if (!compatible_) compatible_ = is_compatible(top().topology(), ideal_);
  return *compatible_;
}

Ideal InstanceFacts::pushed(unsigned k) const {
  return power_ideal(ground(), map().iterate_image(k, ideal_.support()));
}

bool InstanceFacts::has_orbit(DensityGrade grade) {
  for (std::size_t i = 0; i < ground().size(); ++i) {
    // Orbit of x: x together with every positive iterate image.
    Subset orb = Subset::singleton(static_cast<Point>(i));
    for (unsigned k = 1; k <= map().horizon(); ++k) orb |= map().iterate_image(k, Subset::singleton(static_cast<Point>(i)));
    const bool ok = grade == DensityGrade::dense ? dense(orb) : grade == DensityGrade::i_dense ? i_dense(orb) : star_dense(orb);
    if (ok) return true;
  }
  return false;
}

}  // namespace idyn
