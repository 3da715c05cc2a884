#include "idyn/dynamics.hpp"

#include "idyn/density.hpp"

namespace idyn {

DynamicalSystem::DynamicalSystem(Model model, bool strict_continuity)
    : model_(std::move(model)), strict_(strict_continuity) {
  const Verdict v = is_continuous(model_.topology(), model_.map());
  continuous_ = v.holds;
  if (strict_ && !continuous_) {
    throw Error(ErrorCode::DiscontinuousMap,
                "map is not continuous: preimage of open " + model_.ground().format(v.witness->u) +
                    " is not open");
  }
}

std::string TransitivityKind::name() const {
  std::string out;
  if (base != OpenKind::open) {
    out += to_string(base);
    out += '-';
  }
  if (ideal_graded) out += "i-";
  out += "transitive";
  return out;
}

std::optional<TransitivityKind> TransitivityKind::parse(std::string_view name) {
  for (const auto& kind : all_transitivity_kinds()) {
    if (kind.name() == name) return kind;
  }
  return std::nullopt;
}

std::vector<TransitivityKind> all_transitivity_kinds() {
  std::vector<TransitivityKind> out;
  for (auto base : kAllOpenKinds) {
    out.push_back({base, false});
    out.push_back({base, true});
  }
  return out;
}

Orbit orbit(const DynamicalSystem& sys, Point x) {
  if (x >= sys.ground().size()) {
    throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(x) + " is outside the ground set");
  }
  Orbit o;
  Point current = x;
  while (!o.set.contains(current)) {
    o.sequence.push_back(current);
    o.set = o.set.with(current);
    current = sys.map()(current);
  }
  return o;
}

IterateHorizon iterate_horizon(const SelfMap& f) {
  IterateHorizon h;
  h.preperiod = f.preperiod();
  h.period = f.period();
  for (unsigned k = 1; k <= f.horizon(); ++k) h.iterates.emplace_back(f.ground(), f.iterate(k));
  return h;
}

namespace {

bool escapes(Subset overlap, Subset ideal_support) { return !overlap.subset_of(ideal_support); }

void require_proper(const DynamicalSystem& sys, bool graded) {
  if (graded && !sys.ideal().proper()) {
    throw Error(ErrorCode::ImproperIdeal, "ideal-graded query needs a proper ideal (X is a member)");
  }
}

}  // namespace

Verdict transitive_over(const SetFamily& family, const SelfMap& f, Subset ideal_support) {
  const unsigned h = f.horizon();
  std::vector<Subset> images(h);
  for (auto u : family) {
    if (u.empty()) continue;
    for (unsigned n = 1; n <= h; ++n) images[n - 1] = f.iterate_image(n, u);
    for (auto v : family) {
      if (v.empty()) continue;
      bool reached = false;
      for (unsigned n = 0; n < h && !reached; ++n) reached = escapes(images[n] & v, ideal_support);
      if (!reached) return {false, Witness{u, v, {}, std::pair{1U, h}}};
    }
  }
  return {true, {}};
}

Subset nonwandering_over(const SetFamily& family, const SelfMap& f, Subset ideal_support) {
  const unsigned h = f.horizon();
  Subset wandering;
  for (auto m : family) {
    if (m.empty()) continue;
    bool returns = false;
    for (unsigned n = 1; n <= h && !returns; ++n) returns = escapes(f.iterate_image(n, m) & m, ideal_support);
    if (!returns) wandering |= m;
  }
  return f.ground().complement(wandering);
}

Verdict check_transitive(const DynamicalSystem& sys, TransitivityKind kind) {
  require_proper(sys, kind.ideal_graded);
  const Subset support = kind.ideal_graded ? sys.ideal().support() : Subset{};
  return transitive_over(k_opens(sys.topology(), kind.base), sys.map(), support);
}

Subset nonwandering_set(const DynamicalSystem& sys, TransitivityKind kind) {
  require_proper(sys, kind.ideal_graded);
  const Subset support = kind.ideal_graded ? sys.ideal().support() : Subset{};
  return nonwandering_over(k_opens(sys.topology(), kind.base), sys.map(), support);
}

std::string_view to_string(DensityGrade grade) {
  switch (grade) {
    case DensityGrade::dense: return "dense";
    case DensityGrade::i_dense: return "i-dense";
    case DensityGrade::star_dense: return "star-dense";
  }
  return "?";
}

std::optional<DensityGrade> parse_density_grade(std::string_view text) {
  for (auto g : {DensityGrade::dense, DensityGrade::i_dense, DensityGrade::star_dense}) {
    if (to_string(g) == text) return g;
  }
  return std::nullopt;
}

Subset transitive_points(const DynamicalSystem& sys, DensityGrade grade) {
  require_proper(sys, grade != DensityGrade::dense);
  Subset out;
  for (std::size_t i = 0; i < sys.ground().size(); ++i) {
    const auto x = static_cast<Point>(i);
    const DensityStatus s = density_status(sys.topology(), sys.ideal(), orbit(sys, x).set);
    const bool ok = grade == DensityGrade::dense ? s.dense : grade == DensityGrade::i_dense ? s.i_dense : s.star_dense;
    if (ok) out = out.with(x);
  }
  return out;
}

bool is_invariant(const SelfMap& f, Subset a) { return f.image(a).subset_of(a); }

Subset forward_union(const DynamicalSystem& sys, Subset u, Direction direction) {
  sys.ground().require_fits(u);
  const SelfMap& f = sys.map();
  Subset out;
  for (unsigned n = 0; n <= f.horizon(); ++n) {
    out |= direction == Direction::forward ? f.iterate_image(n, u) : f.iterate_preimage(n, u);
  }
  return out;
}

}  // namespace idyn
