#include "idyn/genopen.hpp"

namespace idyn {

std::string_view to_string(OpenKind kind) {
  switch (kind) {
    case OpenKind::open: return "open";
    case OpenKind::semi: return "semi";
    case OpenKind::pre: return "pre";
    case OpenKind::b: return "b";
    case OpenKind::beta: return "beta";
  }
  return "?";
}

std::optional<OpenKind> parse_open_kind(std::string_view text) {
  for (auto kind : kAllOpenKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

bool is_k_open(const Topology& t, OpenKind kind, Subset a) {
  switch (kind) {
    case OpenKind::open:
      return t.is_open(a);
    case OpenKind::semi:
      return a.subset_of(closure(t, interior(t, a)));
    case OpenKind::pre:
      return a.subset_of(interior(t, closure(t, a)));
    case OpenKind::b:
      return a.subset_of(closure(t, interior(t, a)) | interior(t, closure(t, a)));
    case OpenKind::beta:
      return a.subset_of(closure(t, interior(t, closure(t, a))));
  }
  return false;
}

SetFamily k_opens(const Topology& t, OpenKind kind) {
  if (kind == OpenKind::open) return t.opens();
  std::vector<Subset> out;
  for (auto a : power_set(t.ground())) {
    if (is_k_open(t, kind, a)) out.push_back(a);
  }
  return SetFamily(std::move(out));
}

Subset k_closure(const GroundSet& ground, const SetFamily& family, Subset a) {
  ground.require_fits(a);
  Subset out = ground.full();
  for (auto o : family) {
    const Subset closed = ground.complement(o);
    if (a.subset_of(closed)) out &= closed;
  }
  return out;
}

Subset k_closure(const Topology& t, OpenKind kind, Subset a) {
  return k_closure(t.ground(), k_opens(t, kind), a);
}

}  // namespace idyn
