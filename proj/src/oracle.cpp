#include "idyn/oracle.hpp"

#include <algorithm>

namespace idyn::oracle {
namespace {

Set everything(const Space& s) {
  Set x;
  for (int i = 0; i < s.n; ++i) x.insert(i);
  return x;
}

bool included(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

bool in_ideal(const Space& s, const Set& a) { return std::find(s.ideal.begin(), s.ideal.end(), a) != s.ideal.end(); }

bool is_open(const Space& s, const Set& a) { return std::find(s.opens.begin(), s.opens.end(), a) != s.opens.end(); }

Set interior(const Space& s, const Set& a) {
  Set out;
  for (const auto& o : s.opens) {
    if (included(o, a)) out = unite(out, o);
  }
  return out;
}

// x ∈ Cl(A) iff every open set containing x meets A.
Set closure(const Space& s, const Set& a) {
  Set out;
  for (int x = 0; x < s.n; ++x) {
    bool all_meet = true;
    for (const auto& o : s.opens) {
      if (o.count(x) && intersect(o, a).empty()) all_meet = false;
    }
    if (all_meet) out.insert(x);
  }
  return out;
}

Set image(const Space& s, const Set& a) {
  Set out;
  for (int x : a) out.insert(s.map[x]);
  return out;
}

std::vector<Set> all_subsets(const Space& s) {
  std::vector<Set> out{Set{}};
  for (int x = 0; x < s.n; ++x) {
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) {
      Set with = out[i];
      with.insert(x);
      out.push_back(with);
    }
  }
  return out;
}

/// Canonical order: by the number whose binary digits are the members.
long weight(const Set& a) {
  long w = 0;
  for (int x : a) w += 1L << x;
  return w;
}

void canonical_sort(std::vector<Set>& family) {
  std::sort(family.begin(), family.end(), [](const Set& a, const Set& b) { return weight(a) < weight(b); });
}

/// Whether some positive iterate image of `u` passes `good`.  The image
/// sets f(U), f(f(U)), ... are followed until one repeats.
template <class Good>
bool some_iterate(const Space& s, const Set& u, Good good) {
  std::vector<Set> seen;
  Set cur = image(s, u);
  while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
    if (good(cur)) return true;
    seen.push_back(cur);
    cur = image(s, cur);
  }
  return false;
}

bool overlap_ok(const Space& s, const Set& overlap, bool graded) {
  return graded ? !in_ideal(s, overlap) : !overlap.empty();
}

}  // namespace

Space from_model(const Model& model) {
  Space s;
  s.n = static_cast<int>(model.ground().size());
  for (auto o : model.topology().opens()) s.opens.push_back(to_set(o, s.n));
  for (auto m : model.ideal().members()) s.ideal.push_back(to_set(m, s.n));
  for (int x = 0; x < s.n; ++x) s.map.push_back(model.map()(static_cast<Point>(x)));
  return s;
}

Set local_function(const Space& s, const Set& a) {
  Set out;
  for (int x = 0; x < s.n; ++x) {
    bool member = true;
    for (const auto& u : s.opens) {
      if (u.count(x) && in_ideal(s, intersect(u, a))) member = false;
    }
    if (member) out.insert(x);
  }
  return out;
}

Density density_status(const Space& s, const Set& a) {
  const Set x = everything(s);
  const Set star = local_function(s, a);
  Density d;
  d.dense = closure(s, a) == x;
  d.i_dense = star == x;
  d.star_dense = unite(a, star) == x;
  d.nowhere_dense = interior(s, closure(s, a)).empty();
  return d;
}

std::vector<Set> kind_opens(const Space& s, OpenKind kind) {
  std::vector<Set> out;
  for (const auto& a : all_subsets(s)) {
    bool keep = false;
    switch (kind) {
      case OpenKind::open: keep = is_open(s, a); break;
      case OpenKind::semi: keep = included(a, closure(s, interior(s, a))); break;
      case OpenKind::pre: keep = included(a, interior(s, closure(s, a))); break;
      case OpenKind::b:
        keep = included(a, unite(closure(s, interior(s, a)), interior(s, closure(s, a))));
        break;
      case OpenKind::beta: keep = included(a, closure(s, interior(s, closure(s, a)))); break;
    }
    if (keep) out.push_back(a);
  }
  canonical_sort(out);
  return out;
}

Transitivity check_transitive(const Space& s, OpenKind kind, bool graded) {
  Transitivity t;
  if (graded && in_ideal(s, everything(s))) {
    t.improper = true;
    return t;
  }
  const auto family = kind_opens(s, kind);
  for (const auto& u : family) {
    if (u.empty()) continue;
    for (const auto& v : family) {
      if (v.empty()) continue;
      const bool ok = some_iterate(s, u, [&](const Set& fu) { return overlap_ok(s, intersect(fu, v), graded); });
      if (!ok) {
        t.failing = std::pair{u, v};
        return t;
      }
    }
  }
  t.holds = true;
  return t;
}

NonWandering nonwandering_set(const Space& s, OpenKind kind, bool graded) {
  NonWandering w;
  if (graded && in_ideal(s, everything(s))) {
    w.improper = true;
    return w;
  }
  const auto family = kind_opens(s, kind);
  for (int x = 0; x < s.n; ++x) {
    bool returns = true;
    for (const auto& m : family) {
      if (!m.count(x)) continue;
      if (!some_iterate(s, m, [&](const Set& fm) { return overlap_ok(s, intersect(fm, m), graded); })) {
        returns = false;
      }
    }
    if (returns) w.points.insert(x);
  }
  return w;
}

Subset to_subset(const Set& s) {
  Subset::Bits bits = 0;
  for (int x : s) bits |= Subset::Bits{1} << x;
  return Subset(bits);
}

Set to_set(Subset s, int n) {
  Set out;
  for (int x = 0; x < n; ++x) {
    if ((s.bits() >> x) & 1U) out.insert(x);
  }
  return out;
}

}  // namespace idyn::oracle
