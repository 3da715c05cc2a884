#include "doctest.h"
#include "idyn/genopen.hpp"
#include "support.hpp"

using namespace idyn;
using namespace testing;

TEST_CASE("semi-open sets of the four point space") {
  const auto g = GroundSet::standard(4);
  const auto t = T(g, "{a} {c} {a c} {a c d}");
  const auto so = k_opens(t, OpenKind::semi);
  CHECK(so == F(g, "{} {a b c d} {a} {c} {a c} {a b} {a d} {b c} {c d} {a b c} {a b d} {a c d} {b c d}"));
  CHECK(so.size() == 13);
  CHECK(k_opens(t, OpenKind::open) == t.opens());
  const Subset scl = k_closure(t, OpenKind::semi, S(g, "{a}"));
  CHECK(S(g, "{a}").subset_of(scl));
  // {b c d} is semi-open, so {a} is already semi-closed.
  CHECK(scl == S(g, "{a}"));
  CHECK(k_closure(t, OpenKind::semi, S(g, "{a c}")) == g.full());
}

TEST_CASE("generalized opens on indiscrete and discrete spaces") {
  const auto g = GroundSet::standard(2);
  const auto ind = indiscrete_topology(g);
  CHECK(k_opens(ind, OpenKind::b) == power_set(g));
  CHECK(k_opens(ind, OpenKind::semi) == F(g, "{} {a b}"));
  const auto g3 = GroundSet::standard(3);
  const auto d = discrete_topology(g3);
  for (auto kind : kAllOpenKinds) {
    CHECK(k_opens(d, kind) == power_set(g3));
    for (auto a : subsets(g3)) CHECK(k_closure(d, kind, a) == a);
  }
}

TEST_CASE("preopen and b-open sets of the three point swap space") {
  const auto g = GroundSet::standard(3);
  const auto t = T(g, "{a} {b} {a b}");
  CHECK(k_opens(t, OpenKind::pre) == t.opens());
  CHECK(k_opens(t, OpenKind::b) == F(g, "{} {a} {b} {a b} {a c} {b c} {a b c}"));
  CHECK(k_opens(t, OpenKind::semi) == k_opens(t, OpenKind::b));
}

TEST_CASE("inclusion chains and kind closures on every topology up to four points") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      const auto& g = t.ground();
      const auto so = k_opens(t, OpenKind::semi), po = k_opens(t, OpenKind::pre);
      const auto bo = k_opens(t, OpenKind::b), beta = k_opens(t, OpenKind::beta);
      CHECK(t.opens().subset_of(so));
      CHECK(so.subset_of(bo));
      CHECK(t.opens().subset_of(po));
      CHECK(po.subset_of(bo));
      CHECK(bo.subset_of(beta));
      for (auto kind : kAllOpenKinds) {
        for (auto a : subsets(g)) {
          const Subset kcl = k_closure(t, kind, a);
          CHECK(a.subset_of(kcl));
          CHECK(k_closure(t, kind, kcl) == kcl);
          CHECK(kcl.subset_of(closure(t, a)));
          if (kind == OpenKind::open) CHECK(kcl == closure(t, a));
        }
        // Re-check every member pointwise against its defining containment.
        for (auto a : k_opens(t, kind)) {
          const Subset cl = closure(t, a), in = interior(t, a);
          switch (kind) {
            case OpenKind::open: CHECK(t.is_open(a)); break;
            case OpenKind::semi: CHECK(a.subset_of(closure(t, in))); break;
            case OpenKind::pre: CHECK(a.subset_of(interior(t, cl))); break;
            case OpenKind::b: CHECK(a.subset_of(closure(t, in) | interior(t, cl))); break;
            case OpenKind::beta: CHECK(a.subset_of(closure(t, interior(t, cl)))); break;
          }
        }
      }
    }
  }
}

TEST_CASE("every nonempty semi-open set contains a nonempty open set; b- and beta-open ones a nonempty preopen set") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      const auto po = k_opens(t, OpenKind::pre);
      for (auto a : k_opens(t, OpenKind::semi)) {
        if (!a.empty()) CHECK_FALSE(interior(t, a).empty());
      }
      for (auto a : k_opens(t, OpenKind::beta)) {
        if (a.empty()) continue;
        const Subset inner = a & interior(t, closure(t, a));
        CHECK_FALSE(inner.empty());
        CHECK(po.contains(inner));
      }
    }
  }
}

TEST_CASE("open kind names") {
  for (auto kind : kAllOpenKinds) CHECK(parse_open_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_open_kind("alpha").has_value());
}
