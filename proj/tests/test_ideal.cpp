#include "doctest.h"
#include "idyn/density.hpp"
#include "idyn/ideal.hpp"
#include "support.hpp"

using namespace idyn;
using namespace testing;

TEST_CASE("ideals from generators are power sets of the union") {
  const auto g = GroundSet::standard(4);
  const auto i = ideal_from_generators(SetFamily{S(g, "{a c}")}, g);
  CHECK(i.members() == F(g, "{} {a} {c} {a c}"));
  CHECK(i.proper());
  CHECK(ideal_from_generators(SetFamily{}, g).members() == F(g, "{}"));
  CHECK(ideal_from_generators(SetFamily{}, g).trivial());
  const auto g2 = GroundSet::standard(2);
  const auto full = ideal_from_generators(F(g2, "{a} {b}"), g2);
  CHECK(full.members() == power_set(g2));
  CHECK_FALSE(full.proper());
}

TEST_CASE("local function on the codense counterexample") {
  const auto m = M(kRemark);
  const auto& g = m.ground();
  const Subset a = S(g, "{a b c}");
  CHECK(local_function(m.topology(), m.ideal(), a) == S(g, "{b}"));
  const auto ops = star_operators(m.topology(), m.ideal(), a);
  CHECK(ops.cl_star == S(g, "{a b c}"));
  CHECK(star_closure(m.topology(), m.ideal(), a) == ops.cl_star);
  const auto k = classify_ideal(m.topology(), m.ideal());
  CHECK(k.codense);
  CHECK(k.hayashi_samuel);
  CHECK_FALSE(k.completely_codense);
  CHECK(k.compatible);
}

TEST_CASE("local function, psi and I-opens on the four point transitive example") {
  const auto m = M(kEx41);
  const auto& g = m.ground();
  CHECK(local_function(m.topology(), m.ideal(), S(g, "{a}")) == Subset{});
  CHECK(psi(m.topology(), m.ideal(), S(g, "{b d}")) == g.full());
  // A* never contains a or c and Int({b d}) is empty.
  CHECK(i_opens(m.topology(), m.ideal()) == F(g, "{}"));
  CHECK_FALSE(classify_ideal(m.topology(), m.ideal()).codense);
}

TEST_CASE("star topology") {
  const auto m = M(kEx401);
  const auto& g = m.ground();
  CHECK(star_topology(m.topology(), m.ideal()).opens() == F(g, "{} {a} {c} {a c} {a b c} {a c d} {a b c d}"));
  const auto t = m.topology();
  CHECK(star_topology(t, trivial_ideal(g)) == t);
  CHECK(star_topology(t, power_ideal(g, g.full())) == discrete_topology(g));
}

TEST_CASE("pushforward and pullback") {
  const auto g = GroundSet::standard(4);
  const SelfMap swap(g, {2, 1, 0, 3});
  CHECK(pushforward_ideal(swap, power_ideal(g, S(g, "{a c}"))).support() == S(g, "{a c}"));
  CHECK(pushforward_ideal(swap, trivial_ideal(g)).trivial());
  CHECK(pushforward_ideal(SelfMap::constant(g, 0), power_ideal(g, S(g, "{b d}"))).support() == S(g, "{a}"));
  CHECK(pullback_ideal(swap, power_ideal(g, S(g, "{d}"))).support() == S(g, "{d}"));
  CHECK(pullback_ideal(swap, trivial_ideal(g)).trivial());
  CHECK_FALSE(pullback_ideal(SelfMap::constant(g, 0), power_ideal(g, S(g, "{a}"))).proper());
}

TEST_CASE("density of the codense counterexample and the two point orbit") {
  const auto m = M(kRemark);
  const auto d = density_status(m.topology(), m.ideal(), S(m.ground(), "{a b c}"));
  CHECK(d.dense);
  CHECK_FALSE(d.i_dense);
  CHECK_FALSE(d.star_dense);
  const auto scan = dense_iff_i_dense_scan(m.topology(), m.ideal());
  CHECK_FALSE(scan.holds);
  // {a} is dense since every nonempty open contains a, and {a}* = ∅.
  CHECK(scan.witness->u == S(m.ground(), "{a}"));
  const auto m56 = M("points: a b\nopens: {a}\nideal: {b}\nmap: a>a b>a\n");
  CHECK(density_status(m56.topology(), m56.ideal(), m56.ground().full()).i_dense);
}

TEST_CASE("dense-scan with the minimal ideal always holds") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n)) CHECK(dense_iff_i_dense_scan(t, trivial_ideal(t.ground())).holds);
  }
  const auto g = GroundSet::standard(3);
  CHECK(dense_iff_i_dense_scan(discrete_topology(g), trivial_ideal(g)).holds);
}

TEST_CASE("local function algebra over every space up to three points") {
  for_each_space(3, [](const Topology& t, const Ideal& ideal) {
    const auto& g = t.ground();
    const auto members = ideal.members();
    // Finite ideals: power set of the union, compatible, closed under the
    // (necessarily finite) union of any subfamily.
    std::vector<Subset> below;
    for (auto s : subsets(g)) {
      if (s.subset_of(members.union_all())) below.push_back(s);
    }
    CHECK(members == SetFamily(below));
    for (auto x : members) {
      for (auto y : members) CHECK(members.contains(x | y));
    }
    CHECK(is_compatible(t, ideal));
    const auto star = star_topology(t, ideal);
    CHECK(t.opens().subset_of(star.opens()));
    for (auto a : subsets(g)) {
      const Subset la = local_function(t, ideal, a);
      CHECK(la.subset_of(closure(t, a)));
      CHECK(psi(t, ideal, a) == g.complement(local_function(t, ideal, g.complement(a))));
      const Subset cs = star_closure(t, ideal, a);
      CHECK(a.subset_of(cs));
      CHECK(star_closure(t, ideal, cs) == cs);
      CHECK(cs == closure(star, a));
      CHECK(star.is_closed(a) == (cs == a));
      const auto d = density_status(t, ideal, a);
      CHECK(density_routes(t, ideal, a).consistent());
      if (d.i_dense) CHECK(d.star_dense);
      if (d.star_dense) CHECK(d.dense);
      if (d.nowhere_dense) CHECK_FALSE(d.dense);
      if (ideal.trivial()) {
        CHECK(la == closure(t, a));
        CHECK(d.dense == d.i_dense);
        CHECK(d.dense == d.star_dense);
      }
      for (auto b : subsets(g)) {
        CHECK(local_function(t, ideal, a | b) == (la | local_function(t, ideal, b)));
        CHECK(star_closure(t, ideal, a | b) == (cs | star_closure(t, ideal, b)));
        if (a.subset_of(b)) CHECK(la.subset_of(local_function(t, ideal, b)));
      }
    }
    CHECK(star_closure(t, ideal, Subset{}) == Subset{});
    const auto k = classify_ideal(t, ideal);
    CHECK(k.hayashi_samuel == k.codense);
    if (k.completely_codense) CHECK(k.codense);
    CHECK(dense_iff_i_dense_scan(t, ideal).holds == k.completely_codense);
  });
}
