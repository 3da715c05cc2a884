#include <algorithm>

#include "doctest.h"
#include "idyn/corpus.hpp"
#include "idyn/falsify.hpp"
#include "support.hpp"

using namespace idyn;
using namespace testing;

namespace {

const Model& corpus_model(std::string_view name) {
  static std::vector<std::pair<std::string, Model>> cache;
  for (const auto& [n, m] : cache) {
    if (n == name) return m;
  }
  for (const auto& e : corpus()) {
    if (e.name == name) return cache.emplace_back(e.name, e.model()).second;
  }
  throw std::runtime_error("no corpus entry " + std::string(name));
}

}  // namespace

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_selfmaps(2).size() == 4);
  CHECK(enumerate_selfmaps(3).size() == 27);
  CHECK(enumerate_ideals(3).size() == 8);
  CHECK(enumerate_ideals(3, true).size() == 7);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = GroundSet::standard(n);
    const auto d = discrete_topology(g), i = indiscrete_topology(g);
    const std::size_t all = enumerate_selfmaps(n).size();
    CHECK(enumerate_selfmaps(n, &d, true).size() == all);
    CHECK(enumerate_selfmaps(n, &i, true).size() == all);
  }
  const auto g = GroundSet::standard(2);
  const auto sierpinski = T(g, "{a}");
  // a>b b>a pulls {a} back to {b}.
  CHECK(enumerate_selfmaps(2, &sierpinski, true).size() == 3);
}

TEST_CASE("sound targets hold on every instance up to three points") {
  const auto report = run_suite({1, 3, false, false}, select_targets(true, false), {1, 5});
  CHECK(report.instances_checked == 2 + 64 + 29 * 27 * 8);
  CHECK(report.violations.empty());
  CHECK(report.sound_clean());
  for (const auto& tally : report.tallies) {
    CAPTURE(tally.id);
    CHECK(tally.evaluated > 0);
    CHECK(tally.violations == 0);
  }
}

TEST_CASE("suite reports do not depend on the worker count") {
  const ModelSpace space{1, 3, false, false};
  const auto targets = select_targets(true, true);
  const auto one = format_suite_report(run_suite(space, targets, {1, 3}));
  const auto four = format_suite_report(run_suite(space, targets, {4, 3}));
  CHECK(one == four);
  CHECK(one.find("runtime") == std::string::npos);
}

TEST_CASE("suspect converse of the ideal-graded orbit statement fails on two points") {
  const auto* target = find_target("T4_3_CONV");
  REQUIRE(target != nullptr);
  CHECK(target->status == TargetStatus::suspect);
  const auto report = run_suite({2, 2, false, false}, {*target}, {1, 5});
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations.front().target == "T4_3_CONV");
  CHECK(report.sound_clean());
}

TEST_CASE("the I-transitive example satisfies the implication vacuously") {
  const auto* t47 = find_target("T4_7");
  REQUIRE(t47 != nullptr);
  const Model& m = corpus_model("EX_4_1");
  const TopologyFacts tf(m.topology());
  MapFacts mf(tf, m.map());
  InstanceFacts facts(mf, m.ideal());
  CHECK_FALSE(t47->hypothesis(facts));
}

TEST_CASE("instances are ordered canonically") {
  CHECK(InstanceRef{3, 0, 0, 5} < InstanceRef{3, 0, 1, 0});
  CHECK(InstanceRef{2, 9, 9, 9} < InstanceRef{3, 0, 0, 0});
  const auto found = mine({1, 2, false, false}, parse_predicate("transitive"));
  CHECK(std::is_sorted(found.begin(), found.end(),
                       [](const MinedModel& a, const MinedModel& b) { return a.at < b.at; }));
  const auto first = mine({1, 2, false, false}, parse_predicate("transitive"), 3);
  REQUIRE(first.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(first[k].at == found[k].at);
}

TEST_CASE("predicate parsing") {
  const auto p = parse_predicate("transitive & !i_transitive");
  REQUIRE(p.size() == 2);
  CHECK(p[0].flag == "transitive");
  CHECK_FALSE(p[0].negated);
  CHECK(p[1].flag == "i_transitive");
  CHECK(p[1].negated);
  CHECK(parse_predicate("semi-i-transitive ∧ ¬ b_i_transitive").size() == 2);
  CHECK(parse_predicate("k_i_transitive:pre, not codense")[0].flag == "k_i_transitive:pre");
  try {
    parse_predicate("transitive & wobbly");
    FAIL("unknown flag accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFlag);
  }
  CHECK_THROWS_AS(parse_predicate("transitive & & open_map"), Error);
  CHECK_THROWS_AS(parse_predicate(""), Error);
  for (const auto& f : predicate_flags()) {
    if (f.find('<') == std::string::npos) CHECK_NOTHROW(parse_predicate(f));
  }
}

TEST_CASE("mining the transitive but not I-transitive models on four points") {
  const auto found = mine({4, 4, false, true}, parse_predicate("transitive & !i_transitive"));
  const Model& ex = corpus_model("EX_4_1");
  CHECK(std::any_of(found.begin(), found.end(), [&](const MinedModel& m) { return m.model.same_structure(ex); }));
  for (std::size_t k = 0; k < std::min<std::size_t>(found.size(), 50); ++k) {
    const DynamicalSystem sys(found[k].model);
    CHECK(check_transitive(sys, {OpenKind::open, false}).holds);
    CHECK_FALSE(check_transitive(sys, {OpenKind::open, true}).holds);
  }
}

TEST_CASE("empty mining results") {
  // Ideal-graded transitivity over a proper ideal already forces codensity.
  CHECK(mine({1, 3, false, false}, parse_predicate("i_transitive & !codense")).empty());
  CHECK(mine({1, 3, false, false}, parse_predicate("pre_i_transitive & !b_i_transitive")).empty());
  CHECK(mine({1, 3, false, false}, parse_predicate("i_transitive & !semi_i_transitive")).empty());
  CHECK_FALSE(mine({1, 3, false, false}, parse_predicate("semi_i_transitive & !b_i_transitive")).empty());
}

TEST_CASE("compact model rendering") {
  const Model& ex = corpus_model("EX_4_1");
  CHECK(compact_model(ex.topology(), ex.ideal(), ex.map()) ==
        "opens=[{} {a} {c} {a c} {a c d} {a b c d}] ideal={a c} map=a>c b>b c>a d>d");
}
