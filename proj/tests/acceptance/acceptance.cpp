// Acceptance checks, one PASS/FAIL line per criterion.
//
//   idyn_acceptance                 run all seven
//   idyn_acceptance --criterion 3   run one
//
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "differential.hpp"
#include "idyn/cli.hpp"
#include "idyn/corpus.hpp"
#include "idyn/enumerate.hpp"
#include "idyn/falsify.hpp"
#include "idyn/query.hpp"
#include "support.hpp"

using namespace idyn;
using Clock = std::chrono::steady_clock;
using testing::first_difference;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;  // printed under the verdict line

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
  void fail(const std::string& what) { require(false, what); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const CorpusEntry& entry(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("missing corpus entry " + std::string(name));
}

std::string answer(std::string_view name, Query q) {
  return evaluate(entry(name).model(), q).text;
}

Query check(std::string kind) {
  Query q;
  q.command = "check";
  q.op = std::move(kind);
  return q;
}
Query compute(std::string op, std::optional<std::string> set = {}, std::optional<std::string> point = {},
              std::optional<std::string> grade = {}) {
  Query q;
  q.command = "compute";
  q.op = std::move(op);
  q.set = std::move(set);
  q.point = std::move(point);
  q.grade = std::move(grade);
  return q;
}

// Printed example verdicts, each compared exactly against computation.
Outcome criterion1() {
  struct Verdict {
    std::string entry;
    Query query;
    std::string expected;
  };
  const std::vector<Verdict> verdicts{
      {"EX_4_0_1", check("i-transitive"), "true"},
      {"EX_4_1", check("transitive"), "true"},
      {"EX_4_1", check("i-transitive"), "false"},
      {"EX_5_1", compute("omega-i", {}, "a"), "true"},
      {"EX_5_2", compute("omega", {}, "a"), "true"},
      {"EX_5_2", compute("omega-i", {}, "a"), "false"},
      {"EX_5_6", compute("transitive-points", {}, "b", "i-dense"), "true"},
      {"REMARK_CE_1", compute("dense", "{a b c}"), "true"},
      {"REMARK_CE_1", compute("i-dense", "{a b c}"), "false"},
      {"REMARK_CE_1", compute("codense"), "true"},
      {"NCF_08_FINITE", check("semi-i-transitive"), "true"},
      {"NCF_08_FINITE", check("b-i-transitive"), "false"},
      {"NCF_10", check("pre-i-transitive"), "true"},
      {"NCF_10", check("b-i-transitive"), "false"},
      {"NCF_11", check("i-transitive"), "true"},
      {"NCF_11", check("semi-i-transitive"), "false"},
      {"NCF_09", check("i-transitive"), "true"},
      {"NCF_09", check("pre-i-transitive"), "false"},
  };
  Outcome o;
  const auto start = Clock::now();
  for (const auto& v : verdicts) {
    const std::string got = answer(v.entry, v.query);
    o.require(got == v.expected, v.entry + " " + v.query.describe() + ": expected " + v.expected + ", computed " + got);
  }
  const double s = seconds_since(start);
  o.require(s < 1.0, "runtime " + std::to_string(s) + " s < 1 s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::ostringstream out, err;
  o.require(run_cli({"paper"}, out, err) == 0, "paper exits with 0");
  const auto results = run_corpus();
  auto find = [&](std::string_view name, const std::string& query) -> const ClaimResult* {
    for (const auto& r : results) {
      if (r.entry == name && r.claim.query.describe() == query) return &r;
    }
    return nullptr;
  };
  struct Expect {
    std::string entry, query, computed;
  };
  for (const Expect& e : std::vector<Expect>{
           {"REMARK_CE_1", "compute local-function --set {a b c}", "{b}"},
           {"REMARK_CE_1", "compute star-closure --set {a b c}", "{a b c}"},
           {"NCF_09", "compute k-opens:pre", "[{} {a} {b} {a b} {a b c}]"},
       }) {
    const ClaimResult* r = find(e.entry, e.query);
    if (r == nullptr) {
      o.fail(e.entry + " " + e.query + ": no claim registered");
      continue;
    }
    o.require(r->computed == e.computed && r->status == ClaimStatus::registered_discrepancy,
              e.entry + " " + e.query + " = " + r->computed + " (" + std::string(to_string(r->status)) +
                  ", printed " + r->claim.printed_value + ")");
  }
  const Model ncf09 = entry("NCF_09").model();
  const auto& g = ncf09.ground();
  const auto pre = parse_family(g, answer("NCF_09", compute("k-opens:pre")));
  for (const char* s : {"{c}", "{a c}", "{b c}"}) {
    o.require(!pre.contains(parse_subset(g, s)), std::string(s) + " is not preopen on the NCF_09 space");
  }
  const auto mismatches = std::count_if(results.begin(), results.end(),
                                        [](const ClaimResult& r) { return r.status == ClaimStatus::mismatch; });
  o.require(mismatches == 0, std::to_string(mismatches) + " unregistered mismatches");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t exhaustive = 0, continuous = 0, bad = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ideals = enumerate_ideals(n);
    const auto maps = enumerate_selfmaps(n);
    for (const auto& t : enumerate_topologies(n)) {
      for (const auto& i : ideals) {
        for (const auto& f : maps) {
          const Model m(t, i, f);
          ++exhaustive;
          continuous += is_continuous(t, f).holds;
          if (const auto d = first_difference(m); d && bad++ < 3) o.fail(*d + " on " + compact_model(t, i, f));
        }
      }
    }
  }
  o.require(bad == 0, std::to_string(exhaustive) + " models with |X| <= 3 (" + std::to_string(continuous) +
                          " with continuous maps), " + std::to_string(bad) + " disagreements");

  std::mt19937_64 rng(20240601);
  const std::vector<std::vector<Topology>> tops{enumerate_topologies(4), enumerate_topologies(5)};
  std::size_t random_bad = 0;
  const int samples = 10000;
  for (int k = 0; k < samples; ++k) {
    const std::size_t n = 4 + rng() % 2;
    const auto& t = tops[n - 4][rng() % tops[n - 4].size()];
    const Subset support(static_cast<Subset::Bits>(rng() % (std::uint64_t{1} << n)));
    std::vector<Point> images(n);
    for (auto& p : images) p = static_cast<Point>(rng() % n);
    const Model m(t, power_ideal(t.ground(), support), SelfMap(t.ground(), images));
    if (const auto d = first_difference(m); d && random_bad++ < 3) {
      o.fail(*d + " on " + compact_model(m.topology(), m.ideal(), m.map()));
    }
  }
  o.require(random_bad == 0, std::to_string(samples) + " random models with |X| in {4, 5}, " +
                                 std::to_string(random_bad) + " disagreements");
  const double s = seconds_since(start);
  o.require(s < 60.0, "runtime " + std::to_string(s) + " s < 60 s");
  return o;
}

// Topologies by filtering every family of subsets for the axioms.
std::vector<std::uint64_t> brute_force_topologies(std::size_t n) {
  const unsigned subsets = 1U << n;
  const unsigned full = subsets - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!(fam & 1U) || !((fam >> full) & 1U)) continue;
    bool ok = true;
    for (unsigned a = 0; a < subsets && ok; ++a) {
      if (!((fam >> a) & 1U)) continue;
      for (unsigned b = 0; b < subsets && ok; ++b) {
        if (((fam >> b) & 1U) && (!((fam >> (a | b)) & 1U) || !((fam >> (a & b)) & 1U))) ok = false;
      }
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

Outcome criterion4() {
  Outcome o;
  const std::size_t expected[] = {1, 4, 29, 355};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::uint64_t> masks;
    for (const auto& t : enumerate_topologies(n)) masks.push_back(family_mask(t));
    std::sort(masks.begin(), masks.end());
    const auto brute = brute_force_topologies(n);
    o.require(masks == brute && masks.size() == expected[n - 1] && count_topologies(n) == expected[n - 1],
              "n=" + std::to_string(n) + ": " + std::to_string(masks.size()) + " enumerated, " +
                  std::to_string(brute.size()) + " by filter, expected " + std::to_string(expected[n - 1]));
  }
  const ModelSpace space{1, 3, false, false};
  const auto targets = select_targets(true, true);
  const auto one = format_suite_report(run_suite(space, targets, {1, 5}));
  for (unsigned w : {2U, 8U}) {
    o.require(one == format_suite_report(run_suite(space, targets, {w, 5})),
              "suite report with 1 and " + std::to_string(w) + " workers identical");
  }
  const auto pred = parse_predicate("transitive & !i_transitive");
  auto refs = [](const std::vector<MinedModel>& ms) {
    std::vector<InstanceRef> r;
    for (const auto& m : ms) r.push_back(m.at);
    return r;
  };
  const auto mined = refs(mine(space, pred, std::nullopt, 1));
  o.require(mined == refs(mine(space, pred, std::nullopt, 8)), "mining with 1 and 8 workers identical (" +
                                                                   std::to_string(mined.size()) + " models)");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::vector<std::string> required{
      "T4_1", "T4_7", "L3_1", "L3_2", "L3_3", "L3_4", "T4_2", "T4_4", "T4_6_1TO23", "T4_8_2",
      "T_IO", "DENSE_EQ_CC", "DENSITY_CHAIN", "KI_CHAIN", "I0_DEGENERATE"};
  for (const auto& id : required) {
    const auto* t = find_target(id);
    o.require(t != nullptr && t->status == TargetStatus::sound, id + " registered as sound");
  }
  const auto start = Clock::now();
  const auto report = run_suite({1, 3, false, false}, select_targets(true, false));
  for (const auto& tally : report.tallies) {
    o.require(tally.violations == 0, tally.id + ": " + std::to_string(tally.evaluated) + " evaluated, " +
                                         std::to_string(tally.hypothesis_held) + " with hypothesis, " +
                                         std::to_string(tally.violations) + " violations");
  }
  o.require(report.sound_clean(), std::to_string(report.instances_checked) + " instances, suite clean");
  const double s = seconds_since(start);
  o.require(s < 600.0, "runtime " + std::to_string(s) + " s < 600 s");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const ModelSpace space{1, 4, false, false};
  const auto targets = select_targets(true, true);
  const auto first = format_suite_report(run_suite(space, targets, {0, 5}));
  const auto second = format_suite_report(run_suite(space, targets, {1, 5}));
  o.require(first == second, "two runs byte-identical (" + std::to_string(first.size()) + " bytes)");
  for (const char* id : {"T4_3_CONV", "T4_5_FK", "T4_6_2TO1", "T4_6_3TO1"}) {
    const auto* t = find_target(id);
    o.require(t != nullptr && t->status == TargetStatus::suspect && first.find(id) != std::string::npos,
              std::string(id) + " reported");
  }
  std::ostringstream out, err;
  const int code = run_cli({"suite", "--size", "2", "--include-suspect"}, out, err);
  o.require(code == 0, "suite --include-suspect exits with 0 while sound targets hold");
  return o;
}

Outcome criterion7() {
  using testing::subsets;
  Outcome o;
  std::size_t failures = 0, spaces = 0;
  auto expect = [&](bool ok, const char* what, const Topology& t, const Ideal& i) {
    if (ok) return;
    if (failures++ < 5) o.fail(std::string(what) + " on " + compact_model(t, i, SelfMap::identity(t.ground())));
  };
  testing::for_each_space(4, [&](const Topology& t, const Ideal& ideal) {
    ++spaces;
    const auto& g = t.ground();
    const auto all = subsets(g);
    const Topology star = star_topology(t, ideal);
    expect(t.opens().subset_of(star.opens()), "tau within tau*", t, ideal);
    expect(is_compatible(t, ideal), "compatibility", t, ideal);
    expect(star_closure(t, ideal, {}).empty(), "Cl* of the empty set", t, ideal);
    Subset members_union;
    for (auto a : all) {
      if (ideal.contains(a)) members_union = members_union | a;
    }
    expect(ideal.contains(members_union), "union of all members", t, ideal);
    for (auto a : all) {
      expect(ideal.contains(a) == a.subset_of(members_union), "ideal equals the power set of its union", t, ideal);
      const Subset cs = star_closure(t, ideal, a);
      expect(a.subset_of(cs), "Cl* extensive", t, ideal);
      expect(star_closure(t, ideal, cs) == cs, "Cl* idempotent", t, ideal);
      expect(local_function(t, ideal, a).subset_of(closure(t, a)), "A* within Cl A", t, ideal);
      expect(psi(t, ideal, a) == g.complement(local_function(t, ideal, g.complement(a))), "psi identity", t, ideal);
      expect(interior(t, a) == g.complement(closure(t, g.complement(a))), "Int/Cl duality", t, ideal);
      for (auto b : all) {
        expect(star_closure(t, ideal, a | b) == (cs | star_closure(t, ideal, b)), "Cl* additive", t, ideal);
        expect(local_function(t, ideal, a | b) == (local_function(t, ideal, a) | local_function(t, ideal, b)),
               "local function additive", t, ideal);
      }
    }
  });
  // Every family closed under subsets and unions is one of the enumerated ideals.
  for (std::size_t n = 1; n <= 3; ++n) {
    const unsigned count = 1U << n;
    std::set<Subset::Bits> enumerated;
    for (const auto& i : enumerate_ideals(n)) enumerated.insert(i.support().bits());
    std::size_t found = 0;
    for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << count); fam += 2) {
      bool ideal = true;
      unsigned uni = 0;
      for (unsigned a = 0; a < count && ideal; ++a) {
        if (!((fam >> a) & 1U)) continue;
        uni |= a;
        for (unsigned b = 0; b < count; ++b) {
          if (((b & a) == b && !((fam >> b) & 1U)) || (((fam >> b) & 1U) && !((fam >> (a | b)) & 1U))) ideal = false;
        }
      }
      if (!ideal) continue;
      ++found;
      std::uint64_t power = 0;
      for (unsigned b = 0; b < count; ++b) power |= std::uint64_t{(b & uni) == b} << b;
      if (power != fam || !enumerated.count(uni)) {
        ++failures;
        o.fail("family " + std::to_string(fam) + " on " + std::to_string(n) + " points");
      }
    }
    o.require(found == enumerated.size(), "n=" + std::to_string(n) + ": " + std::to_string(found) +
                                              " ideals by filter, " + std::to_string(enumerated.size()) + " enumerated");
  }
  o.require(failures == 0, std::to_string(spaces) + " spaces with |X| <= 4, " + std::to_string(failures) + " failures");
  return o;
}

struct Criterion {
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"example verdicts reproduced exactly", criterion1},
    {"registered discrepancies detected", criterion2},
    {"oracle agrees with the primary algorithms", criterion3},
    {"enumeration counts and worker determinism", criterion4},
    {"sound targets hold for |X| <= 3", criterion5},
    {"suspect report reproducible for |X| <= 4", criterion6},
    {"algebraic properties", criterion7},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria", "idyn_acceptance"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "run only criterion N")->check(CLI::Range(1, 7));
  app.add_flag("-v,--verbose", verbose, "list every check, not only failures");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (int k = 1; k <= 7; ++k) {
    if (only != 0 && only != k) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = kCriteria[k - 1].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double ms = seconds_since(start) * 1000.0;
    std::printf("criterion %d %s  %s  (%.0f ms)\n", k, o.pass ? "PASS" : "FAIL", kCriteria[k - 1].title, ms);
    for (const auto& line : o.details) {
      if (verbose || !o.pass) std::printf("    %s\n", line.c_str());
    }
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
