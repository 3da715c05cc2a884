#include "idyn/falsify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "idyn/enumerate.hpp"

namespace idyn {
namespace {

struct WorkItem {
  std::size_t size;
  std::size_t topology;
};

unsigned worker_count(unsigned requested, std::size_t items) {
  unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(items, 1)));
}

/// Runs `fn(item_index)` for every item on a pool; results are stored by
/// index, so the caller merges them in canonical order.
template <class Fn>
void for_each_item(std::size_t items, unsigned workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next++; i < items; i = next++) fn(i);
  };
  if (workers <= 1) {
    body();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
}

/// Enumerated topologies per size, shared by every work item.
struct Enumeration {
  std::map<std::size_t, std::vector<Topology>> topologies;
  std::map<std::size_t, std::vector<Ideal>> ideals;
  std::vector<WorkItem> items;

  explicit Enumeration(const ModelSpace& space) {
    if (space.min_size < 1 || space.max_size > kMaxEnumerationSize || space.min_size > space.max_size) {
      throw Error(ErrorCode::SizeTooLarge, "model space sizes must satisfy 1 <= min <= max <= 5");
    }
    for (std::size_t n = space.min_size; n <= space.max_size; ++n) {
      topologies.emplace(n, enumerate_topologies(n));
      ideals.emplace(n, enumerate_ideals(n, space.proper_ideals_only));
      for (std::size_t t = 0; t < topologies.at(n).size(); ++t) items.push_back({n, t});
    }
  }
};

/// Visits every instance of one topology in canonical order.
/// `fn(ref, InstanceFacts&, first_ideal, first_map)`.
template <class Fn>
void visit_topology(const Enumeration& e, const ModelSpace& space, const WorkItem& item, Fn&& fn) {
  TopologyFacts top(e.topologies.at(item.size)[item.topology]);
  const auto& ideals = e.ideals.at(item.size);
  const auto maps = enumerate_selfmaps(item.size, &top.topology(), space.continuous_only);
  for (std::size_t mi = 0; mi < maps.size(); ++mi) {
    MapFacts plain(top, maps[mi]);
    for (std::size_t ii = 0; ii < ideals.size(); ++ii) {
      InstanceFacts facts(plain, ideals[ii]);
      const InstanceRef ref{item.size, item.topology, mi, ii};
      if (!fn(ref, facts, ii == 0, mi == 0)) return;
    }
  }
}

struct ItemResult {
  std::uint64_t instances = 0;
  std::vector<TargetTally> tallies;
  std::vector<Violation> violations;
};

}  // namespace

bool SuiteReport::sound_clean() const {
  return std::all_of(tallies.begin(), tallies.end(),
                     [](const TargetTally& t) { return t.status != TargetStatus::sound || t.violations == 0; });
}

std::string compact_model(const Topology& t, const Ideal& ideal, const SelfMap& f) {
  const auto& g = t.ground();
  std::string out = "opens=" + format_family(g, t.opens()) + " ideal=" + g.format(ideal.support()) + " map=";
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (p != 0) out += ' ';
    out += g.label(static_cast<Point>(p)) + ">" + g.label(f(static_cast<Point>(p)));
  }
  return out;
}

SuiteReport run_suite(const ModelSpace& space, const std::vector<TheoremTarget>& targets,
                      const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Enumeration e(space);
  std::vector<ItemResult> results(e.items.size());

  for_each_item(e.items.size(), worker_count(options.workers, e.items.size()), [&](std::size_t i) {
    ItemResult& res = results[i];
    res.tallies.resize(targets.size());
    visit_topology(e, space, e.items[i], [&](const InstanceRef& ref, InstanceFacts& facts, bool first_ideal,
                                             bool first_map) {
      ++res.instances;
      for (std::size_t k = 0; k < targets.size(); ++k) {
        const auto& target = targets[k];
        if (target.scope == TargetScope::map && !first_ideal) continue;
        if (target.scope == TargetScope::ideal && !first_map) continue;
        auto& tally = res.tallies[k];
        ++tally.evaluated;
        if (!target.hypothesis(facts)) continue;
        ++tally.hypothesis_held;
        if (auto witness = target.conclusion(facts)) {
          if (tally.violations++ < options.max_witnesses_per_target) {
            res.violations.push_back({ref, compact_model(facts.top().topology(), facts.ideal(), facts.map()),
                                      target.id, *witness});
          }
        }
      }
      return true;
    });
  });

  SuiteReport report;
  for (const auto& target : targets) report.tallies.push_back({target.id, target.status, 0, 0, 0});
  std::map<std::string, std::size_t> kept;
  for (const auto& res : results) {
    report.instances_checked += res.instances;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      report.tallies[k].evaluated += res.tallies[k].evaluated;
      report.tallies[k].hypothesis_held += res.tallies[k].hypothesis_held;
      report.tallies[k].violations += res.tallies[k].violations;
    }
    // Within one item violations are already in instance order; across
    // items the result vector is in canonical item order.
    for (const auto& v : res.violations) {
      if (kept[v.target]++ < options.max_witnesses_per_target) report.violations.push_back(v);
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(), [&](const Violation& a, const Violation& b) {
    auto index = [&](const std::string& id) {
      return std::find_if(targets.begin(), targets.end(), [&](const TheoremTarget& t) { return t.id == id; }) -
             targets.begin();
    };
    return std::pair(index(a.target), a.at) < std::pair(index(b.target), b.at);
  });
  report.runtime =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::string format_suite_report(const SuiteReport& report, bool timing) {
  std::ostringstream out;
  out << "instances checked: " << report.instances_checked << "\n";
  out << "target           status   evaluated  hypothesis  violations\n";
  for (const auto& t : report.tallies) {
    out << t.id;
    for (std::size_t i = t.id.size(); i < 17; ++i) out << ' ';
    std::string status(to_string(t.status));
    out << status << std::string(9 - status.size(), ' ');
    const std::string e = std::to_string(t.evaluated), h = std::to_string(t.hypothesis_held),
                      v = std::to_string(t.violations);
    out << std::string(9 > e.size() ? 9 - e.size() : 0, ' ') << e << std::string(12 > h.size() ? 12 - h.size() : 0, ' ')
        << h << std::string(12 > v.size() ? 12 - v.size() : 0, ' ') << v << "\n";
  }
  for (const auto& v : report.violations) {
    out << v.target << " n=" << v.at.size << " #" << v.at.topology << "/" << v.at.map << "/" << v.at.ideal << " "
        << v.model << " : " << v.witness << "\n";
  }
  out << (report.sound_clean() ? "sound targets: no violations\n" : "sound targets: VIOLATED\n");
  if (timing) out << "runtime: " << report.runtime.count() << " ms\n";
  return out.str();
}

}  // namespace idyn
