#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idyn/facts.hpp"
#include "idyn/model.hpp"

namespace idyn {

enum class TargetStatus { sound, suspect };
std::string_view to_string(TargetStatus status);

/// What a target's predicates read.  Map-scoped targets ignore the ideal and
/// are evaluated once per (topology, map); ideal-scoped targets ignore the
/// map and are evaluated once per (topology, ideal).
enum class TargetScope { model, map, ideal };

/// A checkable statement: wherever `hypothesis` holds, `conclusion` must
/// return no witness.  A returned string describes a counterexample.
struct TheoremTarget {
  std::string id;
  std::string statement;
  TargetStatus status = TargetStatus::sound;
  TargetScope scope = TargetScope::model;
  std::function<bool(InstanceFacts&)> hypothesis;
  std::function<std::optional<std::string>(InstanceFacts&)> conclusion;
};

/// Every registered target, sound ones first, in a fixed order.
const std::vector<TheoremTarget>& theorem_registry();
std::vector<TheoremTarget> select_targets(bool include_sound, bool include_suspect);
const TheoremTarget* find_target(std::string_view id);

struct ModelSpace {
  std::size_t min_size = 1;
  std::size_t max_size = 3;
  bool continuous_only = false;
  bool proper_ideals_only = false;
};

/// Position of an instance in the canonical enumeration: by size, then
/// topology, then map, then ideal (the order the facts are memoized in).
struct InstanceRef {
  std::size_t size = 0;
  std::size_t topology = 0;
  std::size_t map = 0;
  std::size_t ideal = 0;
  friend auto operator<=>(const InstanceRef&, const InstanceRef&) = default;
};

struct Violation {
  InstanceRef at;
  std::string model;  ///< compact one-line rendering
  std::string target;
  std::string witness;
};

struct TargetTally {
  std::string id;
  TargetStatus status = TargetStatus::sound;
  std::uint64_t evaluated = 0;
  std::uint64_t hypothesis_held = 0;
  std::uint64_t violations = 0;
};

struct SuiteReport {
  std::uint64_t instances_checked = 0;
  std::vector<TargetTally> tallies;
  /// At most `max_witnesses_per_target` per target, canonical order.
  std::vector<Violation> violations;
  std::chrono::milliseconds runtime{0};
  bool sound_clean() const;
};

struct SuiteOptions {
  unsigned workers = 0;  ///< 0 = hardware concurrency
  std::size_t max_witnesses_per_target = 5;
};

/// Checks every target on every instance of `space`.  Work is split by
/// topology across workers and merged by instance index, so everything but
/// `runtime` is independent of the worker count.
SuiteReport run_suite(const ModelSpace& space, const std::vector<TheoremTarget>& targets,
                      const SuiteOptions& options = {});

/// Deterministic text report; the runtime line only when `timing`.
std::string format_suite_report(const SuiteReport& report, bool timing = false);

/// One conjunct of a mining predicate.
struct Literal {
  std::string flag;
  bool negated = false;
};

/// Names accepted by `parse_predicate`, `k_transitive:<kind>` and
/// `k_i_transitive:<kind>` standing for one entry per kind.
std::vector<std::string> predicate_flags();

/// Conjunction of flags separated by `&`, `∧`, `,` or `and`; each may be
/// negated by `!`, `~`, `¬` or `not`.  Throws UnknownFlag or Usage.
std::vector<Literal> parse_predicate(std::string_view text);

bool evaluate_flag(const Literal& literal, InstanceFacts& facts);

struct MinedModel {
  InstanceRef at;
  Model model;
};

/// Instances satisfying every literal, canonical order, at most `limit`
/// when given.
std::vector<MinedModel> mine(const ModelSpace& space, const std::vector<Literal>& predicate,
                             std::optional<std::size_t> limit = std::nullopt, unsigned workers = 0);

/// `opens=[...] ideal={...} map=a>b ...`
std::string compact_model(const Topology& t, const Ideal& ideal, const SelfMap& f);

}  // namespace idyn
