#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "idyn/genopen.hpp"
#include "idyn/model.hpp"

/// Second, definition-literal implementation of the core queries, used only
/// for differential testing.  Sets are std::set<int>, the ideal is a list of
/// members, and nothing here calls the primary algorithms.
namespace idyn::oracle {

using Set = std::set<int>;

struct Space {
  int n = 0;
  std::vector<Set> opens;
  std::vector<Set> ideal;  ///< every member, extensionally
  std::vector<int> map;
};

/// Copies a model into oracle form (membership read bit by bit).
Space from_model(const Model& model);

Set local_function(const Space& s, const Set& a);

struct Density {
  bool dense = false;
  bool i_dense = false;
  bool star_dense = false;
  bool nowhere_dense = false;
};
Density density_status(const Space& s, const Set& a);

/// Kind-open sets by the defining containments.
std::vector<Set> kind_opens(const Space& s, OpenKind kind);

struct Transitivity {
  bool improper = false;  ///< graded query with X ∈ I; nothing else is set
  bool holds = false;
  std::optional<std::pair<Set, Set>> failing;
};
Transitivity check_transitive(const Space& s, OpenKind kind, bool graded);

struct NonWandering {
  bool improper = false;
  Set points;
};
NonWandering nonwandering_set(const Space& s, OpenKind kind, bool graded);

/// Bit encoding used only to compare against primary results.
Subset to_subset(const Set& s);
Set to_set(Subset s, int n);

}  // namespace idyn::oracle
