#pragma once

#include <optional>
#include <string>

#include "idyn/density.hpp"
#include "idyn/dynamics.hpp"
#include "idyn/model_file.hpp"
#include "idyn/oracle.hpp"

namespace testing {

/// First query on which the oracle and the primary algorithms disagree.
inline std::optional<std::string> first_difference(const idyn::Model& m) {
  using namespace idyn;
  const auto s = oracle::from_model(m);
  const auto& g = m.ground();
  const auto& t = m.topology();
  const auto& ideal = m.ideal();
  const int n = static_cast<int>(g.size());
  for (Subset::Bits bits = 0; bits <= g.full().bits(); ++bits) {
    const Subset a(bits);
    const auto set = oracle::to_set(a, n);
    if (oracle::to_subset(oracle::local_function(s, set)) != local_function(t, ideal, a)) {
      return "local function of " + g.format(a);
    }
    const auto od = oracle::density_status(s, set);
    const DensityStatus pd = density_status(t, ideal, a);
    if (od.dense != pd.dense || od.i_dense != pd.i_dense || od.star_dense != pd.star_dense ||
        od.nowhere_dense != pd.nowhere_dense) {
      return "density of " + g.format(a);
    }
  }
  const DynamicalSystem sys(m);
  for (auto kind : kAllOpenKinds) {
    const std::string name(to_string(kind));
    std::vector<Subset> opens;
    for (const auto& o : oracle::kind_opens(s, kind)) opens.push_back(oracle::to_subset(o));
    if (SetFamily(opens) != k_opens(t, kind)) return name + " opens";
    for (bool graded : {false, true}) {
      const auto ot = oracle::check_transitive(s, kind, graded);
      const auto on = oracle::nonwandering_set(s, kind, graded);
      const std::string label = name + (graded ? " ideal-graded" : "");
      if (graded && !ideal.proper()) {
        if (!ot.improper || !on.improper) return label + ": improper ideal not recognised";
        continue;
      }
      if (ot.improper || on.improper) return label + ": proper ideal reported improper";
      if (ot.holds != check_transitive(sys, {kind, graded}).holds) return label + " transitivity";
      if (oracle::to_subset(on.points) != nonwandering_set(sys, {kind, graded})) return label + " non-wandering set";
    }
  }
  return std::nullopt;
}

}  // namespace testing
