#pragma once

#include <string>

#include "idyn/ideal.hpp"
#include "idyn/selfmap.hpp"
#include "idyn/topology.hpp"

namespace idyn {

/// Ground set, topology, ideal and self-map: the unit of checking,
/// enumeration and serialization.
class Model {
 public:
  /// Throws GroundMismatch unless all parts share `topology.ground()`.
  Model(Topology topology, Ideal ideal, SelfMap map, std::string name = {});

  const GroundSet& ground() const noexcept { return topology_.ground(); }
  const Topology& topology() const noexcept { return topology_; }
  const Ideal& ideal() const noexcept { return ideal_; }
  const SelfMap& map() const noexcept { return map_; }
  const std::string& name() const noexcept { return name_; }

  /// Same structure; the name is ignored.
  bool same_structure(const Model& other) const {
    return topology_ == other.topology_ && ideal_ == other.ideal_ && map_ == other.map_;
  }

  friend bool operator==(const Model& a, const Model& b) {
    return a.same_structure(b) && a.name_ == b.name_;
  }

 private:
  Topology topology_;
  Ideal ideal_;
  SelfMap map_;
  std::string name_;
};

}  // namespace idyn
