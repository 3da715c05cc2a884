#pragma once

#include <string>
#include <vector>

#include "idyn/enumerate.hpp"
#include "idyn/model_file.hpp"

namespace testing {

inline idyn::Subset S(const idyn::GroundSet& g, const std::string& text) { return idyn::parse_subset(g, text); }

inline idyn::SetFamily F(const idyn::GroundSet& g, const std::string& text) { return idyn::parse_family(g, text); }

inline idyn::Topology T(const idyn::GroundSet& g, const std::string& opens) {
  auto family = F(g, opens);
  std::vector<idyn::Subset> members(family.begin(), family.end());
  members.push_back({});
  members.push_back(g.full());
  return idyn::validate_topology(idyn::SetFamily(members), g);
}

inline idyn::Model M(const std::string& text) { return idyn::parse_model(text); }

inline const char* kEx41 = "points: a b c d\nopens: {a} {c} {a c} {a c d}\nideal: {a} {c}\nmap: a>c b>b c>a d>d\n";
inline const char* kEx401 = "points: a b c d\nopens: {a} {c} {a c} {a c d}\nideal: {d}\nmap: a>c b>b c>a d>d\n";
inline const char* kRemark = "points: a b c d\nopens: {a c d}\nideal: {a} {c}\n";
inline const char* kSwap = "points: a b c\nopens: {a} {b} {a b}\nmap: a>b b>a c>c\n";

/// Calls fn(topology, ideal, map) for every instance with 1 <= |X| <= n.
template <class Fn>
void for_each_instance(std::size_t n, Fn&& fn) {
  for (std::size_t k = 1; k <= n; ++k) {
    const auto ideals = idyn::enumerate_ideals(k);
    const auto maps = idyn::enumerate_selfmaps(k);
    for (const auto& t : idyn::enumerate_topologies(k)) {
      for (const auto& i : ideals) {
        for (const auto& f : maps) fn(t, i, f);
      }
    }
  }
}

/// Calls fn(topology, ideal) for every pair with 1 <= |X| <= n.
template <class Fn>
void for_each_space(std::size_t n, Fn&& fn) {
  for (std::size_t k = 1; k <= n; ++k) {
    const auto ideals = idyn::enumerate_ideals(k);
    for (const auto& t : idyn::enumerate_topologies(k)) {
      for (const auto& i : ideals) fn(t, i);
    }
  }
}

inline std::vector<idyn::Subset> subsets(const idyn::GroundSet& g) {
  std::vector<idyn::Subset> out;
  for (idyn::Subset::Bits b = 0; b <= g.full().bits(); ++b) out.emplace_back(b);
  return out;
}

}  // namespace testing
