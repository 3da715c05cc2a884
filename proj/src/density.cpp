#include "idyn/density.hpp"

#include <cassert>

namespace idyn {

DensityStatus density_status(const Topology& t, const Ideal& ideal, Subset a) {
  const Subset full = t.ground().full();
  const Subset cl = closure(t, a);
  const Subset star = local_function(t, ideal, a);
  DensityStatus s;
  s.dense = cl == full;
  s.i_dense = star == full;
  s.star_dense = (a | star) == full;
  s.nowhere_dense = interior(t, cl).empty();
#ifndef NDEBUG
  const DensityRoutes routes = density_routes(t, ideal, a);
  assert(routes.consistent());
  assert(routes.dense_by_closure == s.dense && routes.i_dense_by_local_function == s.i_dense &&
         routes.star_dense_by_closure == s.star_dense);
#endif
  return s;
}

DensityRoutes density_routes(const Topology& t, const Ideal& ideal, Subset a) {
  const GroundSet& x = t.ground();
  DensityRoutes r;
  r.dense_by_closure = closure(t, a) == x.full();
  r.dense_by_meeting_opens = true;
  r.i_dense_by_open_traces = true;
  for (auto o : t.opens()) {
    if (o.empty()) continue;
    if (!o.meets(a)) r.dense_by_meeting_opens = false;
    if (ideal.contains(o & a)) r.i_dense_by_open_traces = false;
  }
  r.i_dense_by_local_function = local_function(t, ideal, a) == x.full();
  r.i_dense_by_psi = psi(t, ideal, x.complement(a)).empty();
  r.star_dense_by_closure = star_closure(t, ideal, a) == x.full();
  r.star_dense_by_meeting_star_opens = true;
  const Topology star = star_topology(t, ideal);
  for (auto o : star.opens()) {
    if (!o.empty() && !o.meets(a)) {
      r.star_dense_by_meeting_star_opens = false;
      break;
    }
  }
  r.nowhere_dense = interior(t, closure(t, a)).empty();
  return r;
}

Verdict dense_iff_i_dense_scan(const Topology& t, const Ideal& ideal) {
  const Subset full = t.ground().full();
  for (auto a : power_set(t.ground())) {
    if (closure(t, a) == full && local_function(t, ideal, a) != full) {
      return {false, Witness{a, {}, {}, {}}};
    }
  }
  return {true, {}};
}

}  // namespace idyn
