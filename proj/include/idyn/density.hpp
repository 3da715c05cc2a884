#pragma once

#include "idyn/ideal.hpp"
#include "idyn/verdict.hpp"

namespace idyn {

struct DensityStatus {
  bool dense = false;          ///< Cl(A) = X
  bool i_dense = false;        ///< A* = X
  bool star_dense = false;     ///< Cl*(A) = X
  bool nowhere_dense = false;  ///< Int(Cl(A)) = ∅

  friend bool operator==(const DensityStatus&, const DensityStatus&) = default;
};

DensityStatus density_status(const Topology& t, const Ideal& ideal, Subset a);

/// Every equivalent formulation of each predicate, computed separately.
struct DensityRoutes {
  bool dense_by_closure = false;
  bool dense_by_meeting_opens = false;
  bool i_dense_by_local_function = false;
  bool i_dense_by_open_traces = false;  ///< A∩O ∉ I for every nonempty open O
  bool i_dense_by_psi = false;          ///< ψ(X∖A) = ∅
  bool star_dense_by_closure = false;
  bool star_dense_by_meeting_star_opens = false;
  bool nowhere_dense = false;

  bool consistent() const noexcept {
    return dense_by_closure == dense_by_meeting_opens &&
           i_dense_by_local_function == i_dense_by_open_traces &&
           i_dense_by_local_function == i_dense_by_psi &&
           star_dense_by_closure == star_dense_by_meeting_star_opens;
  }
};

DensityRoutes density_routes(const Topology& t, const Ideal& ideal, Subset a);

/// Whether every dense subset is ideal-dense; the witness is the first dense
/// subset that is not.
Verdict dense_iff_i_dense_scan(const Topology& t, const Ideal& ideal);

}  // namespace idyn
