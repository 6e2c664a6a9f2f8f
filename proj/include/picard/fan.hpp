#pragma once

#include <vector>

#include "picard/cone.hpp"
#include "picard/numeric.hpp"

namespace picard {

// Simplicial rational fan. `complete` is decided by validation (wall test +
// interior-point probes). Graph fans built internally live in a lattice of
// higher rank than their cones' dimension and are never complete.
struct Fan {
  int rank = 0;                            // lattice rank
  std::vector<IntVec> rays;                // primitive, distinct, user order
  std::vector<std::vector<int>> max_cones; // sorted index sets
  bool complete = false;

  int dim() const { return max_cones.empty() ? 0 : int(max_cones[0].size()); }
  Cone cone_of(const std::vector<int>& idx) const;
};

// Full validation entry point. Throws NonPrimitiveRay, DuplicateRay,
// NonSimplicialCone, OverlappingCones; incompleteness is only recorded in the
// returned flag (operations that need completeness re-check it).
Fan validate_fan(int lattice_rank, const std::vector<IntVec>& rays,
                 const std::vector<std::vector<int>>& max_cones);

// Internal constructor for fans whose cones' dimension is below the lattice
// rank (graph fans, starred fans): checks simpliciality only.
Fan make_fan_unchecked(int lattice_rank, std::vector<IntVec> rays,
                       std::vector<std::vector<int>> max_cones, bool complete);

// Minimal cone of a complete fan containing x, as sorted ray indices (empty
// set = the zero cone).
std::vector<int> locate(const Fan& fan, const RatVec& x);

// Index of some max cone containing x (complete fans always have one).
int locate_max(const Fan& fan, const RatVec& x);

// True iff every max cone of `fine` is contained in a member of `coarse` and
// the supports agree. Supports are compared exactly when `fine` is complete;
// otherwise by generator/interior-point probes of the coarse cones.
bool refines(const Fan& fine, const std::vector<Cone>& coarse);

// Star subdivision: all faces of (sigma + R>=0 q) over the input max cones.
// q must lie outside the support (QInsideSupport) and be primitive.
Fan star_subdivide(const Fan& boundary_fan, const IntVec& q);

}  // namespace picard
