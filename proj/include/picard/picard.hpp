#pragma once

#include <string>
#include <vector>

#include "picard/divisor.hpp"
#include "picard/fan.hpp"
#include "picard/numeric.hpp"
#include "picard/polytope.hpp"

namespace picard {

// One codimension-2 correction: the face (by generator/vertex indices), the
// interior lattice points of the projected face and of its dual face, and
// their product.
struct CorrectionTerm {
  std::vector<int> face;
  std::vector<IntVec> primal_points;
  std::vector<IntVec> dual_points;
  Int product;
};

struct PicardReport {
  Int toric_rank;
  std::vector<CorrectionTerm> corrections;
  Int total_rank;
  std::vector<std::string> assumptions;
};

struct ConditionReport {
  bool cond_i = false;
  std::vector<int> offending_rays;   // lifted rays interior to a facet
  bool cond_ii = false;
  std::vector<int> offending_cones;  // max cones not inside a facet
  bool newton_full = false;          // section polytope integral
};

// Rank-formula hypotheses for (fan, rho): (i) no lifted ray in a facet interior
// of C_rho, (ii) the graph fan refines the face fan of the boundary of
// C_rho. Requires convex rho (NotConvexRho).
ConditionReport check_conditions(const Fan& fan, const RhoClass& rho);

// Picard rank of a quasi-smooth hypersurface cut out by s: toric part d - n
// plus the codimension-2 face corrections of C_rho. Refuses to compute when
// any hypothesis fails (PreconditionFailed naming it).
PicardReport picard_hypersurface(const Fan& fan, const RhoClass& rho, const Section& s);

// Anti-canonical fast path: same report computed purely from the face
// lattices of Delta(L) and its dual (reflexive case).
PicardReport picard_anticanonical(const Fan& fan);

// All boundary lattice points of a reflexive polytope minus facet-interior
// points, lex sorted.
std::vector<IntVec> maximal_ray_set(const Polytope& delta);

struct SmoothnessCertificate {
  enum class Verdict { SMOOTH_CY, NOT_CERTIFIED };

  bool maximal = false;
  std::vector<IntVec> missing_rays;
  std::vector<IntVec> extra_rays;
  Verdict verdict = Verdict::NOT_CERTIFIED;
  std::vector<std::string> notes;
};

// Certifies smoothness of the anti-canonical 3-fold when the ray set is
// maximal and the anti-canonical hypotheses hold; never claims singularity.
// WrongDimension unless the lattice rank is 4.
SmoothnessCertificate smoothness_certificate(const Fan& fan);

}  // namespace picard
