#pragma once

#include <optional>
#include <vector>

#include "picard/cone.hpp"
#include "picard/fan.hpp"
#include "picard/numeric.hpp"

namespace picard {

// Facet inequality <x, normal> >= offset with primitive integer normal.
struct Facet {
  IntVec normal;
  Rat offset;
};

// Affine-hull equation <x, normal> == value.
struct AffineEq {
  IntVec normal;
  Rat value;
};

// Exact convex polytope with cross-validated V- and H-representations.
// Lower-dimensional polytopes carry their affine hull.
class Polytope {
 public:
  struct Face {
    std::vector<int> verts;  // sorted vertex indices
    std::vector<int> tight;  // sorted facet indices tight on the face
    int dim = 0;
  };

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<AffineEq>& affine_hull() const { return aff_; }

  bool contains(const RatVec& x) const;
  bool strictly_contains(const RatVec& x) const;  // relative interior

  // All faces (vertices up to the polytope itself), lazily built.
  const std::vector<Face>& faces() const;
  const Face& top_face() const;

  friend Polytope hull(const std::vector<RatVec>& points);

 private:
  int ambient_ = 0;
  int dim_ = 0;
  std::vector<RatVec> verts_;
  std::vector<Facet> facets_;
  std::vector<AffineEq> aff_;
  mutable std::vector<Face> faces_;
  mutable bool faces_built_ = false;
};

// Exact V-to-H conversion, ambient rank <= 6 (DimensionCap beyond).
Polytope hull(const std::vector<RatVec>& points);
Polytope hull_of_int(const std::vector<IntVec>& points);

// {y : <x,y> >= -1 for all x in P}; requires P full-dimensional with the
// origin interior (OriginNotInterior / NotFullDimensional).
Polytope dual_polytope(const Polytope& p);

bool is_integral(const Polytope& p);
bool is_reflexive(const Polytope& p);

std::vector<IntVec> lattice_points(const Polytope& p);
std::vector<IntVec> relint_lattice_points(const Polytope& p, const Polytope::Face& f);

std::vector<Polytope::Face> faces_of_codim(const Polytope& p, int codim);

// Face of `dual` on which the pairing with all of F is exactly -1; P must be
// reflexive (NotReflexive). dim F + dim F' = dim P - 1.
Polytope::Face dual_face(const Polytope& p, const Polytope& dual, const Polytope::Face& f);
std::pair<Polytope, Polytope::Face> dual_face(const Polytope& p, const Polytope::Face& f);

// Union of the simplices conv({0} ∪ sigma-rays) over a complete fan. Convex
// flag decided by the all-ones support-function criterion; hull attached when
// convex.
struct SimplicialRegion {
  int rank = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> simplices;  // ray index sets (origin implicit)
  bool convex = false;
  std::optional<Polytope> convex_hull;

  bool contains(const RatVec& x) const;
};

SimplicialRegion delta_L(const Fan& fan);

std::vector<IntVec> lattice_points(const SimplicialRegion& region);

// Height-one cross-section of C*_rho projected to the base: vertices are the
// generators rescaled to last coordinate 1 (UnboundedSection when some
// generator has last coordinate <= 0).
Polytope delta_Lstar_rho(const Cone& c_rho_dual);

}  // namespace picard
