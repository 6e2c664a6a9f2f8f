#pragma once

#include <optional>
#include <vector>

#include "picard/numeric.hpp"

namespace picard {

// Rational polyhedral cone given by primitive integer generators. Simplicial
// cones have linearly independent generators; non-simplicial cones appear
// only as inputs to refines/cone_faces and as epigraph cones.
struct Cone {
  int ambient = 0;
  std::vector<IntVec> gens;

  // Set by epigraph_cone; unset otherwise.
  std::optional<bool> strongly_convex;
  std::optional<bool> fundamental_generators;
};

// Face lattice of a cone: each face is the sorted set of generator indices
// lying on it, grouped by dimension (0 = apex).
struct ConeFaceLattice {
  std::vector<std::vector<std::vector<int>>> by_dim;

  int dim() const { return int(by_dim.size()) - 1; }
  // face-of relation: index-set inclusion.
  static bool face_of(const std::vector<int>& a, const std::vector<int>& b);
};

// Dual cone {y : <x,y> >= 0 for all x in C} by its minimal primitive
// generators, lex sorted. Requires C strongly convex and full-dimensional
// (NotStronglyConvex / NotFullDimensional), ambient rank <= 6.
Cone dual_cone(const Cone& c);

// Facet normals of a full-dimensional cone (= generators of its dual), lex
// sorted. Same preconditions as dual_cone except strong convexity: an empty
// result means the cone is all of space.
std::vector<IntVec> facet_normals(const Cone& c);

ConeFaceLattice cone_faces(const Cone& c);

// Exact membership x in cone(gens); works in any dimension (reduces to the
// span first). Empty generator list = the origin cone.
bool cone_contains(const Cone& c, const RatVec& x);
bool cone_contains(const Cone& c, const IntVec& x);

}  // namespace picard
