#pragma once

#include <optional>
#include <vector>

#include "picard/cone.hpp"
#include "picard/fan.hpp"
#include "picard/lattice.hpp"
#include "picard/numeric.hpp"
#include "picard/polytope.hpp"

namespace picard {

// The divisor lattice D0 = ⊕ Z e_delta with beta0 e_delta = delta, and the
// kernel lattice n = Ker(beta0). Rational Picard data only: D is taken to be
// D0 throughout (the rational theory is independent of the over-lattice
// choice).
struct DivisorLattice {
  int d = 0;                     // number of rays
  int n = 0;                     // lattice rank
  IntMat beta0;                  // n x d, columns are the rays
  std::vector<IntVec> n_basis;   // HNF-canonical Z-basis of Ker(beta0)
};

DivisorLattice divisor_lattice(const Fan& fan);

// Toric Picard basis: rank d-n, and for each ray the coordinate vector of its
// divisor class in the basis dual to n_basis.
struct ToricPicardBasis {
  int rank = 0;
  std::vector<IntVec> class_of;  // class_of[ray][k] = n_basis[k][ray]
};

ToricPicardBasis picard_basis_toric(const Fan& fan);

// Nonnegative integer coefficient vector rho (one entry per ray), not all
// zero.
struct RhoClass {
  std::vector<Int> coeff;
};

RhoClass make_rho(std::vector<Int> coeff);
RhoClass anticanonical_rho(const Fan& fan);  // all ones

// Piecewise-linear support function: per max cone the linear form l_sigma
// with l_sigma(delta) = rho_delta on the cone's rays.
struct SupportFunction {
  std::vector<RatVec> forms;  // aligned with fan.max_cones

  Rat value_on(const Fan& fan, const RatVec& x) const;
};

SupportFunction support_function(const Fan& fan, const RhoClass& rho);

bool is_convex(const Fan& fan, const RhoClass& rho);
bool is_strictly_convex(const Fan& fan, const RhoClass& rho);

// Epigraph cone C_rho, generated by the lifted rays (delta, rho_delta);
// requires convex rho (NotConvexRho). strongly_convex and
// fundamental_generators flags are filled in.
Cone epigraph_cone(const Fan& fan, const RhoClass& rho);

IntVec lifted_ray(const Fan& fan, const RhoClass& rho, int ray);

// Forward map e_delta -> (delta, rho_delta) and its dual
// (l', a) -> beta^*(l') + a rho, as matrices ((n+1) x d and d x (n+1)).
struct PRhoMaps {
  IntMat forward;
  IntMat dual;
};

PRhoMaps p_rho_map(const Fan& fan, const RhoClass& rho);

// Graph fan Sigma(rho) in the extended lattice, and its star subdivision at
// q_L = (0,...,0,1).
Fan graph_fan(const Fan& fan, const RhoClass& rho);
Fan starred(const Fan& fan, const RhoClass& rho);

// Lattice points of the section polytope: L* ∩ Delta(L*)_rho, lex sorted.
std::vector<IntVec> section_basis(const Fan& fan, const RhoClass& rho);

// A section: explicit support with nonzero rational coefficients, or GENERIC
// (all basis elements present with generic coefficients).
struct Section {
  bool generic = false;
  std::vector<IntVec> points;
  std::vector<Rat> coeffs;

  static Section make_generic() {
    Section s;
    s.generic = true;
    return s;
  }
};

// Support of s for the given rho (resolves GENERIC to the full basis).
std::vector<IntVec> section_support(const Fan& fan, const RhoClass& rho, const Section& s);

// Local chart data at a max cone: invariants of L / sum Z delta_i, the chart
// vertex z(sigma), and the exponent row k(z) of every support monomial.
struct LocalChart {
  std::vector<int> sigma;
  std::vector<Int> group_invariants;  // elementary divisors of I_sigma
  RatVec z_sigma;                     // in the extended dual lattice
  bool vertex_in_lattice = false;     // z(sigma) integral (reported as data)
  std::vector<IntVec> support;        // monomial lattice points
  std::vector<IntVec> exponents;      // exponents[i] = k(support[i]), length n
};

LocalChart local_chart(const Fan& fan, const std::vector<int>& sigma,
                       const RhoClass& rho, const Section& s);

// Convex hull of the support (explicit sections only).
Polytope newton_polygon(const Section& s);

// Newton polygon of s equals Delta(L*)_rho: the polytope is integral and
// every vertex is in the support (GENERIC reduces to integrality).
bool newton_polygon_full(const Fan& fan, const RhoClass& rho, const Section& s);

// All nonzero cones sigma with gamma(sigma) inside the facet of C_rho dual to
// (v,1): the torus orbits the hypersurface provably misses.
std::vector<std::vector<int>> avoided_orbits(const Fan& fan, const RhoClass& rho,
                                                    const Section& s, const IntVec& v);

}  // namespace picard
