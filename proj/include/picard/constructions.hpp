#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/divisor.hpp"
#include "picard/fan.hpp"
#include "picard/numeric.hpp"

namespace picard {

// Positive weights with gcd(n_j : j != i) = 1 for every i (BadWeights).
struct WeightSystem {
  std::vector<Int> weights;

  Int degree() const;
};

WeightSystem make_weight_system(std::vector<Int> weights);

struct WpsBuild {
  Fan fan;                    // rays in weight order (delta_1 .. delta_{n+1})
  IntVec kernel;              // = weights
};

// Weighted projective fan via the deterministic HNF splitting of
// Z^{n+1} / Z·weights.
WpsBuild weighted_projective(const WeightSystem& w);

// Section-polytope vertices for a weighted projective space. `ambient` gives
// the rows (a_{j,1..n+1}); the plain variant maps them into the chosen
// lattice coordinates (matches delta_Lstar_rho's vertex set).
std::vector<RatVec> delta_Lstar_vertices_wps_ambient(const WeightSystem& w, const RhoClass& rho);
std::vector<RatVec> delta_Lstar_vertices_wps(const WeightSystem& w, const RhoClass& rho);

// Finite diagonal group given by rational exponent vectors (entries mod 1).
struct DiagonalGroup {
  std::vector<RatVec> gens;
};

struct QuotientBuild {
  Fan fan;                       // Sigma_0, or the refinement when rays given
  std::vector<IntVec> delta;     // images of the standard basis in L
  RatVec q;                      // positive primitive generator along the weights
  Int index_in_l;                // [L : L0]
  bool q_in_g = true;            // scalar group contained in G
  std::vector<int> nbasis_index; // -1 for the weight vector itself, else ray id
  std::vector<RatVec> nbasis;    // basis vectors of n_C in divisor coordinates
};

// Toric variety dominating P(weights)/G: lattice exp^{-1}(G)/Z q, the fan on
// the delta_j (refined through the extra rays when supplied), and the
// explicit kernel basis indexed by {0} ∪ (Sigma^1 - Sigma_0^1).
QuotientBuild quotient_toric(const WeightSystem& w, const DiagonalGroup& g,
                             const std::optional<std::vector<IntVec>>& extra_rays);

struct SimplexCheckResult {
  bool pass = false;
  bool weights_ok = false;  // n_j | d for all j (printed gcd variant optional)
  bool q_in_g = false;
  bool g_in_sd = false;
  std::string failed;       // first failing condition, empty on pass
  Int degree;
  std::vector<Int> d_j;     // d / gcd(d, n_j)
};

// Reflexive-simplex correspondence conditions for 5 weights (WrongArity
// otherwise). `printed_gcd_variant` swaps the weight condition for the
// literal d/gcd(d,n_j) ∈ Z form (always true; kept for fidelity).
SimplexCheckResult reflexive_simplex_check(const WeightSystem& w, const DiagonalGroup& g,
                                           bool printed_gcd_variant = false);

// Deterministic refinement of a complete simplicial fan through the given
// boundary lattice points: per facet of Delta(L), points are inserted by
// (carrier-face dimension, lex) and star-split into the triangulation. Every
// base generator must be listed; every listed ray is used
// (RayOutsideSupport / InconsistentRays).
Fan triangulate_refinement(const Fan& base, const std::vector<IntVec>& rays);

}  // namespace picard
