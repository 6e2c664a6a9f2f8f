#include "picard/fan.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "picard/errors.hpp"
#include "picard/lattice.hpp"
#include "picard/ratlin.hpp"

namespace picard {

Cone Fan::cone_of(const std::vector<int>& idx) const {
  Cone c;
  c.ambient = rank;
  for (int i : idx) c.gens.push_back(rays[i]);
  return c;
}

namespace {

// Barycentric coordinates of x in the simplicial cone spanned by the given
// rays; nullopt when x is outside the linear span or the solve fails.
std::optional<RatVec> cone_coords(const Fan& fan, const std::vector<int>& cone,
                                  const RatVec& x) {
  std::vector<RatVec> cols;
  for (int i : cone) cols.push_back(to_rat(fan.rays[i]));
  return solve_any(RatMat::from_cols(cols), x);
}

bool in_simplicial_cone(const Fan& fan, const std::vector<int>& cone, const RatVec& x) {
  auto c = cone_coords(fan, cone, x);  // exact: nullopt iff outside the span
  if (!c) return false;
  for (const Rat& v : *c)
    if (v < 0) return false;
  return true;
}

}  // namespace

Fan make_fan_unchecked(int lattice_rank, std::vector<IntVec> rays,
                       std::vector<std::vector<int>> max_cones, bool complete) {
  Fan f;
  f.rank = lattice_rank;
  f.rays = std::move(rays);
  f.max_cones = std::move(max_cones);
  for (auto& c : f.max_cones) std::sort(c.begin(), c.end());
  f.complete = complete;
  for (const auto& c : f.max_cones) {
    std::vector<IntVec> gens;
    for (int i : c) gens.push_back(f.rays[i]);
    if (int(independent_subset_int(gens).size()) != int(c.size()))
      fail("NonSimplicialCone", "dependent generators in a max cone");
  }
  return f;
}

Fan validate_fan(int lattice_rank, const std::vector<IntVec>& rays,
                 const std::vector<std::vector<int>>& max_cones) {
  if (lattice_rank <= 0) fail("SchemaError", "lattice rank must be positive");
  if (rays.empty()) fail("SchemaError", "fan needs at least one ray");
  for (const IntVec& r : rays) {
    if (int(r.size()) != lattice_rank) fail("SchemaError", "ray length mismatch");
    if (is_zero(r)) fail("NonPrimitiveRay", "zero ray");
    if (primitive_part(r) != r) fail("NonPrimitiveRay", "ray " + vec_to_string(r));
  }
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      if (rays[i] == rays[j]) fail("DuplicateRay", "ray " + vec_to_string(rays[i]));

  Fan fan;
  fan.rank = lattice_rank;
  fan.rays = rays;
  for (std::vector<int> c : max_cones) {
    std::sort(c.begin(), c.end());
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= int(rays.size())) fail("SchemaError", "cone index out of range");
      if (i && c[i] == c[i - 1]) fail("SchemaError", "repeated index in a cone");
    }
    if (int(c.size()) != lattice_rank)
      fail("NonSimplicialCone", "max cone is not full-dimensional simplicial");
    std::vector<IntVec> gens;
    for (int i : c) gens.push_back(rays[i]);
    if (int(independent_subset_int(gens).size()) != lattice_rank)
      fail("NonSimplicialCone", "dependent generators in a max cone");
    fan.max_cones.push_back(std::move(c));
  }
  if (fan.max_cones.empty()) fail("SchemaError", "fan needs at least one max cone");

  // Interior-point probe: the barycenter of each max cone must lie in no
  // other max cone. Cone inverses are precomputed once.
  {
    std::vector<RatMat> inverses;
    inverses.reserve(fan.max_cones.size());
    for (const auto& cone : fan.max_cones) {
      RatMat cols(lattice_rank, lattice_rank);
      for (int j = 0; j < lattice_rank; ++j)
        for (int i = 0; i < lattice_rank; ++i) cols.at(i, j) = Rat(rays[size_t(cone[j])][i]);
      RatMat inv(lattice_rank, lattice_rank);
      for (int j = 0; j < lattice_rank; ++j) {
        RatVec e(size_t(lattice_rank), Rat(0));
        e[size_t(j)] = 1;
        RatVec col = *solve_square(cols, e);
        for (int i = 0; i < lattice_rank; ++i) inv.at(i, j) = col[size_t(i)];
      }
      inverses.push_back(std::move(inv));
    }
    for (size_t a = 0; a < fan.max_cones.size(); ++a) {
      RatVec probe(size_t(lattice_rank), Rat(0));
      for (int i : fan.max_cones[a])
        for (int j = 0; j < lattice_rank; ++j) probe[j] += Rat(rays[i][j]);
      for (size_t b = 0; b < fan.max_cones.size(); ++b) {
        if (a == b) continue;
        RatVec coords = inverses[b].mul(probe);
        bool inside = true;
        for (const Rat& v : coords)
          if (v < 0) {
            inside = false;
            break;
          }
        if (inside) fail("OverlappingCones", "max cones overlap");
      }
    }
  }

  // Wall test: every codim-1 face shared by exactly two max cones when
  // complete; more than two always means overlap.
  std::map<std::vector<int>, int> wall_count;
  for (const auto& c : fan.max_cones) {
    for (size_t drop = 0; drop < c.size(); ++drop) {
      std::vector<int> wall;
      for (size_t i = 0; i < c.size(); ++i)
        if (i != drop) wall.push_back(c[i]);
      ++wall_count[wall];
    }
  }
  bool complete = true;
  for (const auto& [wall, count] : wall_count) {
    if (count > 2) fail("OverlappingCones", "wall shared by more than two cones");
    if (count != 2) complete = false;
  }
  fan.complete = complete;
  return fan;
}

std::vector<int> locate(const Fan& fan, const RatVec& x) {
  if (!fan.complete) fail("FanIncomplete", "locate requires a complete fan");
  for (const auto& cone : fan.max_cones) {
    auto c = cone_coords(fan, cone, x);
    if (!c) continue;
    bool ok = true;
    std::vector<int> minimal;
    for (size_t i = 0; i < cone.size(); ++i) {
      if ((*c)[i] < 0) {
        ok = false;
        break;
      }
      if ((*c)[i] > 0) minimal.push_back(cone[i]);
    }
    if (ok) return minimal;
  }
  fail("Internal", "complete fan has no cone containing the point");
}

int locate_max(const Fan& fan, const RatVec& x) {
  if (!fan.complete) fail("FanIncomplete", "locate requires a complete fan");
  for (size_t k = 0; k < fan.max_cones.size(); ++k) {
    auto c = cone_coords(fan, fan.max_cones[k], x);
    if (!c) continue;
    bool ok = true;
    for (const Rat& v : *c)
      if (v < 0) {
        ok = false;
        break;
      }
    if (ok) return int(k);
  }
  fail("Internal", "complete fan has no cone containing the point");
}

bool refines(const Fan& fine, const std::vector<Cone>& coarse) {
  for (const Cone& c : coarse)
    if (c.ambient != fine.rank) fail("AmbientMismatch", "coarse cones in a different lattice");

  for (const auto& mc : fine.max_cones) {
    bool inside_some = false;
    for (const Cone& c : coarse) {
      bool inside = true;
      for (int i : mc)
        if (!cone_contains(c, fine.rays[i])) {
          inside = false;
          break;
        }
      if (inside) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return false;
  }
  if (fine.complete) return true;  // containment forces support equality

  // Probe-based support check for partial fans: coarse generators and
  // barycenters must lie in the fine support.
  auto in_support = [&](const RatVec& x) {
    for (const auto& mc : fine.max_cones)
      if (in_simplicial_cone(fine, mc, x)) return true;
    return false;
  };
  for (const Cone& c : coarse) {
    RatVec bary(size_t(fine.rank), Rat(0));
    for (const IntVec& g : c.gens) {
      if (!in_support(to_rat(g))) return false;
      for (int j = 0; j < fine.rank; ++j) bary[j] += Rat(g[j]);
    }
    if (!c.gens.empty() && !in_support(bary)) return false;
  }
  return true;
}

Fan star_subdivide(const Fan& boundary_fan, const IntVec& q) {
  if (int(q.size()) != boundary_fan.rank) fail("SchemaError", "q length mismatch");
  if (is_zero(q) || primitive_part(q) != q) fail("NonPrimitiveRay", "q must be primitive");
  for (const auto& mc : boundary_fan.max_cones)
    if (in_simplicial_cone(boundary_fan, mc, to_rat(q)))
      fail("QInsideSupport", "q lies in the support of the input fan");

  std::vector<IntVec> rays = boundary_fan.rays;
  int qi = int(rays.size());
  rays.push_back(q);
  std::vector<std::vector<int>> cones;
  for (const auto& mc : boundary_fan.max_cones) {
    std::vector<int> c = mc;
    c.push_back(qi);
    std::sort(c.begin(), c.end());
    cones.push_back(std::move(c));
  }
  return make_fan_unchecked(boundary_fan.rank, std::move(rays), std::move(cones), false);
}

}  // namespace picard
