#include <doctest.h>

#include <set>

#include "picard/errors.hpp"
#include "picard/fan.hpp"
#include "picard/polytope.hpp"

using namespace picard;

namespace {

IntVec vec(std::vector<long> entries) {
  IntVec v;
  for (long x : entries) v.push_back(Int(x));
  return v;
}

RatVec rvec(std::vector<long> entries) {
  RatVec v;
  for (long x : entries) v.push_back(Rat(int(x)));
  return v;
}

std::vector<RatVec> rpoints(std::vector<std::vector<long>> pts) {
  std::vector<RatVec> out;
  for (auto& p : pts) out.push_back(rvec(p));
  return out;
}

std::vector<IntVec> ipoints(std::vector<std::vector<long>> pts) {
  std::vector<IntVec> out;
  for (auto& p : pts) out.push_back(vec(p));
  return out;
}

Polytope quintic_simplex() {
  return hull_of_int(
      ipoints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}}));
}

Fan p2_fan() {
  return validate_fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
}

}  // namespace

TEST_CASE("hull") {
  SUBCASE("triangle") {
    Polytope p = hull(rpoints({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(p.dim() == 2);
    CHECK(p.vertices().size() == 3);
    CHECK(p.facets().size() == 3);
  }
  SUBCASE("four-simplex") {
    Polytope p = quintic_simplex();
    CHECK(p.dim() == 4);
    CHECK(p.vertices().size() == 5);
    CHECK(p.facets().size() == 5);
  }
  SUBCASE("pentagon with an interior point dropped") {
    Polytope p = hull(rpoints({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {0, 0}}));
    CHECK(p.vertices().size() == 5);
    CHECK(p.facets().size() == 5);
  }
  SUBCASE("lower-dimensional hull carries its affine hull") {
    Polytope p = hull(rpoints({{-1, 0}, {2, 0}}));
    CHECK(p.dim() == 1);
    REQUIRE(p.affine_hull().size() == 1);
    CHECK(p.affine_hull()[0].normal == vec({0, 1}));
    CHECK(p.affine_hull()[0].value == 0);
  }
  SUBCASE("single point") {
    Polytope p = hull(rpoints({{3, 4}}));
    CHECK(p.dim() == 0);
    CHECK(p.vertices().size() == 1);
    CHECK(p.contains(rvec({3, 4})));
    CHECK_FALSE(p.contains(rvec({3, 5})));
  }
}

TEST_CASE("dual polytope") {
  SUBCASE("projective plane triangle") {
    Polytope p = hull(rpoints({{1, 0}, {0, 1}, {-1, -1}}));
    Polytope d = dual_polytope(p);
    std::vector<RatVec> expected = rpoints({{-1, -1}, {-1, 2}, {2, -1}});
    CHECK(d.vertices() == expected);
  }
  SUBCASE("quintic simplex") {
    Polytope d = dual_polytope(quintic_simplex());
    std::set<RatVec> verts(d.vertices().begin(), d.vertices().end());
    CHECK(verts.count(rvec({4, -1, -1, -1})));
    CHECK(verts.count(rvec({-1, 4, -1, -1})));
    CHECK(verts.count(rvec({-1, -1, 4, -1})));
    CHECK(verts.count(rvec({-1, -1, -1, 4})));
    CHECK(verts.count(rvec({-1, -1, -1, -1})));
    CHECK(d.vertices().size() == 5);
  }
  SUBCASE("square and cross-polytope") {
    Polytope square = hull(rpoints({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
    Polytope d = dual_polytope(square);
    CHECK(d.vertices() == rpoints({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
  }
  SUBCASE("origin not interior") {
    Polytope shifted = hull(rpoints({{1, 1}, {2, 1}, {1, 2}}));
    CHECK_THROWS_WITH_AS(dual_polytope(shifted), doctest::Contains("OriginNotInterior"), Error);
  }
  SUBCASE("involution on reflexive fixtures") {
    std::vector<Polytope> fixtures = {
        hull(rpoints({{1, 0}, {0, 1}, {-1, -1}})),
        quintic_simplex(),
        hull(rpoints({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})),
    };
    for (const Polytope& p : fixtures) {
      Polytope dd = dual_polytope(dual_polytope(p));
      CHECK(dd.vertices() == p.vertices());
    }
  }
}

TEST_CASE("integrality and reflexivity") {
  CHECK(is_integral(quintic_simplex()));
  // dual of the (1,1,2) weight triangle
  CHECK(is_integral(hull(rpoints({{-1, 1}, {-1, -1}, {3, -1}}))));
  SUBCASE("triangle with a fractional dual vertex") {
    // dual of the (1,1,3) weight triangle has vertex (-1,-2/3)
    Polytope t = hull(rpoints({{1, 0}, {0, 1}, {-1, -3}}));
    Polytope d = dual_polytope(t);
    CHECK_FALSE(is_integral(d));
    bool found = false;
    for (const RatVec& v : d.vertices())
      if (v == RatVec{Rat(-1), Rat(2) / 3}) found = true;
    CHECK(found);
  }
  CHECK(is_reflexive(quintic_simplex()));
  CHECK(is_reflexive(hull(rpoints({{1, 0}, {0, 1}, {-1, -1}}))));
  SUBCASE("weights (1,1,1,1,3) fail reflexivity") {
    Polytope p = hull_of_int(
        ipoints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -3}}));
    CHECK_FALSE(is_reflexive(p));
  }
}

TEST_CASE("lattice points") {
  SUBCASE("segment") {
    Polytope seg = hull(rpoints({{-1}, {2}}));
    CHECK(lattice_points(seg) == ipoints({{-1}, {0}, {1}, {2}}));
  }
  SUBCASE("126 points of the dual quintic simplex") {
    Polytope d = dual_polytope(quintic_simplex());
    CHECK(lattice_points(d).size() == 126);
  }
  SUBCASE("small triangle") {
    CHECK(lattice_points(hull(rpoints({{0, 0}, {1, 0}, {0, 1}}))).size() == 3);
  }
  SUBCASE("count invariant under a lattice shear") {
    Polytope p = hull(rpoints({{1, 0}, {0, 1}, {-1, -1}}));
    Polytope sheared = hull(rpoints({{1, 0}, {2, 1}, {-3, -1}}));  // (x,y)->(x+2y,y)
    CHECK(lattice_points(p).size() == lattice_points(sheared).size());
  }
}

TEST_CASE("relative interior points") {
  SUBCASE("segment interior") {
    Polytope seg = hull(rpoints({{-1, 0}, {2, 0}}));
    CHECK(relint_lattice_points(seg, seg.top_face()) == ipoints({{0, 0}, {1, 0}}));
  }
  SUBCASE("two-faces of the quintic simplex are hollow") {
    Polytope p = quintic_simplex();
    for (const auto& f : faces_of_codim(p, 2)) CHECK(relint_lattice_points(p, f).empty());
  }
  SUBCASE("facets of the dual quintic simplex have four interior points") {
    Polytope d = dual_polytope(quintic_simplex());
    auto facets = faces_of_codim(d, 1);
    REQUIRE(facets.size() == 5);
    for (const auto& f : facets) CHECK(relint_lattice_points(d, f).size() == 4);
  }
  SUBCASE("interior of a reflexive polytope is the origin") {
    Polytope p = quintic_simplex();
    auto pts = relint_lattice_points(p, p.top_face());
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == vec({0, 0, 0, 0}));
  }
  SUBCASE("face relative interiors partition the lattice points") {
    for (const Polytope& p : {quintic_simplex(), hull(rpoints({{1, 0}, {0, 1}, {-1, -1}}))}) {
      size_t total = 0;
      for (const auto& f : p.faces()) total += relint_lattice_points(p, f).size();
      CHECK(total == lattice_points(p).size());
    }
  }
}

TEST_CASE("face lattice and dual faces") {
  Polytope p = quintic_simplex();
  SUBCASE("ten two-dimensional faces") { CHECK(faces_of_codim(p, 2).size() == 10); }
  SUBCASE("dual face dimensions") {
    Polytope d = dual_polytope(p);
    for (const auto& f : faces_of_codim(p, 2)) {
      Polytope::Face df = dual_face(p, d, f);
      CHECK(df.dim == 1);
      // pairing is exactly -1 between the face and its dual
      for (int vi : f.verts)
        for (int wi : df.verts) CHECK(dot(p.vertices()[vi], d.vertices()[wi]) == -1);
    }
  }
  SUBCASE("dual of a vertex of the plane triangle is the opposite edge") {
    Polytope t = hull(rpoints({{1, 0}, {0, 1}, {-1, -1}}));
    Polytope d = dual_polytope(t);
    for (const auto& f : faces_of_codim(t, 2)) {
      REQUIRE(f.dim == 0);
      Polytope::Face df = dual_face(t, d, f);
      CHECK(df.dim == 1);
      CHECK(df.verts.size() == 2);
    }
  }
}

TEST_CASE("delta region of a fan") {
  SUBCASE("projective plane") {
    SimplicialRegion region = delta_L(p2_fan());
    CHECK(region.convex);
    REQUIRE(region.convex_hull);
    CHECK(region.convex_hull->vertices() == rpoints({{-1, -1}, {0, 1}, {1, 0}}));
  }
  SUBCASE("refined projective plane stays convex") {
    Fan fan = validate_fan(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({-1, -1})},
                           {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    SimplicialRegion region = delta_L(fan);
    CHECK(region.convex);
    CHECK(region.convex_hull->vertices().size() == 4);
  }
  SUBCASE("oracle-verified non-convex fixture") {
    // (1,1) lies strictly inside the simplex on {0, (2,1), (1,2)}, so the
    // all-ones form of cone{(2,1),(1,1)} evaluates to 2 > 1 on (1,2).
    Fan fan = validate_fan(
        2, {vec({2, 1}), vec({1, 1}), vec({1, 2}), vec({-1, 0}), vec({0, -1})},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    SimplicialRegion region = delta_L(fan);
    CHECK_FALSE(region.convex);
    CHECK_FALSE(region.convex_hull.has_value());
    // the region still answers membership simplex-by-simplex
    CHECK(region.contains(rvec({1, 1})));
    RatVec outside = {Rat(3) / 2, Rat(3) / 2};  // inside hull, outside region
    CHECK_FALSE(region.contains(outside));
    // the convexity gap here is at rational points; lattice points agree
    std::vector<IntVec> region_pts = lattice_points(region);
    Polytope hull_poly = hull(rpoints({{2, 1}, {1, 2}, {-1, 0}, {0, -1}}));
    CHECK(hull_poly.contains(outside));
    CHECK(region_pts == lattice_points(hull_poly));
  }
  SUBCASE("incomplete fan is rejected") {
    Fan fan = validate_fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}});
    CHECK_THROWS_WITH_AS(delta_L(fan), doctest::Contains("FanIncomplete"), Error);
  }
}

TEST_CASE("section polytope from a dual cone") {
  SUBCASE("projective line with rho=(1,2)") {
    Cone dual;
    dual.ambient = 2;
    dual.gens = {vec({2, 1}), vec({-1, 1})};
    Polytope p = delta_Lstar_rho(dual);
    CHECK(p.vertices() == rpoints({{-1}, {2}}));
  }
  SUBCASE("anticanonical section polytope of the plane equals the dual polytope") {
    Cone c_rho;
    c_rho.ambient = 3;
    c_rho.gens = {vec({1, 0, 1}), vec({0, 1, 1}), vec({-1, -1, 1})};
    Polytope p = delta_Lstar_rho(dual_cone(c_rho));
    Polytope d = dual_polytope(hull(rpoints({{1, 0}, {0, 1}, {-1, -1}})));
    CHECK(p.vertices() == d.vertices());
  }
  SUBCASE("single vertical ray gives the origin") {
    Cone dual;
    dual.ambient = 2;
    dual.gens = {vec({0, 1})};
    Polytope p = delta_Lstar_rho(dual);
    CHECK(p.dim() == 0);
    CHECK(p.vertices() == rpoints({{0}}));
  }
  SUBCASE("horizontal generator is unbounded") {
    Cone dual;
    dual.ambient = 2;
    dual.gens = {vec({1, 0}), vec({0, 1})};
    CHECK_THROWS_WITH_AS(delta_Lstar_rho(dual), doctest::Contains("UnboundedSection"), Error);
  }
}

TEST_CASE("relative interiors partition the big fixtures") {
  Polytope mirror = dual_polytope(quintic_simplex());
  size_t total = 0;
  for (const auto& f : mirror.faces()) total += relint_lattice_points(mirror, f).size();
  CHECK(total == 126);
  CHECK(lattice_points(mirror).size() == 126);
}
