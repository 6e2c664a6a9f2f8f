#include "picard/picard.hpp"

#include <algorithm>
#include <set>

#include "picard/errors.hpp"
#include "picard/ratlin.hpp"

namespace picard {

namespace {

// C_rho with its facet normals, extreme rays, and tight-set machinery.
struct EpigraphGeometry {
  Cone c_rho;
  std::vector<IntVec> normals;        // facet normals (extreme rays of the dual)
  std::vector<IntVec> extreme;        // extreme rays, lex sorted
  std::vector<std::vector<int>> extreme_tight;  // tight normal sets per extreme ray

  std::vector<int> tight_normals(const RatVec& p) const {
    std::vector<int> t;
    for (size_t w = 0; w < normals.size(); ++w)
      if (dot(normals[w], p) == 0) t.push_back(int(w));
    return t;
  }

  bool inside(const RatVec& p) const {
    for (const IntVec& w : normals)
      if (dot(w, p) < 0) return false;
    return true;
  }
};

EpigraphGeometry epigraph_geometry(const Fan& fan, const RhoClass& rho) {
  EpigraphGeometry geo;
  geo.c_rho = epigraph_cone(fan, rho);
  if (!geo.c_rho.strongly_convex.value_or(false))
    fail("NotStronglyConvex", "the epigraph cone contains a line");
  geo.normals = dual_cone(geo.c_rho).gens;

  int nbar = geo.c_rho.ambient;
  std::set<IntVec> seen;
  for (const IntVec& g : geo.c_rho.gens) {
    if (seen.count(g)) continue;
    std::vector<RatVec> tight;
    for (const IntVec& w : geo.normals)
      if (dot(w, g) == 0) tight.push_back(to_rat(w));
    if (int(independent_subset(tight).size()) == nbar - 1) {
      seen.insert(g);
      geo.extreme.push_back(g);
    }
  }
  sort_lex(geo.extreme);
  for (const IntVec& g : geo.extreme) geo.extreme_tight.push_back(geo.tight_normals(to_rat(g)));
  return geo;
}

// Faces of C_rho as extreme-ray index sets, from facet incidence.
std::vector<std::vector<int>> cone_face_sets(const EpigraphGeometry& geo) {
  std::set<std::vector<int>> sets;
  std::vector<std::vector<int>> facet_sets(geo.normals.size());
  for (size_t w = 0; w < geo.normals.size(); ++w) {
    for (size_t e = 0; e < geo.extreme.size(); ++e)
      if (dot(geo.normals[w], geo.extreme[e]) == 0) facet_sets[w].push_back(int(e));
    sets.insert(facet_sets[w]);
  }
  std::vector<int> all(geo.extreme.size());
  for (size_t e = 0; e < geo.extreme.size(); ++e) all[e] = int(e);
  sets.insert(all);
  for (;;) {
    std::set<std::vector<int>> fresh;
    for (const auto& a : sets)
      for (const auto& fs : facet_sets) {
        std::vector<int> c;
        std::set_intersection(a.begin(), a.end(), fs.begin(), fs.end(), std::back_inserter(c));
        if (!sets.count(c)) fresh.insert(c);
      }
    if (fresh.empty()) break;
    sets.insert(fresh.begin(), fresh.end());
  }
  return {sets.begin(), sets.end()};
}

int face_dim(const EpigraphGeometry& geo, const std::vector<int>& face) {
  std::vector<IntVec> gens;
  for (int e : face) gens.push_back(geo.extreme[e]);
  return int(independent_subset_int(gens).size());
}

}  // namespace

ConditionReport check_conditions(const Fan& fan, const RhoClass& rho) {
  if (!is_convex(fan, rho)) fail("NotConvexRho", "rho is not convex");
  EpigraphGeometry geo = epigraph_geometry(fan, rho);

  ConditionReport report;
  report.cond_i = true;
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    std::vector<int> tight = geo.tight_normals(to_rat(lifted_ray(fan, rho, int(i))));
    if (tight.empty()) fail("Internal", "lifted ray off the boundary of its epigraph");
    if (tight.size() == 1) {
      report.cond_i = false;
      report.offending_rays.push_back(int(i));
    }
  }

  report.cond_ii = true;
  for (size_t k = 0; k < fan.max_cones.size(); ++k) {
    bool in_common_facet = false;
    for (const IntVec& w : geo.normals) {
      bool all_tight = true;
      for (int i : fan.max_cones[k])
        if (dot(w, lifted_ray(fan, rho, i)) != 0) {
          all_tight = false;
          break;
        }
      if (all_tight) {
        in_common_facet = true;
        break;
      }
    }
    if (!in_common_facet) {
      report.cond_ii = false;
      report.offending_cones.push_back(int(k));
    }
  }

  Cone dual;
  dual.ambient = geo.c_rho.ambient;
  dual.gens = geo.normals;
  report.newton_full = is_integral(delta_Lstar_rho(dual));
  return report;
}

PicardReport picard_hypersurface(const Fan& fan, const RhoClass& rho, const Section& s) {
  if (fan.rank < 4) fail("PreconditionFailed", "hypersurface Picard groups need rank >= 4");
  if (!fan.complete) fail("FanIncomplete", "complete fan required");
  if (!is_convex(fan, rho)) fail("PreconditionFailed", "rho is not convex");
  if (!newton_polygon_full(fan, rho, s))
    fail("PreconditionFailed", "Newton polygon does not fill the section polytope");
  ConditionReport cond = check_conditions(fan, rho);
  if (!cond.cond_i) fail("PreconditionFailed", "condition (i): a lifted ray lies in a facet interior");
  if (!cond.cond_ii)
    fail("PreconditionFailed", "condition (ii): the graph fan does not refine the boundary fan");

  EpigraphGeometry geo = epigraph_geometry(fan, rho);
  int nbar = fan.rank + 1;

  PicardReport report;
  report.toric_rank = Int(fan.rays.size()) - fan.rank;
  report.assumptions.push_back("section quasi-smooth (generic with full Newton polygon)");
  report.assumptions.push_back("conditions (i),(ii) verified");

  SimplicialRegion region = delta_L(fan);
  if (!region.convex)
    report.assumptions.push_back("Delta(L) non-convex: corrections use the literal region");
  std::vector<IntVec> primal_pts = lattice_points(region);
  SupportFunction sf = support_function(fan, rho);

  // Lift every region point onto the graph once.
  std::vector<std::vector<int>> primal_tight;
  primal_tight.reserve(primal_pts.size());
  for (const IntVec& x : primal_pts) {
    RatVec lift(size_t(nbar), Rat(0));
    for (int j = 0; j < fan.rank; ++j) lift[j] = Rat(x[j]);
    lift[size_t(fan.rank)] = sf.value_on(fan, to_rat(x));
    primal_tight.push_back(geo.tight_normals(lift));
  }

  Cone dual;
  dual.ambient = nbar;
  dual.gens = geo.normals;
  std::vector<IntVec> dual_pts = lattice_points(delta_Lstar_rho(dual));

  std::vector<std::vector<int>> faces = cone_face_sets(geo);
  std::sort(faces.begin(), faces.end());
  Int correction_total = 0;
  for (const auto& face : faces) {
    if (face_dim(geo, face) != nbar - 2) continue;
    std::vector<int> face_tight;  // normals vanishing on the whole face
    for (size_t w = 0; w < geo.normals.size(); ++w) {
      bool all = true;
      for (int e : face)
        if (dot(geo.normals[w], geo.extreme[e]) != 0) {
          all = false;
          break;
        }
      if (all) face_tight.push_back(int(w));
    }
    {
      std::vector<IntVec> span;
      for (int w : face_tight) span.push_back(geo.normals[w]);
      if (int(independent_subset_int(span).size()) != 2)
        fail("Internal", "dual face of a codim-2 face is not 2-dimensional");
    }

    CorrectionTerm term;
    term.face = face;
    for (size_t p = 0; p < primal_pts.size(); ++p)
      if (primal_tight[p] == face_tight) term.primal_points.push_back(primal_pts[p]);

    // Dual side: y lies in the open projected dual face iff some lift (y,h)
    // sits in the relative interior of the dual face, i.e. pairs to zero with
    // exactly the face's extreme rays and positively with the rest. Each
    // pairing is affine in h with nonnegative slope (extreme rays have
    // nonnegative height), so the test is a one-variable case split.
    std::vector<char> in_face(geo.extreme.size(), 0);
    for (int e : face) in_face[size_t(e)] = 1;
    for (const IntVec& y : dual_pts) {
      std::vector<Rat> base_val(geo.extreme.size());
      std::vector<Int> slope(geo.extreme.size());
      for (size_t e = 0; e < geo.extreme.size(); ++e) {
        Rat a = 0;
        for (int j = 0; j < fan.rank; ++j) a += Rat(geo.extreme[e][j]) * Rat(y[j]);
        base_val[e] = a;
        slope[e] = geo.extreme[e][size_t(fan.rank)];
      }
      std::optional<Rat> forced_h;
      bool ok = true;
      for (int e : face) {
        if (slope[size_t(e)] == 0) {
          if (base_val[size_t(e)] != 0) ok = false;
        } else {
          Rat h = -base_val[size_t(e)] / Rat(slope[size_t(e)]);
          if (forced_h && *forced_h != h) ok = false;
          forced_h = h;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      if (forced_h) {
        for (size_t e = 0; e < geo.extreme.size() && ok; ++e) {
          Rat v = base_val[e] + *forced_h * Rat(slope[e]);
          ok = in_face[e] ? v == 0 : v > 0;
        }
      } else {
        // h unconstrained by the face: positive-slope rays pass for large h.
        for (size_t e = 0; e < geo.extreme.size() && ok; ++e) {
          if (in_face[e]) continue;
          if (slope[e] == 0) ok = base_val[e] > 0;
        }
      }
      if (ok) term.dual_points.push_back(y);
    }

    term.product = Int(term.primal_points.size()) * Int(term.dual_points.size());
    correction_total += term.product;
    report.corrections.push_back(std::move(term));
  }
  report.total_rank = report.toric_rank + correction_total;
  return report;
}

PicardReport picard_anticanonical(const Fan& fan) {
  if (fan.rank < 4) fail("PreconditionFailed", "hypersurface Picard groups need rank >= 4");
  if (!fan.complete) fail("FanIncomplete", "complete fan required");
  SimplicialRegion region = delta_L(fan);
  if (!region.convex) fail("NotReflexive", "Delta(L) is not convex");
  const Polytope& delta = *region.convex_hull;
  if (!is_reflexive(delta)) fail("NotReflexive", "(Delta(L), L) is not reflexive");

  // Anti-canonical hypotheses on the polytope itself.
  for (const IntVec& ray : fan.rays) {
    int tight = 0;
    for (const Facet& f : delta.facets())
      if (dot(f.normal, to_rat(ray)) == f.offset) ++tight;
    if (tight == 0) fail("Internal", "fan ray off the boundary of Delta(L)");
    if (tight == 1)
      fail("PreconditionFailed",
           "ray " + vec_to_string(ray) + " lies in the interior of a facet of Delta(L)");
  }
  for (const auto& cone : fan.max_cones) {
    bool in_common_facet = false;
    for (const Facet& f : delta.facets()) {
      bool all = true;
      for (int i : cone)
        if (dot(f.normal, to_rat(fan.rays[i])) != f.offset) {
          all = false;
          break;
        }
      if (all) {
        in_common_facet = true;
        break;
      }
    }
    if (!in_common_facet)
      fail("PreconditionFailed", "a max cone does not refine the face fan of Delta(L)");
  }

  PicardReport report;
  report.toric_rank = Int(fan.rays.size()) - fan.rank;
  report.assumptions.push_back("section quasi-smooth (generic with full Newton polygon)");
  report.assumptions.push_back("reflexive anti-canonical hypotheses verified");

  Polytope dual = dual_polytope(delta);
  Int correction_total = 0;
  for (const auto& face : faces_of_codim(delta, 2)) {
    CorrectionTerm term;
    term.face = face.verts;
    term.primal_points = relint_lattice_points(delta, face);
    Polytope::Face df = dual_face(delta, dual, face);
    term.dual_points = relint_lattice_points(dual, df);
    for (const IntVec& x : term.primal_points)
      for (const IntVec& y : term.dual_points)
        if (dot(x, y) != -1) fail("Internal", "correction pair does not pair to -1");
    term.product = Int(term.primal_points.size()) * Int(term.dual_points.size());
    correction_total += term.product;
    report.corrections.push_back(std::move(term));
  }
  report.total_rank = report.toric_rank + correction_total;
  return report;
}

std::vector<IntVec> maximal_ray_set(const Polytope& delta) {
  if (!is_reflexive(delta)) fail("NotReflexive", "maximal ray sets need a reflexive polytope");
  std::vector<IntVec> out;
  for (const IntVec& x : lattice_points(delta)) {
    RatVec xr = to_rat(x);
    if (delta.strictly_contains(xr)) continue;  // interior
    int tight = 0;
    for (const Facet& f : delta.facets())
      if (dot(f.normal, xr) == f.offset) ++tight;
    if (tight == 1) continue;  // facet interior
    out.push_back(x);
  }
  sort_lex(out);
  return out;
}

SmoothnessCertificate smoothness_certificate(const Fan& fan) {
  if (fan.rank != 4) fail("WrongDimension", "smoothness certificates exist for rank 4 only");
  SmoothnessCertificate cert;

  bool hypotheses_ok = true;
  std::optional<Polytope> delta;
  try {
    if (!fan.complete) fail("FanIncomplete", "complete fan required");
    SimplicialRegion region = delta_L(fan);
    if (!region.convex) fail("NotReflexive", "Delta(L) is not convex");
    if (!is_reflexive(*region.convex_hull)) fail("NotReflexive", "(Delta(L), L) not reflexive");
    delta = *region.convex_hull;
    picard_anticanonical(fan);  // verifies the anti-canonical hypotheses
  } catch (const Error& e) {
    hypotheses_ok = false;
    cert.notes.push_back(e.what());
  }

  if (delta) {
    std::vector<IntVec> maximal = maximal_ray_set(*delta);
    std::set<IntVec> have(fan.rays.begin(), fan.rays.end());
    std::set<IntVec> want(maximal.begin(), maximal.end());
    for (const IntVec& r : maximal)
      if (!have.count(r)) cert.missing_rays.push_back(r);
    for (const IntVec& r : fan.rays)
      if (!want.count(r)) cert.extra_rays.push_back(r);
    sort_lex(cert.missing_rays);
    sort_lex(cert.extra_rays);
    cert.maximal = cert.missing_rays.empty() && cert.extra_rays.empty();
  }

  cert.verdict = (cert.maximal && hypotheses_ok) ? SmoothnessCertificate::Verdict::SMOOTH_CY
                                                 : SmoothnessCertificate::Verdict::NOT_CERTIFIED;
  return cert;
}

}  // namespace picard
