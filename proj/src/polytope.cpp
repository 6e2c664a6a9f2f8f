#include "picard/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "picard/errors.hpp"
#include "picard/lattice.hpp"
#include "picard/ratlin.hpp"

namespace picard {

namespace {

constexpr int kHullDimensionCap = 6;

Int floor_of(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int ceil_of(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

// Iterate all integer points of [lo_i, hi_i]^d.
template <typename F>
void scan_box(const IntVec& lo, const IntVec& hi, F&& visit) {
  size_t d = lo.size();
  Int cells = 1;
  for (size_t i = 0; i < d; ++i) {
    Int w = hi[i] - lo[i] + 1;
    if (w <= 0) return;
    cells *= w;
    if (cells > 100000000) fail("EnumerationTooLarge", "bounding box too large");
  }
  IntVec x = lo;
  for (;;) {
    visit(const_cast<const IntVec&>(x));
    size_t i = 0;
    while (i < d) {
      ++x[i];
      if (x[i] <= hi[i]) break;
      x[i] = lo[i];
      ++i;
    }
    if (i == d) break;
  }
}

}  // namespace

bool Polytope::contains(const RatVec& x) const {
  for (const AffineEq& eq : aff_)
    if (dot(eq.normal, x) != eq.value) return false;
  for (const Facet& f : facets_)
    if (dot(f.normal, x) < f.offset) return false;
  return true;
}

bool Polytope::strictly_contains(const RatVec& x) const {
  for (const AffineEq& eq : aff_)
    if (dot(eq.normal, x) != eq.value) return false;
  for (const Facet& f : facets_)
    if (dot(f.normal, x) <= f.offset) return false;
  return true;
}

const std::vector<Polytope::Face>& Polytope::faces() const {
  if (faces_built_) return faces_;
  std::set<std::vector<int>> sets;
  std::vector<std::vector<int>> facet_sets(facets_.size());
  for (size_t f = 0; f < facets_.size(); ++f) {
    for (size_t v = 0; v < verts_.size(); ++v)
      if (dot(facets_[f].normal, verts_[v]) == facets_[f].offset)
        facet_sets[f].push_back(int(v));
    sets.insert(facet_sets[f]);
  }
  std::vector<int> all(verts_.size());
  for (size_t v = 0; v < verts_.size(); ++v) all[v] = int(v);
  sets.insert(all);
  // close under intersections
  for (;;) {
    std::set<std::vector<int>> fresh;
    for (const auto& a : sets)
      for (const auto& fs : facet_sets) {
        std::vector<int> c;
        std::set_intersection(a.begin(), a.end(), fs.begin(), fs.end(), std::back_inserter(c));
        if (!c.empty() && !sets.count(c)) fresh.insert(c);
      }
    if (fresh.empty()) break;
    sets.insert(fresh.begin(), fresh.end());
  }

  faces_.clear();
  for (const auto& vs : sets) {
    Face face;
    face.verts = vs;
    for (size_t f = 0; f < facets_.size(); ++f) {
      bool tight = true;
      for (int v : vs)
        if (dot(facets_[f].normal, verts_[v]) != facets_[f].offset) {
          tight = false;
          break;
        }
      if (tight) face.tight.push_back(int(f));
    }
    std::vector<RatVec> diffs;
    for (size_t i = 1; i < vs.size(); ++i) diffs.push_back(sub(verts_[vs[i]], verts_[vs[0]]));
    face.dim = diffs.empty() ? 0 : int(independent_subset(diffs).size());
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  faces_built_ = true;
  return faces_;
}

const Polytope::Face& Polytope::top_face() const {
  const auto& fs = faces();
  return fs.back();
}

Polytope hull(const std::vector<RatVec>& points) {
  if (points.empty()) fail("SchemaError", "hull of an empty point set");
  int d = int(points[0].size());
  if (d > kHullDimensionCap) fail("DimensionCap", "hull limited to ambient rank <= 6");
  for (const RatVec& p : points)
    if (int(p.size()) != d) fail("SchemaError", "ragged point list");

  std::vector<RatVec> pts = points;
  sort_lex(pts);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope poly;
  poly.ambient_ = d;
  const RatVec& v0 = pts[0];
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], v0));
  std::vector<int> basis_idx = independent_subset(diffs);
  int r = int(basis_idx.size());
  poly.dim_ = r;

  // Affine hull equations from the null space of the difference span.
  if (r < d) {
    std::vector<RatVec> rows;
    for (int i : basis_idx) rows.push_back(diffs[i]);
    std::vector<RatVec> normals =
        rows.empty() ? [&] {
          std::vector<RatVec> id;
          for (int j = 0; j < d; ++j) {
            RatVec e(size_t(d), Rat(0));
            e[j] = 1;
            id.push_back(e);
          }
          return id;
        }()
                     : nullspace(RatMat::from_rows(rows));
    for (const RatVec& u : normals) {
      AffineEq eq;
      eq.normal = primitive_direction(u);
      eq.value = dot(eq.normal, v0);
      poly.aff_.push_back(std::move(eq));
    }
  }

  if (r == 0) {
    poly.verts_ = {v0};
    return poly;
  }

  // Coordinate projection that is injective on the affine hull.
  std::vector<RatVec> brows;
  for (int i : basis_idx) brows.push_back(diffs[i]);
  RatMat bmat = RatMat::from_rows(brows);
  std::vector<int> proj;
  {
    // pivot columns of the row space
    RatMat m = bmat;
    int rr = 0;
    for (int c = 0; c < m.cols() && rr < m.rows(); ++c) {
      int p = -1;
      for (int i = rr; i < m.rows(); ++i)
        if (m.at(i, c) != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(rr, j));
      Rat inv = 1 / m.at(rr, c);
      for (int j = c; j < m.cols(); ++j) m.at(rr, j) *= inv;
      for (int i = 0; i < m.rows(); ++i) {
        if (i == rr || m.at(i, c) == 0) continue;
        Rat f = m.at(i, c);
        for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rr, j);
      }
      proj.push_back(c);
      ++rr;
    }
  }

  // Homogenization cone over the projected points.
  std::vector<IntVec> homog;
  homog.reserve(pts.size());
  for (const RatVec& p : pts) {
    RatVec q(size_t(r) + 1);
    for (int j = 0; j < r; ++j) q[j] = p[proj[j]];
    q[r] = 1;
    homog.push_back(primitive_direction(q));
  }
  Cone hc;
  hc.ambient = r + 1;
  hc.gens = homog;
  std::vector<IntVec> normals = facet_normals(hc);

  for (const IntVec& wc : normals) {
    IntVec w_amb(size_t(d), Int(0));
    for (int j = 0; j < r; ++j) w_amb[proj[j]] = wc[j];
    Int g = content(w_amb);
    Facet f;
    f.normal = w_amb;
    for (Int& x : f.normal) x /= g;
    f.offset = make_rat(-wc[r], g);
    poly.facets_.push_back(std::move(f));
  }
  std::sort(poly.facets_.begin(), poly.facets_.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  });

  // Vertices: points whose tight facet normals span the full projected rank.
  for (const RatVec& p : pts) {
    std::vector<RatVec> tight;
    for (const Facet& f : poly.facets_)
      if (dot(f.normal, p) == f.offset) {
        RatVec wn(size_t(r), Rat(0));
        for (int j = 0; j < r; ++j) wn[size_t(j)] = Rat(f.normal[size_t(proj[size_t(j)])]);
        tight.push_back(std::move(wn));
      }
    if (int(independent_subset(tight).size()) == r) poly.verts_.push_back(p);
  }
  sort_lex(poly.verts_);

  // Cross-validation of the two representations.
  for (const RatVec& p : pts)
    if (!poly.contains(p)) fail("Internal", "hull representation mismatch");
  for (const Facet& f : poly.facets_) {
    int cnt = 0;
    for (const RatVec& v : poly.verts_)
      if (dot(f.normal, v) == f.offset) ++cnt;
    if (cnt < r) fail("Internal", "facet with too few vertices");
  }
  return poly;
}

Polytope hull_of_int(const std::vector<IntVec>& points) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const IntVec& p : points) pts.push_back(to_rat(p));
  return hull(pts);
}

Polytope dual_polytope(const Polytope& p) {
  if (p.dim() != p.ambient()) fail("NotFullDimensional", "dual of a lower-dimensional polytope");
  std::vector<RatVec> dual_verts;
  for (const Facet& f : p.facets()) {
    if (f.offset >= 0) fail("OriginNotInterior", "origin is not interior to the polytope");
    Rat scale = -1 / f.offset;
    RatVec v(size_t(p.ambient()), Rat(0));
    for (int j = 0; j < p.ambient(); ++j) v[j] = Rat(f.normal[j]) * scale;
    dual_verts.push_back(std::move(v));
  }
  Polytope d = hull(dual_verts);
  if (d.vertices().size() != p.facets().size())
    fail("Internal", "facet-vertex correspondence broken in dual");
  return d;
}

bool is_integral(const Polytope& p) {
  for (const RatVec& v : p.vertices())
    if (!picard::is_integral(v)) return false;
  return true;
}

bool is_reflexive(const Polytope& p) {
  if (p.dim() != p.ambient()) fail("NotFullDimensional", "reflexivity needs a full-dimensional polytope");
  for (const Facet& f : p.facets())
    if (f.offset >= 0) fail("OriginNotInterior", "origin is not interior to the polytope");
  return is_integral(p) && is_integral(dual_polytope(p));
}

namespace {

void bbox_of(const std::vector<RatVec>& vs, IntVec& lo, IntVec& hi) {
  size_t d = vs[0].size();
  lo.assign(d, Int(0));
  hi.assign(d, Int(0));
  for (size_t j = 0; j < d; ++j) {
    Rat mn = vs[0][j], mx = vs[0][j];
    for (const RatVec& v : vs) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = ceil_of(mn);
    hi[j] = floor_of(mx);
  }
}

}  // namespace

std::vector<IntVec> lattice_points(const Polytope& p) {
  std::vector<IntVec> out;
  if (p.vertices().empty()) return out;
  IntVec lo, hi;
  bbox_of(p.vertices(), lo, hi);
  scan_box(lo, hi, [&](const IntVec& x) {
    if (p.contains(to_rat(x))) out.push_back(x);
  });
  sort_lex(out);
  return out;
}

std::vector<IntVec> relint_lattice_points(const Polytope& p, const Polytope::Face& f) {
  std::vector<IntVec> out;
  if (f.verts.empty()) return out;
  std::vector<RatVec> vs;
  for (int v : f.verts) vs.push_back(p.vertices()[v]);
  IntVec lo, hi;
  bbox_of(vs, lo, hi);
  std::vector<char> tight(p.facets().size(), 0);
  for (int t : f.tight) tight[t] = 1;
  scan_box(lo, hi, [&](const IntVec& x) {
    RatVec xr = to_rat(x);
    for (const AffineEq& eq : p.affine_hull())
      if (dot(eq.normal, xr) != eq.value) return;
    for (size_t i = 0; i < p.facets().size(); ++i) {
      Rat v = dot(p.facets()[i].normal, xr);
      if (tight[i] ? v != p.facets()[i].offset : v <= p.facets()[i].offset) return;
    }
    out.push_back(x);
  });
  sort_lex(out);
  return out;
}

std::vector<Polytope::Face> faces_of_codim(const Polytope& p, int codim) {
  std::vector<Polytope::Face> out;
  for (const auto& f : p.faces())
    if (f.dim == p.dim() - codim) out.push_back(f);
  return out;
}

Polytope::Face dual_face(const Polytope& p, const Polytope& dual, const Polytope::Face& f) {
  std::vector<int> dual_verts;
  for (int t : f.tight) {
    const Facet& facet = p.facets()[t];
    Rat scale = -1 / facet.offset;
    RatVec v(size_t(p.ambient()), Rat(0));
    for (int j = 0; j < p.ambient(); ++j) v[j] = Rat(facet.normal[j]) * scale;
    auto it = std::find(dual.vertices().begin(), dual.vertices().end(), v);
    if (it == dual.vertices().end()) fail("Internal", "dual vertex not found");
    dual_verts.push_back(int(it - dual.vertices().begin()));
  }
  std::sort(dual_verts.begin(), dual_verts.end());
  for (const auto& g : dual.faces())
    if (g.verts == dual_verts) {
      if (f.dim + g.dim != p.dim() - 1) fail("Internal", "face duality dimension mismatch");
      return g;
    }
  fail("Internal", "dual face not found in the dual polytope");
}

std::pair<Polytope, Polytope::Face> dual_face(const Polytope& p, const Polytope::Face& f) {
  if (!is_reflexive(p)) fail("NotReflexive", "dual faces need a reflexive polytope");
  Polytope d = dual_polytope(p);
  Polytope::Face g = dual_face(p, d, f);
  return {std::move(d), std::move(g)};
}

namespace {

// Barycentric test for x in conv({0} ∪ rays of the simplex).
bool simplex_contains(int rank, const std::vector<IntVec>& rays,
                      const std::vector<int>& simplex, const RatVec& x) {
  (void)rank;
  std::vector<RatVec> cols;
  for (int i : simplex) cols.push_back(to_rat(rays[i]));
  auto c = solve_any(RatMat::from_cols(cols), x);  // exact consistency check
  if (!c) return false;
  Rat total = 0;
  for (const Rat& v : *c) {
    if (v < 0) return false;
    total += v;
  }
  return total <= 1;
}

}  // namespace

bool SimplicialRegion::contains(const RatVec& x) const {
  for (const auto& s : simplices)
    if (simplex_contains(rank, rays, s, x)) return true;
  return false;
}

SimplicialRegion delta_L(const Fan& fan) {
  if (!fan.complete) fail("FanIncomplete", "delta_L requires a complete fan");
  SimplicialRegion region;
  region.rank = fan.rank;
  region.rays = fan.rays;
  region.simplices = fan.max_cones;

  // All-ones convexity criterion: each cone's interpolating form must not
  // exceed 1 on any ray.
  region.convex = true;
  for (const auto& cone : fan.max_cones) {
    std::vector<RatVec> rows;
    for (int i : cone) rows.push_back(to_rat(fan.rays[i]));
    RatVec ones(cone.size(), Rat(1));
    auto l = solve_square(RatMat::from_rows(rows), ones);
    if (!l) fail("Internal", "simplicial cone with singular ray matrix");
    for (const IntVec& delta : fan.rays)
      if (dot(*l, to_rat(delta)) > 1) {
        region.convex = false;
        break;
      }
    if (!region.convex) break;
  }

  if (region.convex) {
    std::vector<RatVec> pts;
    pts.push_back(RatVec(size_t(fan.rank), Rat(0)));
    for (const IntVec& r : fan.rays) pts.push_back(to_rat(r));
    region.convex_hull = hull(pts);
  }
  return region;
}

std::vector<IntVec> lattice_points(const SimplicialRegion& region) {
  std::set<IntVec> seen;
  int n = region.rank;
  for (const auto& s : region.simplices) {
    // full-dimensional simplex: invert the ray matrix once per simplex
    RatMat cols(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) cols.at(i, j) = Rat(region.rays[size_t(s[size_t(j)])][i]);
    RatMat inv(n, n);
    for (int j = 0; j < n; ++j) {
      RatVec e(size_t(n), Rat(0));
      e[size_t(j)] = 1;
      auto col = solve_square(cols, e);
      if (!col) fail("Internal", "degenerate simplex in a region");
      for (int i = 0; i < n; ++i) inv.at(i, j) = (*col)[size_t(i)];
    }
    std::vector<RatVec> vs;
    vs.push_back(RatVec(size_t(n), Rat(0)));
    for (int i : s) vs.push_back(to_rat(region.rays[i]));
    IntVec lo, hi;
    bbox_of(vs, lo, hi);
    scan_box(lo, hi, [&](const IntVec& x) {
      if (seen.count(x)) return;
      RatVec c = inv.mul(to_rat(x));
      Rat total = 0;
      for (const Rat& v : c) {
        if (v < 0) return;
        total += v;
      }
      if (total <= 1) seen.insert(x);
    });
  }
  std::vector<IntVec> out(seen.begin(), seen.end());
  sort_lex(out);
  return out;
}

Polytope delta_Lstar_rho(const Cone& c_rho_dual) {
  if (c_rho_dual.gens.empty()) fail("SchemaError", "empty dual cone");
  int nbar = c_rho_dual.ambient;
  std::vector<RatVec> verts;
  for (const IntVec& g : c_rho_dual.gens) {
    const Int& h = g[size_t(nbar) - 1];
    if (h <= 0)
      fail("UnboundedSection",
           "dual-cone generator with nonpositive height: " + vec_to_string(g));
    RatVec v(size_t(nbar) - 1);
    for (int j = 0; j + 1 < nbar; ++j) v[j] = make_rat(g[j], h);
    verts.push_back(std::move(v));
  }
  return hull(verts);
}

}  // namespace picard
