#include "picard/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "picard/errors.hpp"
#include "picard/lattice.hpp"
#include "picard/ratlin.hpp"

namespace picard {

namespace {

constexpr int kDimensionCap = 6;

struct DDRay {
  IntVec v;
  std::vector<int> zero;  // sorted generator indices tight at v
};

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Extreme rays of {y : <g,y> >= 0 for all g}, for a full-rank generator set.
// Incremental double description with the combinatorial adjacency test.
std::vector<IntVec> dd_dual_rays(const std::vector<IntVec>& gens, int n) {
  std::vector<int> basis_idx = independent_subset_int(gens);
  if (int(basis_idx.size()) < n) fail("NotFullDimensional", "cone does not span the space");

  IntMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = gens[basis_idx[i]][j];
  Int det = b.det();

  RatMat bq = RatMat::from_int_rows(b.row_list());
  std::vector<DDRay> rays;
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = Rat(det);
    RatVec x = *solve_square(bq, e);  // <b_i, x> = det * delta_ij
    DDRay r;
    r.v = primitive_direction(x);
    if (det < 0)
      for (Int& c : r.v) c = -c;
    for (int i = 0; i < n; ++i)
      if (i != j) r.zero.push_back(basis_idx[i]);
    std::sort(r.zero.begin(), r.zero.end());
    rays.push_back(std::move(r));
  }

  std::vector<char> processed(gens.size(), 0);
  for (int i : basis_idx) processed[i] = 1;
  std::vector<int> processed_list = basis_idx;
  std::sort(processed_list.begin(), processed_list.end());

  auto recompute_zero = [&](const IntVec& v) {
    std::vector<int> z;
    for (int k : processed_list)
      if (dot(gens[k], v) == 0) z.push_back(k);
    return z;
  };

  for (size_t k = 0; k < gens.size(); ++k) {
    if (processed[k]) continue;
    const IntVec& g = gens[k];
    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(g, rays[i].v);
      if (val[i] < 0) any_neg = true;
    }
    processed[k] = 1;
    processed_list.insert(std::lower_bound(processed_list.begin(), processed_list.end(), int(k)),
                          int(k));
    if (!any_neg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0)
          rays[i].zero.insert(
              std::lower_bound(rays[i].zero.begin(), rays[i].zero.end(), int(k)), int(k));
      continue;
    }

    std::vector<DDRay> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) next.push_back(rays[i]);
      if (val[i] == 0) {
        DDRay r = rays[i];
        r.zero.insert(std::lower_bound(r.zero.begin(), r.zero.end(), int(k)), int(k));
        next.push_back(std::move(r));
      }
    }
    for (size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (size_t m = 0; m < rays.size(); ++m) {
        if (val[m] >= 0) continue;
        std::vector<int> common = sorted_intersection(rays[p].zero, rays[m].zero);
        bool adjacent = true;
        for (size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == m) continue;
          if (subset_of(common, rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec w(size_t(n), Int(0));
        for (int j = 0; j < n; ++j) w[size_t(j)] = val[p] * rays[m].v[j] - val[m] * rays[p].v[j];
        w = primitive_part(w);
        bool dup = false;
        for (const DDRay& r : next)
          if (r.v == w) {
            dup = true;
            break;
          }
        if (dup) continue;
        DDRay r;
        r.v = std::move(w);
        r.zero = recompute_zero(r.v);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (DDRay& r : rays) out.push_back(std::move(r.v));
  sort_lex(out);
  return out;
}

std::vector<IntVec> nonzero_gens(const Cone& c) {
  std::vector<IntVec> g;
  for (const IntVec& v : c.gens)
    if (!is_zero(v)) g.push_back(v);
  return g;
}

}  // namespace

bool ConeFaceLattice::face_of(const std::vector<int>& a, const std::vector<int>& b) {
  return subset_of(a, b);
}

Cone dual_cone(const Cone& c) {
  if (c.ambient > kDimensionCap)
    fail("DimensionCap", "dual_cone limited to ambient rank <= 6");
  std::vector<IntVec> gens = nonzero_gens(c);
  if (gens.empty()) fail("NotFullDimensional", "dual_cone of the origin cone");
  std::vector<IntVec> rays = dd_dual_rays(gens, c.ambient);
  if (int(independent_subset_int(rays).size()) < c.ambient)
    fail("NotStronglyConvex", "cone contains a line");
  Cone d;
  d.ambient = c.ambient;
  d.gens = std::move(rays);
  return d;
}

std::vector<IntVec> facet_normals(const Cone& c) {
  if (c.ambient > kDimensionCap)
    fail("DimensionCap", "facet enumeration limited to ambient rank <= 6");
  std::vector<IntVec> gens = nonzero_gens(c);
  if (gens.empty()) fail("NotFullDimensional", "facets of the origin cone");
  return dd_dual_rays(gens, c.ambient);
}

namespace {

// Coordinates of span members in a chosen row basis; nullopt if outside.
struct SpanReducer {
  RatMat basis_t;  // columns are basis vectors
  int dim = 0;

  std::optional<RatVec> coords(const RatVec& x) const {
    if (dim == 0) return is_zero(x) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    auto sol = solve_any(basis_t, x);
    if (!sol) return std::nullopt;
    return sol;
  }
};

SpanReducer make_reducer(const std::vector<IntVec>& gens) {
  std::vector<int> idx = independent_subset_int(gens);
  SpanReducer red;
  red.dim = int(idx.size());
  std::vector<RatVec> cols;
  for (int i : idx) cols.push_back(to_rat(gens[i]));
  red.basis_t = RatMat::from_cols(cols);
  return red;
}

// Facet normals (primitive) of a full-dimensional cone in small dimension by
// (r-1)-subset enumeration; empty result means the cone is the whole space.
std::vector<IntVec> facet_normals_lowdim(const std::vector<RatVec>& gens, int r) {
  std::vector<IntVec> normals;
  size_t m = gens.size();
  if (m > 32) fail("TooManyGenerators", "cone membership generator cap exceeded");
  if (r == 1) {
    bool pos = true, neg = true;
    for (const RatVec& g : gens) {
      if (g[0] > 0) neg = false;
      if (g[0] < 0) pos = false;
    }
    if (pos) normals.push_back(IntVec{Int(1)});
    if (neg && !pos) normals.push_back(IntVec{Int(-1)});
    return normals;
  }
  auto consider = [&](const std::vector<int>& subset) {
    std::vector<RatVec> rows;
    for (int i : subset) rows.push_back(gens[i]);
    std::vector<RatVec> ns = nullspace(RatMat::from_rows(rows));
    if (ns.size() != 1) return;  // subset rank below r-1
    IntVec w = primitive_direction(ns[0]);
    bool pos = true, neg = true;
    for (const RatVec& g : gens) {
      Rat d = dot(w, g);
      if (d > 0) neg = false;
      if (d < 0) pos = false;
    }
    if (!pos && !neg) return;
    if (!pos)
      for (Int& x : w) x = -x;
    for (const IntVec& seen : normals)
      if (seen == w) return;
    normals.push_back(std::move(w));
  };
  std::vector<int> subset(size_t(std::max(r - 1, 0)));
  std::function<void(int, int)> rec = [&](int start, int need) {
    if (need == 0) {
      consider(subset);
      return;
    }
    for (int i = start; i + need <= int(m); ++i) {
      subset[subset.size() - need] = i;
      rec(i + 1, need - 1);
    }
  };
  if (r >= 1) rec(0, r - 1);
  return normals;
}

}  // namespace

bool cone_contains(const Cone& c, const RatVec& x) {
  std::vector<IntVec> gens = nonzero_gens(c);
  if (gens.empty()) return is_zero(x);
  SpanReducer red = make_reducer(gens);
  auto xr = red.coords(x);
  if (!xr) return false;
  int r = red.dim;
  std::vector<RatVec> gr;
  gr.reserve(gens.size());
  for (const IntVec& g : gens) gr.push_back(*red.coords(to_rat(g)));
  for (const IntVec& w : facet_normals_lowdim(gr, r))
    if (dot(w, *xr) < 0) return false;
  return true;
}

bool cone_contains(const Cone& c, const IntVec& x) { return cone_contains(c, to_rat(x)); }

ConeFaceLattice cone_faces(const Cone& c) {
  std::vector<IntVec> gens = c.gens;
  for (const IntVec& g : gens)
    if (is_zero(g)) fail("ZeroVector", "zero generator in cone_faces");

  ConeFaceLattice lattice;
  int cone_dim = int(independent_subset_int(gens).size());
  lattice.by_dim.assign(size_t(cone_dim) + 1, {});

  auto dim_of = [&](const std::vector<int>& face) {
    std::vector<IntVec> sel;
    for (int i : face) sel.push_back(gens[i]);
    return int(independent_subset_int(sel).size());
  };

  std::set<std::vector<int>> faces;
  std::vector<int> all(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) all[i] = int(i);

  bool simplicial = cone_dim == int(gens.size());
  if (simplicial) {
    // all generator subsets
    size_t m = gens.size();
    if (m > 20) fail("TooManyGenerators", "face lattice cap exceeded");
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
      std::vector<int> f;
      for (size_t i = 0; i < m; ++i)
        if (mask & (size_t(1) << i)) f.push_back(int(i));
      faces.insert(f);
    }
  } else {
    // from the H-representation, in span coordinates
    SpanReducer red = make_reducer(gens);
    std::vector<RatVec> gr;
    for (const IntVec& g : gens) gr.push_back(*red.coords(to_rat(g)));
    std::vector<IntVec> normals = facet_normals_lowdim(gr, red.dim);
    std::vector<std::vector<int>> facet_sets;
    for (const IntVec& w : normals) {
      std::vector<int> s;
      for (size_t i = 0; i < gr.size(); ++i)
        if (dot(gr[i], w) == 0) s.push_back(int(i));
      facet_sets.push_back(std::move(s));
    }
    // a pointed full-dim-in-span cone is required for a generator-indexed lattice
    if (normals.empty() || rank(RatMat::from_int_rows(normals)) < red.dim)
      fail("NotStronglyConvex", "face lattice needs a pointed cone");
    faces.insert(all);
    std::set<std::vector<int>> frontier(facet_sets.begin(), facet_sets.end());
    while (!frontier.empty()) {
      std::set<std::vector<int>> fresh;
      for (const auto& f : frontier) {
        if (faces.insert(f).second) {
          for (const auto& fs : facet_sets) {
            std::vector<int> g = sorted_intersection(f, fs);
            if (!faces.count(g)) fresh.insert(g);
          }
        }
      }
      frontier = std::move(fresh);
    }
    faces.insert(std::vector<int>{});
  }

  for (const auto& f : faces) lattice.by_dim[size_t(dim_of(f))].push_back(f);
  for (auto& level : lattice.by_dim) std::sort(level.begin(), level.end());
  return lattice;
}

}  // namespace picard
