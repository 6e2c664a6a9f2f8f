#include "picard/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "picard/errors.hpp"
#include "picard/polytope.hpp"
#include "picard/ratlin.hpp"

namespace picard {

Int WeightSystem::degree() const {
  Int d = 0;
  for (const Int& w : weights) d += w;
  return d;
}

WeightSystem make_weight_system(std::vector<Int> weights) {
  if (weights.size() < 2) fail("BadWeights", "need at least two weights");
  for (const Int& w : weights)
    if (w <= 0) fail("BadWeights", "weights must be positive");
  for (size_t i = 0; i < weights.size(); ++i) {
    Int g = 0;
    for (size_t j = 0; j < weights.size(); ++j)
      if (j != i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), weights[j].get_mpz_t());
    if (g != 1)
      fail("BadWeights", "gcd of the weights omitting index " + std::to_string(i) + " is not 1");
  }
  WeightSystem ws;
  ws.weights = std::move(weights);
  return ws;
}

namespace {

IntMat int_inverse(const IntMat& m) {
  int n = m.rows();
  Int det = m.det();
  if (det != 1 && det != -1) fail("Internal", "inverse of a non-unimodular matrix");
  RatMat mq = RatMat::from_int_rows(m.row_list());
  IntMat inv(n, n);
  for (int j = 0; j < n; ++j) {
    RatVec e(size_t(n), Rat(0));
    e[size_t(j)] = 1;
    RatVec col = *solve_square(mq, e);
    for (int i = 0; i < n; ++i) {
      if (col[size_t(i)].get_den() != 1) fail("Internal", "non-integer inverse entry");
      inv.at(i, j) = col[size_t(i)].get_num();
    }
  }
  return inv;
}

std::vector<std::vector<int>> all_subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - int(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

WpsBuild weighted_projective(const WeightSystem& w) {
  int n = int(w.weights.size()) - 1;
  IntMat wcol(n + 1, 1);
  for (int i = 0; i <= n; ++i) wcol.at(i, 0) = w.weights[size_t(i)];
  HnfResult hnf = hermite_normal_form(wcol);
  if (hnf.h.at(0, 0) != 1) fail("Internal", "weights have a common factor");

  // delta_j = U e_j with the first coordinate (the weight direction) dropped.
  std::vector<IntVec> rays;
  for (int j = 0; j <= n; ++j) {
    IntVec d(size_t(n), Int(0));
    for (int i = 1; i <= n; ++i) d[size_t(i) - 1] = hnf.u.at(i, j);
    rays.push_back(std::move(d));
  }
  WpsBuild build;
  build.fan = validate_fan(n, rays, all_subsets_of_size(n + 1, n));
  if (!build.fan.complete) fail("Internal", "weighted projective fan not complete");
  DivisorLattice dl = divisor_lattice(build.fan);
  if (dl.n_basis.size() != 1 || dl.n_basis[0] != w.weights)
    fail("Internal", "kernel of the weighted projective fan is not the weight vector");
  build.kernel = w.weights;
  return build;
}

std::vector<RatVec> delta_Lstar_vertices_wps_ambient(const WeightSystem& w, const RhoClass& rho) {
  int n = int(w.weights.size()) - 1;
  if (int(rho.coeff.size()) != n + 1) fail("SchemaError", "rho length does not match the weights");
  std::vector<RatVec> rows;
  for (int j = 0; j <= n; ++j) {
    RatVec a(size_t(n) + 1);
    Rat sum = 0;
    for (int k = 0; k <= n; ++k)
      if (k != j) sum += Rat(rho.coeff[size_t(k)]) * Rat(w.weights[size_t(k)]);
    for (int i = 0; i <= n; ++i)
      a[size_t(i)] = (i == j) ? sum / Rat(w.weights[size_t(j)]) : Rat(-rho.coeff[size_t(i)]);
    rows.push_back(std::move(a));
  }
  return rows;
}

std::vector<RatVec> delta_Lstar_vertices_wps(const WeightSystem& w, const RhoClass& rho) {
  WpsBuild build = weighted_projective(w);
  std::vector<RatVec> ambient = delta_Lstar_vertices_wps_ambient(w, rho);
  // v solves <delta_i, v> = a_{j,i} for every i.
  std::vector<RatVec> rows;
  for (const IntVec& delta : build.fan.rays) rows.push_back(to_rat(delta));
  RatMat sys = RatMat::from_rows(rows);
  std::vector<RatVec> verts;
  for (const RatVec& a : ambient) {
    auto v = solve_any(sys, a);
    if (!v) fail("Internal", "weighted projective vertex system inconsistent");
    verts.push_back(*v);
  }
  return verts;
}

namespace {

// Basis rows of the lattice exp^{-1}(G) = Z^{n+1} + sum Z g_k, as an integer
// matrix over a common denominator.
struct GroupLattice {
  IntMat basis;  // (n+1) x (n+1) rows over denom
  Int denom;
};

GroupLattice group_lattice(int n1, const DiagonalGroup& g) {
  Int denom = 1;
  for (const RatVec& gen : g.gens) {
    if (int(gen.size()) != n1) fail("NotFiniteGroup", "group generator length mismatch");
    for (const Rat& x : gen) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<IntVec> rows;
  for (int i = 0; i < n1; ++i) {
    IntVec e(size_t(n1), Int(0));
    e[size_t(i)] = denom;
    rows.push_back(std::move(e));
  }
  for (const RatVec& gen : g.gens) {
    IntVec r(size_t(n1), Int(0));
    for (int i = 0; i < n1; ++i) {
      Rat scaled = gen[size_t(i)] * Rat(denom);
      r[size_t(i)] = scaled.get_num();
    }
    rows.push_back(std::move(r));
  }
  HnfResult hnf = hermite_normal_form(IntMat::from_rows(rows));
  GroupLattice gl;
  gl.denom = denom;
  gl.basis = IntMat(n1, n1);
  int k = 0;
  for (int i = 0; i < hnf.h.rows() && k < n1; ++i) {
    IntVec r = hnf.h.row(i);
    if (is_zero(r)) continue;
    for (int j = 0; j < n1; ++j) gl.basis.at(k, j) = r[size_t(j)];
    ++k;
  }
  if (k != n1) fail("Internal", "group lattice rank deficient");
  return gl;
}

// Coordinates of x (over denom) in the lattice basis; nullopt if outside.
std::optional<RatVec> lattice_coords(const GroupLattice& gl, const RatVec& x) {
  int n1 = gl.basis.rows();
  std::vector<RatVec> cols;
  for (int i = 0; i < n1; ++i) {
    RatVec c(size_t(n1), Rat(0));
    for (int j = 0; j < n1; ++j) c[size_t(j)] = make_rat(gl.basis.at(i, j), gl.denom);
    cols.push_back(std::move(c));
  }
  auto sol = solve_square(RatMat::from_cols(cols), x);
  return sol;
}

bool in_lattice(const GroupLattice& gl, const RatVec& x) {
  auto c = lattice_coords(gl, x);
  return c && picard::is_integral(*c);
}

Rat rat_lcm(const Rat& a, const Rat& b) {
  Int num, den;
  mpz_lcm(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_gcd(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return make_rat(num, den);
}

}  // namespace

QuotientBuild quotient_toric(const WeightSystem& w, const DiagonalGroup& g,
                             const std::optional<std::vector<IntVec>>& extra_rays) {
  int n1 = int(w.weights.size());
  int n = n1 - 1;
  GroupLattice gl = group_lattice(n1, g);

  QuotientBuild build;
  RatVec w_rat = to_rat(w.weights);
  auto u = lattice_coords(gl, w_rat);
  if (!u) fail("Internal", "weight vector outside the group lattice");

  // Smallest positive t with t * w in the lattice.
  Rat t(0);
  for (const Rat& ui : *u) {
    if (ui == 0) continue;
    Rat candidate = make_rat(ui.get_den(), abs(ui.get_num()));
    t = (t == 0) ? candidate : rat_lcm(t, candidate);
  }
  if (t == 0) fail("Internal", "weight direction degenerates");
  build.q = scale(t, w_rat);
  build.q_in_g = in_lattice(gl, scale(make_rat(1, w.degree()), w_rat));

  // Integer coordinates of q in the lattice basis; primitive by minimality.
  IntVec c = to_int(scale(t, *u));
  if (content(c) != 1) fail("Internal", "q is not primitive in the group lattice");

  // Unimodular completion with first row c, via the HNF transform of c.
  IntMat ccol(n1, 1);
  for (int i = 0; i < n1; ++i) ccol.at(i, 0) = c[size_t(i)];
  HnfResult chnf = hermite_normal_form(ccol);
  IntMat w_mat = int_inverse(chnf.u.transpose());  // first row = c

  // New basis rows of the lattice: first one is q; the rest present L.
  RatMat basis_rows(n1, n1);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      Rat s = 0;
      for (int k = 0; k < n1; ++k) s += Rat(w_mat.at(i, k)) * make_rat(gl.basis.at(k, j), gl.denom);
      basis_rows.at(i, j) = s;
    }

  // delta_j = coordinates of e_j in the new basis, first coordinate dropped.
  std::vector<RatVec> cols;
  for (int i = 0; i < n1; ++i) {
    RatVec col(size_t(n1), Rat(0));
    for (int j = 0; j < n1; ++j) col[size_t(j)] = basis_rows.at(i, j);
    cols.push_back(std::move(col));
  }
  RatMat bt = RatMat::from_cols(cols);  // rows index ambient coords, cols basis
  std::vector<IntVec> delta;
  for (int j = 0; j < n1; ++j) {
    RatVec e(size_t(n1), Rat(0));
    e[size_t(j)] = 1;
    auto x = solve_square(bt, e);
    if (!x || !picard::is_integral(*x))
      fail("Internal", "standard basis vector has non-integer lattice coordinates");
    IntVec d(size_t(n), Int(0));
    for (int i = 1; i < n1; ++i) d[size_t(i) - 1] = (*x)[size_t(i)].get_num();
    delta.push_back(std::move(d));
  }

  // HNF-canonical presentation of L.
  HnfResult canon = hermite_normal_form(IntMat::from_cols(delta));
  for (int j = 0; j < n1; ++j) delta[size_t(j)] = canon.h.col(j);
  build.delta = delta;

  Fan sigma0 = validate_fan(n, delta, all_subsets_of_size(n1, n));
  if (!sigma0.complete) fail("Internal", "quotient fan not complete");

  {
    std::vector<Int> divisors = quotient_invariants(IntMat::from_rows(delta), n);
    build.index_in_l = 1;
    for (const Int& d : divisors) build.index_in_l *= d;
  }

  Fan fan = sigma0;
  if (extra_rays) {
    try {
      fan = triangulate_refinement(sigma0, *extra_rays);
    } catch (const Error& e) {
      if (e.code() == "RayOutsideSupport" || e.code() == "SchemaError")
        fail("InconsistentRays", e.what());
      throw;
    }
  }
  build.fan = fan;

  // Kernel basis indexed by {0} ∪ (Sigma^1 - Sigma_0^1).
  std::set<IntVec> base_rays(delta.begin(), delta.end());
  int d_total = int(fan.rays.size());
  std::map<IntVec, int> ray_index;
  for (int i = 0; i < d_total; ++i) ray_index[fan.rays[size_t(i)]] = i;

  {
    RatVec v(size_t(d_total), Rat(0));
    for (int j = 0; j < n1; ++j) v[size_t(ray_index.at(delta[size_t(j)]))] = build.q[size_t(j)];
    build.nbasis_index.push_back(-1);
    build.nbasis.push_back(std::move(v));
  }
  std::vector<RatVec> delta_rows;
  for (const IntVec& dvec : delta) delta_rows.push_back(to_rat(dvec));
  RatMat delta_cols = RatMat::from_cols(delta_rows);
  for (int i = 0; i < d_total; ++i) {
    if (base_rays.count(fan.rays[size_t(i)])) continue;
    auto a = solve_any(delta_cols, to_rat(fan.rays[size_t(i)]));
    if (!a) fail("Internal", "extra ray outside the span of the delta rays");
    RatVec v(size_t(d_total), Rat(0));
    v[size_t(i)] = 1;
    for (int j = 0; j < n1; ++j) v[size_t(ray_index.at(delta[size_t(j)]))] -= (*a)[size_t(j)];
    build.nbasis_index.push_back(i);
    build.nbasis.push_back(std::move(v));
  }
  return build;
}

SimplexCheckResult reflexive_simplex_check(const WeightSystem& w, const DiagonalGroup& g,
                                           bool printed_gcd_variant) {
  if (w.weights.size() != 5) fail("WrongArity", "reflexive simplex check needs five weights");
  SimplexCheckResult result;
  result.degree = w.degree();
  for (const Int& wi : w.weights) {
    Int gcd_dw;
    mpz_gcd(gcd_dw.get_mpz_t(), result.degree.get_mpz_t(), wi.get_mpz_t());
    result.d_j.push_back(result.degree / gcd_dw);
  }

  result.weights_ok = true;
  if (!printed_gcd_variant) {
    for (const Int& wi : w.weights)
      if (result.degree % wi != 0) result.weights_ok = false;
  }

  GroupLattice gl = group_lattice(5, g);
  result.q_in_g = in_lattice(gl, scale(make_rat(1, result.degree), to_rat(w.weights)));

  result.g_in_sd = true;
  for (const RatVec& gen : g.gens) {
    Rat trace = 0;
    for (const Rat& x : gen) trace += x;
    if (trace.get_den() != 1) result.g_in_sd = false;
    for (size_t i = 0; i < gen.size(); ++i) {
      Rat scaled = gen[i] * Rat(result.d_j[i]);
      if (scaled.get_den() != 1) result.g_in_sd = false;
    }
  }

  if (!result.weights_ok)
    result.failed = "weights";
  else if (!result.q_in_g)
    result.failed = "scalar group not contained";
  else if (!result.g_in_sd)
    result.failed = "group not inside SD";
  result.pass = result.failed.empty();
  return result;
}

namespace {

struct FacetPoints {
  std::vector<int> ids;  // global ray ids on this facet, insertion order
};

// Star-split insertion: p is added inside the current triangulation.
void insert_point(std::vector<std::vector<int>>& simplices, const std::vector<RatVec>& coords,
                  int p) {
  std::vector<std::vector<int>> next;
  bool found = false;
  for (const auto& s : simplices) {
    // affine barycentric coordinates of p in s
    std::vector<RatVec> rows;
    for (int v : s) {
      RatVec r = coords[size_t(v)];
      r.push_back(Rat(1));
      rows.push_back(std::move(r));
    }
    RatVec rhs = coords[size_t(p)];
    rhs.push_back(Rat(1));
    auto lam = solve_any(RatMat::from_cols(rows), rhs);
    bool inside = lam.has_value();
    if (inside)
      for (const Rat& l : *lam)
        if (l < 0) {
          inside = false;
          break;
        }
    if (!inside) {
      next.push_back(s);
      continue;
    }
    found = true;
    for (size_t v = 0; v < s.size(); ++v) {
      if ((*lam)[v] == 0) continue;
      std::vector<int> split = s;
      split[v] = p;
      std::sort(split.begin(), split.end());
      next.push_back(std::move(split));
    }
  }
  if (!found) fail("Internal", "refinement point escaped its facet triangulation");
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  simplices = std::move(next);
}

}  // namespace

Fan triangulate_refinement(const Fan& base, const std::vector<IntVec>& rays) {
  if (!base.complete) fail("FanIncomplete", "refinement needs a complete base fan");
  SimplicialRegion region = delta_L(base);
  if (!region.convex)
    fail("PreconditionFailed", "refinement triangulation needs a convex Delta(L)");
  const Polytope& delta = *region.convex_hull;

  std::vector<IntVec> all_rays = rays;
  sort_lex(all_rays);
  all_rays.erase(std::unique(all_rays.begin(), all_rays.end()), all_rays.end());
  {
    std::set<IntVec> have(all_rays.begin(), all_rays.end());
    for (const IntVec& r : base.rays)
      if (!have.count(r))
        fail("SchemaError", "base generator missing from the ray list: " + vec_to_string(r));
  }
  for (const IntVec& r : all_rays) {
    RatVec rr = to_rat(r);
    if (!delta.contains(rr) || delta.strictly_contains(rr))
      fail("RayOutsideSupport", "ray not on the boundary of Delta(L): " + vec_to_string(r));
  }

  // Carrier dimension: dim of the minimal face of Delta containing the point.
  auto carrier_dim = [&](const IntVec& x) {
    std::vector<RatVec> tight;
    for (const Facet& f : delta.facets())
      if (dot(f.normal, to_rat(x)) == f.offset) tight.push_back(to_rat(f.normal));
    return delta.dim() - int(independent_subset(tight).size());
  };
  std::vector<int> carrier(all_rays.size());
  for (size_t i = 0; i < all_rays.size(); ++i) carrier[i] = carrier_dim(all_rays[i]);

  std::vector<RatVec> coords;
  for (const IntVec& r : all_rays) coords.push_back(to_rat(r));

  std::set<std::vector<int>> cones;
  for (size_t f = 0; f < delta.facets().size(); ++f) {
    const Facet& facet = delta.facets()[f];
    std::vector<int> on_facet;
    for (size_t i = 0; i < all_rays.size(); ++i)
      if (dot(facet.normal, coords[i]) == facet.offset) on_facet.push_back(int(i));
    std::stable_sort(on_facet.begin(), on_facet.end(), [&](int a, int b) {
      if (carrier[size_t(a)] != carrier[size_t(b)]) return carrier[size_t(a)] < carrier[size_t(b)];
      return lex_less(all_rays[size_t(a)], all_rays[size_t(b)]);
    });

    std::vector<int> facet_vertices;
    for (int i : on_facet)
      if (carrier[size_t(i)] == 0) facet_vertices.push_back(i);
    if (int(facet_vertices.size()) != delta.dim())
      fail("PreconditionFailed", "non-simplex facet of Delta(L) is not supported");

    std::vector<std::vector<int>> simplices = {facet_vertices};
    for (int i : on_facet) {
      if (carrier[size_t(i)] == 0) continue;
      insert_point(simplices, coords, i);
    }
    for (auto& s : simplices) cones.insert(s);
  }

  std::vector<std::vector<int>> max_cones(cones.begin(), cones.end());
  Fan fan = validate_fan(base.rank, all_rays, max_cones);
  if (!fan.complete) fail("Internal", "refinement fan is not complete");

  std::set<int> used;
  for (const auto& c : fan.max_cones)
    for (int i : c) used.insert(i);
  if (int(used.size()) != int(all_rays.size()))
    fail("Internal", "refinement dropped a listed ray");
  return fan;
}

}  // namespace picard
