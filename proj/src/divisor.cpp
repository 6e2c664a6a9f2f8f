#include "picard/divisor.hpp"

#include <algorithm>
#include <set>

#include "picard/errors.hpp"
#include "picard/ratlin.hpp"

namespace picard {

DivisorLattice divisor_lattice(const Fan& fan) {
  DivisorLattice dl;
  dl.d = int(fan.rays.size());
  dl.n = fan.rank;
  dl.beta0 = IntMat::from_cols(fan.rays);
  dl.n_basis = integer_kernel(dl.beta0);
  return dl;
}

ToricPicardBasis picard_basis_toric(const Fan& fan) {
  if (!fan.complete) fail("FanIncomplete", "toric Picard basis requires a complete fan");
  DivisorLattice dl = divisor_lattice(fan);
  ToricPicardBasis basis;
  basis.rank = int(dl.n_basis.size());
  basis.class_of.resize(size_t(dl.d));
  for (int ray = 0; ray < dl.d; ++ray) {
    IntVec cls(dl.n_basis.size());
    for (size_t k = 0; k < dl.n_basis.size(); ++k) cls[k] = dl.n_basis[k][ray];
    basis.class_of[ray] = std::move(cls);
  }
  return basis;
}

RhoClass make_rho(std::vector<Int> coeff) {
  if (coeff.empty()) fail("SchemaError", "empty rho");
  bool nonzero = false;
  for (const Int& c : coeff) {
    if (c < 0) fail("SchemaError", "rho coefficients must be nonnegative");
    if (c > 0) nonzero = true;
  }
  if (!nonzero) fail("SchemaError", "rho must be nonzero");
  RhoClass rho;
  rho.coeff = std::move(coeff);
  return rho;
}

RhoClass anticanonical_rho(const Fan& fan) {
  return make_rho(std::vector<Int>(fan.rays.size(), Int(1)));
}

static void check_rho(const Fan& fan, const RhoClass& rho) {
  if (rho.coeff.size() != fan.rays.size())
    fail("SchemaError", "rho length does not match the ray count");
}

Rat SupportFunction::value_on(const Fan& fan, const RatVec& x) const {
  int k = locate_max(fan, x);
  return dot(forms[size_t(k)], x);
}

SupportFunction support_function(const Fan& fan, const RhoClass& rho) {
  if (!fan.complete) fail("FanIncomplete", "support function requires a complete fan");
  check_rho(fan, rho);
  SupportFunction sf;
  for (const auto& cone : fan.max_cones) {
    std::vector<RatVec> rows;
    RatVec rhs;
    for (int i : cone) {
      rows.push_back(to_rat(fan.rays[i]));
      rhs.push_back(Rat(rho.coeff[i]));
    }
    auto l = solve_square(RatMat::from_rows(rows), rhs);
    if (!l) fail("SingularCone", "simplicial cone with singular ray matrix");
    sf.forms.push_back(*l);
  }
  return sf;
}

bool is_convex(const Fan& fan, const RhoClass& rho) {
  SupportFunction sf = support_function(fan, rho);
  for (const RatVec& l : sf.forms)
    for (size_t i = 0; i < fan.rays.size(); ++i)
      if (dot(l, to_rat(fan.rays[i])) > Rat(rho.coeff[i])) return false;
  return true;
}

bool is_strictly_convex(const Fan& fan, const RhoClass& rho) {
  SupportFunction sf = support_function(fan, rho);
  for (size_t k = 0; k < sf.forms.size(); ++k) {
    const auto& cone = fan.max_cones[k];
    for (size_t i = 0; i < fan.rays.size(); ++i) {
      Rat v = dot(sf.forms[k], to_rat(fan.rays[i]));
      if (v > Rat(rho.coeff[i])) return false;
      bool in_cone = std::find(cone.begin(), cone.end(), int(i)) != cone.end();
      if (v == Rat(rho.coeff[i]) && !in_cone) return false;
    }
  }
  return true;
}

IntVec lifted_ray(const Fan& fan, const RhoClass& rho, int ray) {
  IntVec v = fan.rays[size_t(ray)];
  v.push_back(rho.coeff[size_t(ray)]);
  return v;
}

Cone epigraph_cone(const Fan& fan, const RhoClass& rho) {
  check_rho(fan, rho);
  if (!is_convex(fan, rho))
    fail("NotConvexRho", "the epigraph is not the cone on the lifted rays");
  Cone c;
  c.ambient = fan.rank + 1;
  for (size_t i = 0; i < fan.rays.size(); ++i) c.gens.push_back(lifted_ray(fan, rho, int(i)));

  // Strong convexity: the common null space of the per-cone forms is trivial.
  SupportFunction sf = support_function(fan, rho);
  std::vector<RatVec> rows = sf.forms;
  c.strongly_convex = rank(RatMat::from_rows(rows)) == fan.rank;

  // Fundamental generators: every lifted ray spans a 1-dimensional face,
  // decided from the H-representation alpha >= l_sigma(x).
  if (*c.strongly_convex) {
    std::vector<RatVec> hrep;  // (-l_sigma, 1)
    for (const RatVec& l : sf.forms) {
      RatVec h(size_t(fan.rank) + 1);
      for (int j = 0; j < fan.rank; ++j) h[j] = -l[j];
      h[fan.rank] = 1;
      hrep.push_back(std::move(h));
    }
    bool fundamental = true;
    for (const IntVec& g : c.gens) {
      std::vector<RatVec> tight;
      for (const RatVec& h : hrep)
        if (dot(g, h) == 0) tight.push_back(h);
      if (int(independent_subset(tight).size()) != fan.rank) {
        fundamental = false;
        break;
      }
    }
    c.fundamental_generators = fundamental;
  } else {
    c.fundamental_generators = false;
  }
  return c;
}

PRhoMaps p_rho_map(const Fan& fan, const RhoClass& rho) {
  check_rho(fan, rho);
  int n = fan.rank;
  int d = int(fan.rays.size());
  PRhoMaps maps;
  maps.forward = IntMat(n + 1, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < n; ++i) maps.forward.at(i, j) = fan.rays[j][i];
    maps.forward.at(n, j) = rho.coeff[j];
  }
  // dual: (l', a) -> beta^*(l') + a rho, i.e. the transpose of forward.
  maps.dual = maps.forward.transpose();
  return maps;
}

Fan graph_fan(const Fan& fan, const RhoClass& rho) {
  if (!fan.complete) fail("FanIncomplete", "graph fan requires a complete fan");
  check_rho(fan, rho);
  std::vector<IntVec> rays;
  for (size_t i = 0; i < fan.rays.size(); ++i) rays.push_back(lifted_ray(fan, rho, int(i)));
  return make_fan_unchecked(fan.rank + 1, std::move(rays), fan.max_cones, false);
}

Fan starred(const Fan& fan, const RhoClass& rho) {
  Fan graph = graph_fan(fan, rho);
  // q_L lies on the graph only if some cone's form vanishes identically.
  SupportFunction sf = support_function(fan, rho);
  for (size_t k = 0; k < sf.forms.size(); ++k)
    if (is_zero(sf.forms[k]))
      fail("QOnGraph", "rho vanishes on a full cone; the apex lies in the graph");
  IntVec q(size_t(fan.rank) + 1, Int(0));
  q[size_t(fan.rank)] = 1;
  return star_subdivide(graph, q);
}

std::vector<IntVec> section_basis(const Fan& fan, const RhoClass& rho) {
  Cone c_rho = epigraph_cone(fan, rho);  // NotConvexRho when not convex
  Cone dual = dual_cone(c_rho);
  Polytope section = delta_Lstar_rho(dual);
  return lattice_points(section);
}

std::vector<IntVec> section_support(const Fan& fan, const RhoClass& rho, const Section& s) {
  std::vector<IntVec> basis = section_basis(fan, rho);
  if (s.generic) return basis;
  std::set<IntVec> allowed(basis.begin(), basis.end());
  std::vector<IntVec> support = s.points;
  for (const IntVec& p : support)
    if (!allowed.count(p))
      fail("PreconditionFailed",
           "section support point outside the section basis: " + vec_to_string(p));
  sort_lex(support);
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) fail("SchemaError", "empty section support");
  return support;
}

LocalChart local_chart(const Fan& fan, const std::vector<int>& sigma, const RhoClass& rho,
                       const Section& s) {
  check_rho(fan, rho);
  if (int(sigma.size()) != fan.rank) fail("SchemaError", "local charts live on max cones");
  LocalChart chart;
  chart.sigma = sigma;
  std::sort(chart.sigma.begin(), chart.sigma.end());

  std::vector<IntVec> delta_rows;
  for (int i : chart.sigma) delta_rows.push_back(fan.rays[i]);
  chart.group_invariants = quotient_invariants(IntMat::from_rows(delta_rows), fan.rank);

  // z(sigma): annihilates the lifted cone generators, pairs to 1 with q_L.
  int nbar = fan.rank + 1;
  std::vector<RatVec> rows;
  RatVec rhs;
  for (int i : chart.sigma) {
    rows.push_back(to_rat(lifted_ray(fan, rho, i)));
    rhs.push_back(Rat(0));
  }
  RatVec q(size_t(nbar), Rat(0));
  q[size_t(nbar) - 1] = 1;
  rows.push_back(q);
  rhs.push_back(Rat(1));
  auto z = solve_square(RatMat::from_rows(rows), rhs);
  if (!z) fail("SingularCone", "chart system is singular");
  chart.z_sigma = *z;
  chart.vertex_in_lattice = picard::is_integral(chart.z_sigma);

  chart.support = section_support(fan, rho, s);
  for (const IntVec& x : chart.support) {
    IntVec k(size_t(fan.rank), Int(0));
    for (int i = 0; i < fan.rank; ++i) {
      Int v = dot(fan.rays[chart.sigma[i]], x) + rho.coeff[chart.sigma[i]];
      if (v < 0) fail("Internal", "negative chart exponent");
      k[i] = v;
    }
    chart.exponents.push_back(std::move(k));
  }
  return chart;
}

Polytope newton_polygon(const Section& s) {
  if (s.generic)
    fail("SchemaError", "Newton polygon needs an explicit section support");
  if (s.points.empty()) fail("SchemaError", "empty section support");
  return hull_of_int(s.points);
}

bool newton_polygon_full(const Fan& fan, const RhoClass& rho, const Section& s) {
  Cone c_rho = epigraph_cone(fan, rho);
  Polytope section = delta_Lstar_rho(dual_cone(c_rho));
  if (!is_integral(section)) return false;
  if (s.generic) return true;
  std::set<IntVec> support(s.points.begin(), s.points.end());
  for (const RatVec& v : section.vertices())
    if (!support.count(to_int(v))) return false;
  return true;
}

std::vector<std::vector<int>> avoided_orbits(const Fan& fan, const RhoClass& rho,
                                                    const Section& s, const IntVec& v) {
  std::vector<IntVec> support = section_support(fan, rho, s);
  if (std::find(support.begin(), support.end(), v) == support.end())
    fail("VertexNotInSupport", "vertex " + vec_to_string(v) + " is not in the support");

  // The facet of C_rho dual to (v,1) consists of the lifted rays pairing to
  // zero; a cone is avoided when all its lifted generators do.
  std::vector<char> on_facet(fan.rays.size(), 0);
  for (size_t i = 0; i < fan.rays.size(); ++i)
    on_facet[i] = dot(fan.rays[i], v) + rho.coeff[i] == 0;

  std::set<std::vector<int>> cones;
  for (const auto& mc : fan.max_cones) {
    std::vector<int> inside;
    for (int i : mc)
      if (on_facet[i]) inside.push_back(i);
    // every nonempty subset of the on-facet rays spans an avoided cone
    size_t m = inside.size();
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
      std::vector<int> c;
      for (size_t b = 0; b < m; ++b)
        if (mask & (size_t(1) << b)) c.push_back(inside[b]);
      cones.insert(c);
    }
  }
  return {cones.begin(), cones.end()};
}

}  // namespace picard
