#include "picard/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include <json.hpp>

#include "picard/constructions.hpp"
#include "picard/errors.hpp"
#include "picard/picard.hpp"
#include "picard/polytope.hpp"

namespace picard::io {

using nlohmann::json;

namespace {

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rat r = rat_from_string(j.get<std::string>());
    if (r.get_den() != 1) fail("SchemaError", "expected an integer, got a fraction");
    return r.get_num();
  }
  fail("SchemaError", "expected an integer or integer string");
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return rat_from_string(std::to_string(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  fail("SchemaError", "expected a number string");
}

IntVec int_vec(const json& j) {
  if (!j.is_array() || j.empty()) fail("SchemaError", "expected a nonempty array of integers");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

RatVec rat_vec(const json& j) {
  if (!j.is_array() || j.empty()) fail("SchemaError", "expected a nonempty array of numbers");
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json to_json(const Int& x) { return x.get_str(); }
json to_json(const Rat& x) { return rat_to_string(x); }

json to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const IntVec& v : vs) a.push_back(to_json(v));
  return a;
}

json to_json(const std::vector<RatVec>& vs) {
  json a = json::array();
  for (const RatVec& v : vs) a.push_back(to_json(v));
  return a;
}

json cones_json(const std::vector<std::vector<int>>& cones) {
  json a = json::array();
  for (const auto& c : cones) a.push_back(c);
  return a;
}

json report_json(const PicardReport& report) {
  json corrections = json::array();
  for (const CorrectionTerm& t : report.corrections) {
    json c;
    c["face"] = t.face;
    c["primal_points"] = to_json(t.primal_points);
    c["dual_points"] = to_json(t.dual_points);
    c["product"] = to_json(t.product);
    corrections.push_back(std::move(c));
  }
  json r;
  r["toric_rank"] = to_json(report.toric_rank);
  r["corrections"] = std::move(corrections);
  r["total_rank"] = to_json(report.total_rank);
  r["assumptions"] = report.assumptions;
  return r;
}

Fan fan_from(const JobInput& in) {
  if (!in.lattice_rank || in.rays.empty() || in.max_cones.empty())
    fail("SchemaError", "command needs lattice_rank, rays, and max_cones");
  return validate_fan(*in.lattice_rank, in.rays, in.max_cones);
}

RhoClass rho_from(const JobInput& in, const Fan& fan) {
  if (in.mode == "anticanonical" && !in.rho) return anticanonical_rho(fan);
  if (!in.rho) fail("SchemaError", "command needs rho (or anticanonical mode)");
  return make_rho(*in.rho);
}

Section section_from(const JobInput& in) {
  if (!in.section) fail("SchemaError", "command needs a section (or --assume-generic)");
  return *in.section;
}

Polytope polytope_from(const JobInput& in) {
  if (in.points.empty()) fail("SchemaError", "command needs points");
  return hull(in.points);
}

}  // namespace

JobInput parse_job(const std::string& text, bool assume_generic) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("SchemaError", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("SchemaError", "job input must be a JSON object");

  JobInput in;
  if (j.contains("lattice_rank")) {
    Int r = int_from_json(j["lattice_rank"]);
    if (r < 1 || r > 16) fail("SchemaError", "lattice_rank out of range");
    in.lattice_rank = int(r.get_si());
  }
  if (j.contains("rays"))
    for (const auto& r : j["rays"]) in.rays.push_back(int_vec(r));
  if (j.contains("max_cones"))
    for (const auto& c : j["max_cones"]) {
      std::vector<int> cone;
      for (const auto& x : c) {
        Int i = int_from_json(x);
        cone.push_back(int(i.get_si()));
      }
      in.max_cones.push_back(std::move(cone));
    }
  if (j.contains("rho")) {
    std::vector<Int> rho;
    for (const auto& x : j["rho"]) rho.push_back(int_from_json(x));
    in.rho = std::move(rho);
  }
  if (j.contains("weights")) {
    std::vector<Int> w;
    for (const auto& x : j["weights"]) w.push_back(int_from_json(x));
    in.weights = std::move(w);
  }
  if (j.contains("group"))
    for (const auto& g : j["group"]) {
      RatVec gen = rat_vec(g);
      for (Rat& x : gen) {
        // entries live mod 1
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
        x -= Rat(fl);
      }
      if (!in.group) in.group.emplace();
      in.group->push_back(std::move(gen));
    }
  if (j.contains("mode")) {
    in.mode = j["mode"].get<std::string>();
    if (in.mode != "anticanonical" && in.mode != "general")
      fail("SchemaError", "mode must be 'anticanonical' or 'general'");
  }
  if (j.contains("points"))
    for (const auto& p : j["points"]) in.points.push_back(rat_vec(p));
  if (j.contains("refine_rays"))
    for (const auto& r : j["refine_rays"]) in.refine_rays.push_back(int_vec(r));
  if (j.contains("sigma")) in.sigma = int(int_from_json(j["sigma"]).get_si());

  if (j.contains("section")) {
    const json& s = j["section"];
    Section sec;
    if (s.is_string() && s.get<std::string>() == "GENERIC") {
      sec = Section::make_generic();
    } else if (s.is_object()) {
      if (s.contains("coeffs") && s["coeffs"].is_string() &&
          s["coeffs"].get<std::string>() == "GENERIC") {
        sec = Section::make_generic();
      } else {
        if (!s.contains("points")) fail("SchemaError", "section needs points");
        for (const auto& p : s["points"]) sec.points.push_back(int_vec(p));
        if (s.contains("coeffs")) {
          for (const auto& c : s["coeffs"]) {
            Rat r = rat_from_json(c);
            if (r == 0) fail("SchemaError", "zero section coefficients are not stored");
            sec.coeffs.push_back(r);
          }
          if (sec.coeffs.size() != sec.points.size())
            fail("SchemaError", "section points/coeffs length mismatch");
        } else {
          sec.coeffs.assign(sec.points.size(), Rat(1));
        }
      }
    } else {
      fail("SchemaError", "section must be an object or \"GENERIC\"");
    }
    in.section = std::move(sec);
  }
  if (assume_generic) in.section = Section::make_generic();

  // Canonicalization: lex-sort rays, remap cone indices, reorder rho.
  if (!in.rays.empty()) {
    std::vector<int> order(in.rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lex_less(in.rays[size_t(a)], in.rays[size_t(b)]); });
    std::vector<int> remap(in.rays.size());
    std::vector<IntVec> rays_sorted;
    for (size_t pos = 0; pos < order.size(); ++pos) {
      remap[size_t(order[pos])] = int(pos);
      rays_sorted.push_back(in.rays[size_t(order[pos])]);
    }
    in.rays = std::move(rays_sorted);
    for (auto& cone : in.max_cones) {
      for (int& i : cone) {
        if (i < 0 || i >= int(in.rays.size())) fail("SchemaError", "cone index out of range");
        i = remap[size_t(i)];
      }
      std::sort(cone.begin(), cone.end());
    }
    std::sort(in.max_cones.begin(), in.max_cones.end());
    if (in.rho) {
      if (in.rho->size() != in.rays.size()) fail("SchemaError", "rho length mismatch");
      std::vector<Int> rho_sorted(in.rho->size());
      for (size_t old = 0; old < order.size(); ++old)
        rho_sorted[size_t(remap[old])] = (*in.rho)[old];
      in.rho = std::move(rho_sorted);
    }
  }
  if (in.section && !in.section->generic) {
    std::vector<size_t> order(in.section->points.size());
    std::iota(order.begin(), order.end(), size_t(0));
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return lex_less(in.section->points[a], in.section->points[b]);
    });
    Section sorted;
    for (size_t i : order) {
      sorted.points.push_back(in.section->points[i]);
      sorted.coeffs.push_back(in.section->coeffs[i]);
    }
    in.section = std::move(sorted);
  }
  if (in.group) sort_lex(*in.group);
  {
    std::vector<IntVec> rr = in.refine_rays;
    sort_lex(rr);
    rr.erase(std::unique(rr.begin(), rr.end()), rr.end());
    in.refine_rays = std::move(rr);
  }
  sort_lex(in.points);
  return in;
}

std::string canonical_bytes(const JobInput& in) {
  json j;
  if (in.lattice_rank) j["lattice_rank"] = *in.lattice_rank;
  if (!in.rays.empty()) j["rays"] = to_json(in.rays);
  if (!in.max_cones.empty()) j["max_cones"] = cones_json(in.max_cones);
  if (in.rho) {
    json a = json::array();
    for (const Int& x : *in.rho) a.push_back(to_json(x));
    j["rho"] = std::move(a);
  }
  if (in.weights) {
    json a = json::array();
    for (const Int& x : *in.weights) a.push_back(to_json(x));
    j["weights"] = std::move(a);
  }
  if (in.group) j["group"] = to_json(*in.group);
  if (in.section) {
    if (in.section->generic) {
      j["section"] = "GENERIC";
    } else {
      json s;
      s["points"] = to_json(in.section->points);
      json coeffs = json::array();
      for (const Rat& c : in.section->coeffs) coeffs.push_back(to_json(c));
      s["coeffs"] = std::move(coeffs);
      j["section"] = std::move(s);
    }
  }
  j["mode"] = in.mode;
  if (!in.points.empty()) j["points"] = to_json(in.points);
  if (!in.refine_rays.empty()) j["refine_rays"] = to_json(in.refine_rays);
  if (in.sigma) j["sigma"] = *in.sigma;
  return j.dump();
}

std::string job_hash(const std::string& canonical, const std::string& command) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  mix(canonical);
  mix(command);
  mix(kToolVersion);
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> command_list() {
  return {"fan validate",   "pic toric",     "pic hyp",        "sections basis",
          "polytope dual",  "polytope reflexive", "polytope points", "wps build",
          "quotient build", "simplex check", "triangulate",    "chart"};
}

bool known_command(const std::string& command) {
  auto all = command_list();
  return std::find(all.begin(), all.end(), command) != all.end();
}

namespace {

json dispatch(const std::string& command, const JobInput& in) {
  json result;
  if (command == "fan validate") {
    Fan fan = fan_from(in);
    result["complete"] = fan.complete;
    result["rays"] = int(fan.rays.size());
    result["max_cones"] = int(fan.max_cones.size());
    return result;
  }
  if (command == "pic toric") {
    Fan fan = fan_from(in);
    if (!fan.complete) fail("FanIncomplete", "toric Picard needs a complete fan");
    ToricPicardBasis basis = picard_basis_toric(fan);
    result["toric_rank"] = basis.rank;
    result["basis"] = to_json(basis.class_of);
    return result;
  }
  if (command == "sections basis") {
    Fan fan = fan_from(in);
    RhoClass rho = rho_from(in, fan);
    std::vector<IntVec> pts = section_basis(fan, rho);
    result["points"] = to_json(pts);
    result["count"] = int(pts.size());
    return result;
  }
  if (command == "pic hyp") {
    Fan fan = fan_from(in);
    if (in.mode == "anticanonical") {
      result = report_json(picard_anticanonical(fan));
    } else {
      RhoClass rho = rho_from(in, fan);
      result = report_json(picard_hypersurface(fan, rho, section_from(in)));
    }
    result["mode"] = in.mode;
    return result;
  }
  if (command == "polytope dual") {
    Polytope p = polytope_from(in);
    Polytope d = dual_polytope(p);
    result["vertices"] = to_json(d.vertices());
    return result;
  }
  if (command == "polytope reflexive") {
    Polytope p = polytope_from(in);
    result["integral"] = is_integral(p);
    result["reflexive"] = is_reflexive(p);
    return result;
  }
  if (command == "polytope points") {
    Polytope p = polytope_from(in);
    std::vector<IntVec> pts = lattice_points(p);
    result["points"] = to_json(pts);
    result["count"] = int(pts.size());
    return result;
  }
  if (command == "wps build") {
    if (!in.weights) fail("SchemaError", "wps build needs weights");
    WpsBuild build = weighted_projective(make_weight_system(*in.weights));
    result["lattice_rank"] = build.fan.rank;
    result["rays"] = to_json(build.fan.rays);
    result["max_cones"] = cones_json(build.fan.max_cones);
    result["kernel"] = to_json(build.kernel);
    return result;
  }
  if (command == "quotient build") {
    if (!in.weights) fail("SchemaError", "quotient build needs weights");
    DiagonalGroup g;
    if (in.group) g.gens = *in.group;
    std::optional<std::vector<IntVec>> extra;
    if (!in.refine_rays.empty()) extra = in.refine_rays;
    QuotientBuild build = quotient_toric(make_weight_system(*in.weights), g, extra);
    result["lattice_rank"] = build.fan.rank;
    result["rays"] = to_json(build.fan.rays);
    result["max_cones"] = cones_json(build.fan.max_cones);
    result["delta"] = to_json(build.delta);
    result["q"] = to_json(build.q);
    result["index_in_l"] = to_json(build.index_in_l);
    result["q_in_g"] = build.q_in_g;
    result["nbasis_index"] = build.nbasis_index;
    result["nbasis"] = to_json(build.nbasis);
    return result;
  }
  if (command == "simplex check") {
    if (!in.weights) fail("SchemaError", "simplex check needs weights");
    DiagonalGroup g;
    if (in.group) g.gens = *in.group;
    SimplexCheckResult check = reflexive_simplex_check(make_weight_system(*in.weights), g);
    result["pass"] = check.pass;
    result["weights_ok"] = check.weights_ok;
    result["q_in_g"] = check.q_in_g;
    result["g_in_sd"] = check.g_in_sd;
    result["failed"] = check.failed;
    result["degree"] = to_json(check.degree);
    json dj = json::array();
    for (const Int& d : check.d_j) dj.push_back(to_json(d));
    result["d_j"] = std::move(dj);
    return result;
  }
  if (command == "triangulate") {
    Fan base = fan_from(in);
    if (in.refine_rays.empty()) fail("SchemaError", "triangulate needs refine_rays");
    Fan fan = triangulate_refinement(base, in.refine_rays);
    result["rays"] = to_json(fan.rays);
    result["max_cones"] = cones_json(fan.max_cones);
    result["complete"] = fan.complete;
    return result;
  }
  if (command == "chart") {
    Fan fan = fan_from(in);
    RhoClass rho = rho_from(in, fan);
    Section s = section_from(in);
    json charts = json::array();
    for (size_t k = 0; k < fan.max_cones.size(); ++k) {
      if (in.sigma && int(k) != *in.sigma) continue;
      LocalChart chart = local_chart(fan, fan.max_cones[k], rho, s);
      json c;
      c["sigma"] = chart.sigma;
      json inv = json::array();
      for (const Int& d : chart.group_invariants) inv.push_back(to_json(d));
      c["group_invariants"] = std::move(inv);
      c["z_sigma"] = to_json(chart.z_sigma);
      c["vertex_in_lattice"] = chart.vertex_in_lattice;
      c["support"] = to_json(chart.support);
      c["exponents"] = to_json(chart.exponents);
      charts.push_back(std::move(c));
    }
    if (in.sigma && charts.empty()) fail("SchemaError", "sigma index out of range");
    result["charts"] = std::move(charts);
    return result;
  }
  fail("SchemaError", "unknown command '" + command + "'");
}

}  // namespace

std::string run_command(const std::string& command, const JobInput& in) {
  std::string canonical = canonical_bytes(in);
  json report;
  report["command"] = command;
  report["input_hash"] = job_hash(canonical, command);
  report["tool_version"] = kToolVersion;
  report["ray_order"] = to_json(in.rays);
  report["result"] = dispatch(command, in);
  return report.dump(2) + "\n";
}

std::string error_json(const std::string& code, const std::string& message) {
  json e;
  e["error"] = code;
  e["message"] = message;
  return e.dump(2) + "\n";
}

}  // namespace picard::io
