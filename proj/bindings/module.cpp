// Python bindings for the exact toric Picard machinery. Lattice data crosses
// the boundary as arbitrary-precision Python ints (via decimal strings) and
// rationals as "a/b" strings; run_job exposes the full JSON command surface.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "picard/constructions.hpp"
#include "picard/errors.hpp"
#include "picard/json_io.hpp"
#include "picard/picard.hpp"
#include "picard/polytope.hpp"

namespace py = pybind11;
using namespace picard;

namespace {

Int int_in(const py::handle& obj) { return Int(py::str(obj).cast<std::string>()); }

py::object int_out(const Int& x) {
  PyObject* v = PyLong_FromString(x.get_str().c_str(), nullptr, 10);
  if (!v) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(v);
}

IntVec ivec_in(const py::handle& seq) {
  IntVec v;
  for (const py::handle& x : seq) v.push_back(int_in(x));
  return v;
}

std::vector<IntVec> ivecs_in(const py::handle& seq) {
  std::vector<IntVec> vs;
  for (const py::handle& row : seq) vs.push_back(ivec_in(row));
  return vs;
}

RatVec rvec_in(const py::handle& seq) {
  RatVec v;
  for (const py::handle& x : seq) v.push_back(rat_from_string(py::str(x).cast<std::string>()));
  return v;
}

std::vector<std::vector<int>> cones_in(const py::handle& seq) {
  std::vector<std::vector<int>> cs;
  for (const py::handle& row : seq) {
    std::vector<int> c;
    for (const py::handle& x : row) c.push_back(x.cast<int>());
    cs.push_back(std::move(c));
  }
  return cs;
}

py::list ivec_out(const IntVec& v) {
  py::list out;
  for (const Int& x : v) out.append(int_out(x));
  return out;
}

py::list ivecs_out(const std::vector<IntVec>& vs) {
  py::list out;
  for (const IntVec& v : vs) out.append(ivec_out(v));
  return out;
}

py::list rvec_out(const RatVec& v) {
  py::list out;
  for (const Rat& x : v) out.append(py::str(rat_to_string(x)));
  return out;
}

Fan fan_in(int rank, const py::handle& rays, const py::handle& cones) {
  return validate_fan(rank, ivecs_in(rays), cones_in(cones));
}

py::dict report_out(const PicardReport& report) {
  py::dict d;
  d["toric_rank"] = int_out(report.toric_rank);
  d["total_rank"] = int_out(report.total_rank);
  py::list corrections;
  for (const CorrectionTerm& t : report.corrections) {
    py::dict c;
    c["face"] = t.face;
    c["primal_points"] = ivecs_out(t.primal_points);
    c["dual_points"] = ivecs_out(t.dual_points);
    c["product"] = int_out(t.product);
    corrections.append(std::move(c));
  }
  d["corrections"] = std::move(corrections);
  d["assumptions"] = report.assumptions;
  return d;
}

std::vector<RatVec> points_in(const py::handle& seq) {
  std::vector<RatVec> pts;
  for (const py::handle& row : seq) pts.push_back(rvec_in(row));
  return pts;
}

}  // namespace

PYBIND11_MODULE(_picard, m) {
  m.doc() = "exact rational Picard groups of toric varieties and hypersurfaces";
  m.attr("__version__") = picard::io::kToolVersion;

  py::register_exception<Error>(m, "PicardError");

  m.def("fan_complete", [](int rank, py::sequence rays, py::sequence cones) {
    return fan_in(rank, rays, cones).complete;
  });

  m.def("toric_picard_rank", [](int rank, py::sequence rays, py::sequence cones) {
    return picard_basis_toric(fan_in(rank, rays, cones)).rank;
  });

  m.def("toric_picard_basis", [](int rank, py::sequence rays, py::sequence cones) {
    return ivecs_out(picard_basis_toric(fan_in(rank, rays, cones)).class_of);
  });

  m.def("section_basis",
        [](int rank, py::sequence rays, py::sequence cones, py::sequence rho) {
          Fan fan = fan_in(rank, rays, cones);
          return ivecs_out(section_basis(fan, make_rho(ivec_in(rho))));
        });

  m.def("is_convex", [](int rank, py::sequence rays, py::sequence cones, py::sequence rho) {
    Fan fan = fan_in(rank, rays, cones);
    return is_convex(fan, make_rho(ivec_in(rho)));
  });

  m.def("is_strictly_convex",
        [](int rank, py::sequence rays, py::sequence cones, py::sequence rho) {
          Fan fan = fan_in(rank, rays, cones);
          return is_strictly_convex(fan, make_rho(ivec_in(rho)));
        });

  m.def("picard_anticanonical", [](int rank, py::sequence rays, py::sequence cones) {
    return report_out(picard_anticanonical(fan_in(rank, rays, cones)));
  });

  m.def("picard_hypersurface_generic",
        [](int rank, py::sequence rays, py::sequence cones, py::sequence rho) {
          Fan fan = fan_in(rank, rays, cones);
          return report_out(picard_hypersurface(fan, make_rho(ivec_in(rho)),
                                                Section::make_generic()));
        });

  m.def("dual_polytope_vertices", [](py::sequence points) {
    Polytope d = dual_polytope(hull(points_in(points)));
    py::list out;
    for (const RatVec& v : d.vertices()) out.append(rvec_out(v));
    return out;
  });

  m.def("is_reflexive", [](py::sequence points) { return is_reflexive(hull(points_in(points))); });

  m.def("lattice_points", [](py::sequence points) {
    return ivecs_out(lattice_points(hull(points_in(points))));
  });

  m.def("maximal_ray_set", [](py::sequence points) {
    return ivecs_out(maximal_ray_set(hull(points_in(points))));
  });

  m.def("weighted_projective", [](py::sequence weights) {
    WpsBuild build = weighted_projective(make_weight_system(ivec_in(weights)));
    py::dict d;
    d["lattice_rank"] = build.fan.rank;
    d["rays"] = ivecs_out(build.fan.rays);
    d["max_cones"] = build.fan.max_cones;
    d["kernel"] = ivec_out(build.kernel);
    return d;
  });

  m.def("triangulate_refinement",
        [](int rank, py::sequence rays, py::sequence cones, py::sequence refine_rays) {
          Fan fan = triangulate_refinement(fan_in(rank, rays, cones), ivecs_in(refine_rays));
          py::dict d;
          d["rays"] = ivecs_out(fan.rays);
          d["max_cones"] = fan.max_cones;
          d["complete"] = fan.complete;
          return d;
        });

  m.def("smoothness_verdict", [](int rank, py::sequence rays, py::sequence cones) {
    SmoothnessCertificate cert = smoothness_certificate(fan_in(rank, rays, cones));
    py::dict d;
    d["verdict"] = cert.verdict == SmoothnessCertificate::Verdict::SMOOTH_CY ? "SMOOTH_CY"
                                                                             : "NOT_CERTIFIED";
    d["maximal"] = cert.maximal;
    d["missing_rays"] = ivecs_out(cert.missing_rays);
    d["extra_rays"] = ivecs_out(cert.extra_rays);
    return d;
  });

  m.def(
      "run_job",
      [](const std::string& command, const std::string& json_text, bool assume_generic) {
        picard::io::JobInput job = picard::io::parse_job(json_text, assume_generic);
        return picard::io::run_command(command, job);
      },
      py::arg("command"), py::arg("json_text"), py::arg("assume_generic") = false);
}
