#include <doctest.h>

#include "picard/errors.hpp"
#include "picard/json_io.hpp"

using namespace picard;
using picard::io::JobInput;

namespace {

const char* kP4 = R"({
  "lattice_rank": 4,
  "rays": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"],["-1","-1","-1","-1"]],
  "max_cones": [[0,1,2,3],[0,1,2,4],[0,1,3,4],[0,2,3,4],[1,2,3,4]],
  "mode": "anticanonical"
})";

const char* kP4Permuted = R"({
  "lattice_rank": 4,
  "rays": [["-1","-1","-1","-1"],["0","0","0","1"],["0","0","1","0"],["0","1","0","0"],["1","0","0","0"]],
  "max_cones": [[4,3,2,1],[4,3,2,0],[4,3,1,0],[4,2,1,0],[3,2,1,0]],
  "mode": "anticanonical"
})";

const char* kP1Sections = R"({
  "lattice_rank": 1,
  "rays": [["1"],["-1"]],
  "max_cones": [[0],[1]],
  "rho": ["1","2"]
})";

}  // namespace

TEST_CASE("canonicalization") {
  SUBCASE("ray permutations give identical canonical bytes") {
    JobInput a = io::parse_job(kP4, false);
    JobInput b = io::parse_job(kP4Permuted, false);
    CHECK(io::canonical_bytes(a) == io::canonical_bytes(b));
    CHECK(io::job_hash(io::canonical_bytes(a), "pic hyp") ==
          io::job_hash(io::canonical_bytes(b), "pic hyp"));
  }
  SUBCASE("fractions are reduced") {
    JobInput a = io::parse_job(R"({"points": [["2/4","1"],["1","0"],["0","1"]]})", false);
    CHECK(io::canonical_bytes(a).find("1/2") != std::string::npos);
    CHECK(io::canonical_bytes(a).find("2/4") == std::string::npos);
  }
  SUBCASE("bad input is a schema error") {
    CHECK_THROWS_WITH_AS(io::parse_job("{not json", false), doctest::Contains("SchemaError"),
                         Error);
    CHECK_THROWS_WITH_AS(io::parse_job(R"({"rays": [["1","x"]]})", false),
                         doctest::Contains("SchemaError"), Error);
    CHECK_THROWS_WITH_AS(
        io::parse_job(R"({"lattice_rank": 1, "rays": [["1"]], "max_cones": [[3]]})", false),
        doctest::Contains("SchemaError"), Error);
  }
  SUBCASE("zero section coefficients are rejected") {
    CHECK_THROWS_WITH_AS(
        io::parse_job(R"({"section": {"points": [["1"]], "coeffs": ["0"]}})", false),
        doctest::Contains("SchemaError"), Error);
  }
}

TEST_CASE("command reports") {
  SUBCASE("toric rank of projective four-space") {
    JobInput job = io::parse_job(kP4, false);
    std::string report = io::run_command("pic toric", job);
    CHECK(report.find("\"toric_rank\": 1") != std::string::npos);
  }
  SUBCASE("section basis of the projective line") {
    JobInput job = io::parse_job(kP1Sections, false);
    std::string report = io::run_command("sections basis", job);
    CHECK(report.find("\"count\": 4") != std::string::npos);
  }
  SUBCASE("quintic rank through the anticanonical mode") {
    JobInput job = io::parse_job(kP4, true);
    std::string report = io::run_command("pic hyp", job);
    CHECK(report.find("\"total_rank\": \"1\"") != std::string::npos);
  }
  SUBCASE("reports are byte-identical across runs and permutations") {
    JobInput a = io::parse_job(kP4, false);
    JobInput b = io::parse_job(kP4Permuted, false);
    CHECK(io::run_command("pic toric", a) == io::run_command("pic toric", b));
    CHECK(io::run_command("pic hyp", a) == io::run_command("pic hyp", b));
  }
  SUBCASE("polytope commands") {
    JobInput job = io::parse_job(R"({"points": [["1","0"],["0","1"],["-1","-1"]]})", false);
    std::string dual = io::run_command("polytope dual", job);
    CHECK(dual.find("\"2\"") != std::string::npos);
    std::string refl = io::run_command("polytope reflexive", job);
    CHECK(refl.find("\"reflexive\": true") != std::string::npos);
    std::string pts = io::run_command("polytope points", job);
    CHECK(pts.find("\"count\": 4") != std::string::npos);
  }
  SUBCASE("wps build") {
    JobInput job = io::parse_job(R"({"weights": ["1","1","2","2","2"]})", false);
    std::string report = io::run_command("wps build", job);
    CHECK(report.find("\"kernel\"") != std::string::npos);
    CHECK(report.find("-2") != std::string::npos);
  }
  SUBCASE("hypothesis failures carry no rank") {
    // weights (1,1,1,1,3) give a non-reflexive anticanonical polytope
    JobInput job = io::parse_job(R"({
      "lattice_rank": 4,
      "rays": [["-1","-1","-1","-3"],["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]],
      "max_cones": [[0,1,2,3],[0,1,2,4],[0,1,3,4],[0,2,3,4],[1,2,3,4]],
      "mode": "anticanonical"
    })",
                                  true);
    try {
      io::run_command("pic hyp", job);
      FAIL("expected a hypothesis failure");
    } catch (const Error& e) {
      CHECK(picard::is_hypothesis_failure(e.code()));
      CHECK(std::string(e.what()).find("rank") == std::string::npos);
    }
  }
  SUBCASE("chart command") {
    JobInput job = io::parse_job(R"({
      "lattice_rank": 4,
      "rays": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"],["-1","-1","-1","-1"]],
      "max_cones": [[0,1,2,3],[0,1,2,4],[0,1,3,4],[0,2,3,4],[1,2,3,4]],
      "rho": ["1","1","1","1","1"],
      "sigma": 0
    })",
                                  true);
    std::string report = io::run_command("chart", job);
    CHECK(report.find("\"vertex_in_lattice\": true") != std::string::npos);
  }
}

TEST_CASE("canonicalization is idempotent") {
  for (const char* text : {kP4, kP4Permuted, kP1Sections}) {
    JobInput once = io::parse_job(text, false);
    std::string bytes = io::canonical_bytes(once);
    JobInput twice = io::parse_job(bytes, false);
    CHECK(io::canonical_bytes(twice) == bytes);
  }
}
