#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/divisor.hpp"
#include "picard/numeric.hpp"



namespace picard::io {

inline constexpr const char* kToolVersion = "0.1.0";

// Parsed, canonicalized job input. Rays are lex sorted with cone indices
// remapped; fractions arrive reduced through the exact parser.
struct JobInput {
  std::optional<int> lattice_rank;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> max_cones;
  std::optional<std::vector<Int>> rho;
  std::optional<Section> section;
  std::optional<std::vector<Int>> weights;
  std::optional<std::vector<RatVec>> group;
  std::string mode = "general";
  std::vector<RatVec> points;        // polytope commands
  std::vector<IntVec> refine_rays;   // triangulate / quotient build
  std::optional<int> sigma;          // chart command
};

JobInput parse_job(const std::string& text, bool assume_generic);

std::string canonical_bytes(const JobInput& in);

// FNV-1a over canonical bytes, command, and tool version.
std::string job_hash(const std::string& canonical, const std::string& command);

// Dispatches a command; returns the full report as pretty JSON text.
std::string run_command(const std::string& command, const JobInput& in);

bool known_command(const std::string& command);
std::vector<std::string> command_list();

std::string error_json(const std::string& code, const std::string& message);

}  // namespace picard::io
