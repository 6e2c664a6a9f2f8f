// Batch CLI: JSON job in, deterministic JSON report out.
//
// Exit codes: 0 success, 1 input/validation error, 2 hypothesis failure
// (the requested formula's preconditions do not hold), 3 I/O error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "picard/errors.hpp"
#include "picard/json_io.hpp"

namespace {

struct Options {
  std::string input = "-";
  std::string output;
  std::string cache_dir;
  bool no_cache = false;
  bool assume_generic = false;
  bool timing = false;
};

int run(const std::string& command, const Options& opt) {
  std::string text;
  if (opt.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(opt.input);
    if (!f) {
      std::cerr << picard::io::error_json("IoError", "cannot read " + opt.input);
      return 3;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }

  auto t0 = std::chrono::steady_clock::now();
  std::string report;
  try {
    picard::io::JobInput job = picard::io::parse_job(text, opt.assume_generic);
    std::string canonical = picard::io::canonical_bytes(job);
    std::string key = picard::io::job_hash(canonical, command);

    std::filesystem::path cache_file;
    if (!opt.cache_dir.empty() && !opt.no_cache) {
      cache_file = std::filesystem::path(opt.cache_dir) / (key + ".json");
      std::ifstream hit(cache_file);
      if (hit) {
        std::ostringstream ss;
        ss << hit.rdbuf();
        report = ss.str();
      }
    }
    if (report.empty()) {
      report = picard::io::run_command(command, job);
      if (!cache_file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_file.parent_path(), ec);
        std::ofstream out(cache_file);
        out << report;
      }
    }
  } catch (const picard::Error& e) {
    std::cerr << picard::io::error_json(e.code(), e.what());
    return picard::is_hypothesis_failure(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << picard::io::error_json("Internal", e.what());
    return 1;
  }

  if (opt.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "{\"timing_ms\": " << ms << "}\n";
  }

  if (opt.output.empty() || opt.output == "-") {
    std::cout << report;
  } else {
    std::ofstream out(opt.output);
    if (!out) {
      std::cerr << picard::io::error_json("IoError", "cannot write " + opt.output);
      return 3;
    }
    out << report;
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.input, "input JSON path, or - for stdin");
  cmd->add_option("--output", opt.output, "output path (default stdout)");
  cmd->add_option("--cache", opt.cache_dir, "result cache directory");
  cmd->add_flag("--no-cache", opt.no_cache, "bypass the cache");
  cmd->add_flag("--assume-generic", opt.assume_generic, "use a generic section");
  cmd->add_flag("--timing", opt.timing, "print timing to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Picard groups of toric varieties and their hypersurfaces"};
  app.require_subcommand(1);

  Options opt;
  std::string chosen;

  // two-word command groups: fan validate, pic toric, pic hyp, ...
  struct Group {
    const char* name;
    std::vector<const char*> subs;
  };
  std::vector<Group> groups = {
      {"fan", {"validate"}},
      {"pic", {"toric", "hyp"}},
      {"sections", {"basis"}},
      {"polytope", {"dual", "reflexive", "points"}},
      {"wps", {"build"}},
      {"quotient", {"build"}},
      {"simplex", {"check"}},
  };
  for (const Group& g : groups) {
    CLI::App* grp = app.add_subcommand(g.name);
    grp->require_subcommand(1);
    for (const char* s : g.subs) {
      CLI::App* sub = grp->add_subcommand(s);
      add_common(sub, opt);
      std::string full = std::string(g.name) + " " + s;
      sub->callback([&chosen, full] { chosen = full; });
    }
  }
  for (const char* single : {"triangulate", "chart"}) {
    CLI::App* sub = app.add_subcommand(single);
    add_common(sub, opt);
    std::string full = single;
    sub->callback([&chosen, full] { chosen = full; });
  }

  CLI11_PARSE(app, argc, argv);
  if (chosen.empty() || !picard::io::known_command(chosen)) {
    std::cerr << picard::io::error_json("SchemaError", "unknown command");
    return 1;
  }
  return run(chosen, opt);
}
