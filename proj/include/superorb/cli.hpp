#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superorb {

// Parsed command line; exactly one subcommand per run.
struct RunConfig {
  std::string subcommand;         // validate | compute | fixture | galois | qdim-scan
  std::string input;              // datum path for validate/compute/galois
  std::string model;              // fixture, qdim-scan
  std::string label;              // qdim-scan
  std::string output;             // empty writes to out
  std::string format = "json";    // json | table
  std::string checks = "strict";  // strict exits 1 on failed checks, warn exits 0
  bool no_timestamp = false;
};

// Runs one subcommand. args excludes the program name. Reports go to
// config.output or out, diagnostics to err. Returns 0 on success with all
// checks passing, 1 on validation failure, 2 on usage error. Output is
// byte-deterministic for a fixed input once the timestamp is suppressed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superorb
