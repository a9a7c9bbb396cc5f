#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace goeritz::cli {

struct RunConfig {
  int genus = 2;
  int holes = 3;
  std::uint64_t seed = 20240601;
  int grid = 64;
  double eps = 1.0;
  double b0 = 4.0;
  /// Non-positive means "half of the computed kappa_1 kappa_2".
  double kappa = 0.0;
  double r = 10.0;
  double tol = 1e-6;
  std::string format = "text";
  int cases = 500;
  std::string word;
  std::string target;
  /// Extra words (one per line from stdin); processed after `word`.
  std::vector<std::string> batch;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  nlohmann::ordered_json config;
  nlohmann::ordered_json result;
  std::vector<Check> checks;
  int exit_code = 0;
};

/// Thrown for bad arguments; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs one command. Exit code 0 when every check passes, 1 otherwise.
/// Throws UsageError (or MalformedWord) on invalid input.
Report run(const RunConfig& config, const std::string& command);

std::string render_json(const Report& report);
std::string render_text(const Report& report);

/// Full command-line entry point: parses argv, reads a batch word list from
/// `in` when it is not a terminal and --word is absent, writes the report.
int main_entry(int argc, const char* const* argv, std::istream& in, bool stdin_is_tty,
               std::ostream& out, std::ostream& err);

}  // namespace goeritz::cli
