#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hecke/config.hpp"

namespace hecke::cli {

inline constexpr const char* kHeader = "# crystal-hecke v1";

enum class ExitCode : int { Ok = 0, Mismatch = 1, Usage = 2 };

struct Command {
  std::string subcommand;  // lattice | kappa | sigma | count | verify | appendix-verify
  std::string config_path;
  std::optional<int> n;
  int n_max = 10;
  std::string format;  // empty selects the subcommand default
  std::string order = "kleshchev";
  std::string method = "formula";
  std::string out_path;
  std::uint64_t seed = 1;
  int r = 2;
  int s = 1;
};

/// Reads and validates a JSON config file. Throws ConfigError.
ParamConfig parse_config(const std::string& path);

/// Parses argv into a Command. On --help or a usage error the returned
/// exit code is set and the message has been written to `out` / `err`.
struct ParseResult {
  std::optional<Command> command;
  int exit_code = 0;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a command. Output goes to cmd.out_path when set, else to `out`;
/// diagnostics go to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// One line of the verify suite.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

/// Cross-checks every available identity for `cfg` on levels 0..n_max.
std::vector<CheckResult> verify_suite(const ParamConfig& cfg, int n_max);

/// Writes one PASS/FAIL line per check; returns 0 when all pass, else 1.
int write_checks(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace hecke::cli
