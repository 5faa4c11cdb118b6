#pragma once

// Command-line front end: one subcommand per claim group, a flat key=value
// config file, JSON or CSV reports and a human-readable table on stdout.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "densbench/checks.hpp"

namespace densbench::cli {

enum class Subcommand { Dimensions, Derive, Symmetry, Continuity, DiracConsistency, Orthogonality, All };
enum class Format { Json, Csv };

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 64;

std::string_view to_string(Subcommand s);

struct Command {
  Subcommand subcommand = Subcommand::All;
  std::string config_path;
  std::string out_path;  // empty: densbench-<subcommand>.<format>
  Format format = Format::Json;
  int resolution = 0;    // 0: built-in defaults
  bool refine = false;
  checks::Settings settings;  // config file and flags already applied
  bool help = false;
  std::string help_text;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// `args` excludes the program name. Throws UsageError or IoError (config
/// file unreadable). `--help` yields a Command with `help` set.
Command parse_args(const std::vector<std::string>& args);

/// Runs the checks, prints the table to `out`, names failing claims on
/// `err` and writes the report file. Returns the exit status.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-status mapping for usage and I/O errors.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Pretty JSON with every floating-point value at 17 significant digits.
std::string format_json(const nlohmann::ordered_json& j);

}  // namespace densbench::cli
