#pragma once

// Subcommands of the stardmp tool. Every command returns a JSON report whose
// header echoes the effective configuration, plus the process exit code.
//
// Exit codes:
//   0  success (inverse exists, relation holds, decomposition exists, suite passed)
//   1  input error (malformed document, unknown id, carrier mismatch, budget)
//   2  a negative answer (inverse or decomposition absent, relation fails,
//      some theorem check failed)

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stardmp/cli/document.hpp"
#include "stardmp/dmp/analysis.hpp"
#include "stardmp/suite/suite.hpp"

namespace stardmp::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNegative = 2;

struct CommandResult {
  json report;
  int exit_code = kExitOk;
};

/// Settings shared by the element commands.
struct CommonConfig {
  std::size_t budget = finite::kDefaultBudget;
  std::string out;  // empty: stdout
};

enum class Decomposition { pseudo_core, core_nilpotent };
Decomposition parse_decomposition(std::string_view text);

CommandResult cmd_inverse(const io::Document& doc, InverseKind kind, const CommonConfig& config);
CommandResult cmd_classify(const io::Document& doc, const CommonConfig& config);
CommandResult cmd_decompose(const io::Document& doc, Decomposition which, const CommonConfig& config);
CommandResult cmd_order(const io::Document& a, const io::Document& b, dmp::Relation relation,
                        const CommonConfig& config);
CommandResult cmd_verify(const suite::RunConfig& config, const std::string& out = {});

/// Parses argv, runs the chosen subcommand, writes the report to `out` (or the
/// --out file) and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stardmp::cli
