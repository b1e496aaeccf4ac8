#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "homhopf/report.hpp"

namespace homhopf {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitInputError = 2 };

/// Runs one command; args[0] is the program name. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The machine-readable form of a report used by --json.
nlohmann::json report_to_json(const AxiomReport& r);

/// Composite basis names: "a#h" for smash constructions, "a|h" for double
/// cross products, "f*" for dual basis elements.
std::vector<std::string> smash_basis(const std::vector<std::string>& b, const std::vector<std::string>& h);
std::vector<std::string> cross_basis(const std::vector<std::string>& b, const std::vector<std::string>& h);
std::vector<std::string> dual_basis(const std::vector<std::string>& h);

}  // namespace homhopf
