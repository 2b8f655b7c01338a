#pragma once

#include <ostream>
#include <string>

#include "report.hpp"

namespace opde::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kNotAdmissible = 2,
  kNotSelfAdjoint = 3,
  kVerifyFailed = 4,
  kWeightError = 5,
  kRodriguesError = 6,
  kLibraryError = 7,
};

struct CliConfig {
  std::string command;
  /// Path to the equation JSON, "-" for stdin; empty selects the Appell
  /// equation with the given alpha and beta.
  std::string pde_source;
  std::string weight_source;
  std::string family = "monic";
  std::string alpha = "1";
  std::string beta = "1";
  int N = 6;
  Format format = Format::json;
  /// "<suite>:<n>:<axis>" perturbs one matrix before it is checked. Supported
  /// suites: ttrr, structure, derivative-representation.
  std::string inject_fault;
};

Format parse_format(const std::string& s);

/// Caps N by the OPDE_MAX_DEGREE environment variable, if set.
int effective_degree(int N, std::ostream& err);

/// Runs one command, writing the report to out and diagnostics to err.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace opde::cli
