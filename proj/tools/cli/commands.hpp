#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace ehrhart::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInvariantViolation = 2,
};

int run_analyze(const std::vector<std::string>& files, const AnalyzeOptions& options, bool as_json,
                unsigned jobs, std::ostream& out, std::ostream& err);
int run_poly(const std::string& coeffs, double tol, bool as_json, std::ostream& out, std::ostream& err);
int run_tables(int dim, bool as_json, std::ostream& out, std::ostream& err);
int run_fixtures(double tol, bool as_json, std::ostream& out, std::ostream& err);

// Full command line (argv[0] included); returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ehrhart::cli
