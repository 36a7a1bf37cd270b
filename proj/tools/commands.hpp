#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scherk/report.hpp"

namespace scherk::cli {

// Every tunable the subcommands read. Defaults live here and nowhere else;
// flags and the optional --config file override them.
struct Options {
  std::string signature = "euclidean";
  double a = 0.0;
  double x = 0.0;
  double y = 0.0;
  double xi_re = 0.3;
  double xi_im = 0.0;
  std::int64_t grid = 41;
  double range = 1.0;
  double radius = 0.6;
  std::int64_t n_r = 10;
  std::int64_t n_theta = 32;
  std::int64_t K = 100000;
  std::int64_t N = 100;
  std::int64_t J = 0;  // 0: choose from the tail bound
  std::int64_t n = 3;
  std::string mode = "both";
  std::string guard = "strict";
  std::string generator = "grid";
  std::string format = "obj";
  bool as_printed = false;
  bool disc = false;  // wedata: sweep a polar grid instead of one xi
  std::string out;
  std::optional<double> tol;
  double margin = 1e-3;
};

RunReport cmd_height(const Options& opt);
RunReport cmd_residual(const Options& opt);
RunReport cmd_wedata(const Options& opt);
RunReport cmd_ramanujan(const Options& opt);
RunReport cmd_dirichlet(const Options& opt);
RunReport cmd_pmf(const Options& opt);
RunReport cmd_mesh(const Options& opt);
RunReport cmd_report(const Options& opt);

// Parses argv-style arguments (without the program name), runs the
// subcommand, writes the JSON report to `out` (or --out for report-only
// commands). Returns 0 iff every check passed, 1 on failed checks, 2 on
// invalid arguments or violated preconditions.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scherk::cli
