#pragma once

#include "fdheat/model.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdheat::cli {

/// Effective settings of one CLI invocation after merging defaults, the
/// JSON config file and command-line flags (in increasing precedence).
struct RunConfig {
  ProblemParams params;
  SchemeKind scheme = SchemeKind::Classical;
  BoundaryKind bc = BoundaryKind::Dirichlet;
  std::optional<ControlProblem> problem;
  std::optional<int> n;
  std::vector<int> n_list;
  std::vector<double> alpha_list;
  std::string study = "state";
  std::optional<std::string> out;
  bool continuous = false;

  bool operator==(const RunConfig&) const = default;
};

/// Flat JSON object whose keys mirror the flag names (`n-list`, `zd`, ...).
std::string to_json(const RunConfig& config);
/// Applies the keys present in `json` on top of `base`. Unknown keys and
/// malformed values raise InvalidArgument.
RunConfig apply_json(RunConfig base, std::string_view json);

/// Reference L2 errors for `table1`: rows h = 1/4 .. 1/64, columns Dirichlet and
/// alpha = 50, 100, 200.
extern const double kTable1Printed[5][4];

/// Runs `fdheat <subcommand> [flags]`. Returns 0 on success, 1 on a
/// computational failure or table mismatch, 2 on usage or config errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fdheat::cli
