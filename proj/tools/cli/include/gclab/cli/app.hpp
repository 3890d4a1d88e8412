#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gclab/cli/config.hpp"
#include "gclab/cli/figures.hpp"
#include "gclab/entanglement.hpp"
#include "gclab/evolution.hpp"

namespace gclab::cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitUnphysical = 3, kExitNotEntangled = 4 };

/// Whole program; argv[0] is ignored. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

void cmd_metrics(const RunConfig& cfg, std::ostream& out);

/// `t_ent=<value|never> method=<m> residual=<r>`.
std::string format_tent(const EntanglementTimeResult& result);
void cmd_tent(const RunConfig& cfg, std::ostream& out);

/// Applies one sweep coordinate to a copy of the base configuration.
RunConfig with_axis_value(const RunConfig& base, const std::string& axis, double value);
void cmd_sweep(const RunConfig& cfg, std::ostream& out);

/// Evolution of one preset curve on the figure grid.
RunConfig preset_config(const CurvePreset& preset);

}  // namespace gclab::cli
