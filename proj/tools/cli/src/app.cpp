#include "gclab/cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "gclab/cli/csv.hpp"
#include "gclab/error.hpp"

namespace gclab::cli {
namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ReferencePhase: return kExitConfig;
    case ErrorKind::NotEntangledAtStart: return kExitNotEntangled;
    default: return kExitUnphysical;
  }
}

// Writes to `path`, or to `fallback` when the path is empty.
template <class Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ostringstream buf;
  fn(buf);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output file '" + path + "'");
  file << buf.str();
  if (!file.flush()) throw ConfigError("failed writing '" + path + "'");
}

BathSpec nm_with_n(const BathSpec& spec, double n) {
  const Bath b = spec.resolve();
  return BathSpec::nm(n, b.M().real(), b.M().imag());
}

enum class PhenField { Mu, R, Phi };

BathSpec phen_with(const BathSpec& spec, PhenField field, double value) {
  const Bath b = spec.resolve();
  BathParameters p = b.phenomenological();
  (field == PhenField::Mu ? p.mu : field == PhenField::R ? p.r : p.phi) = value;
  return BathSpec::phenomenological(p.mu, p.r, p.phi);
}

}  // namespace

void cmd_metrics(const RunConfig& cfg, std::ostream& out) { write_metrics_csv(out, time_series(cfg.problem())); }

std::string format_tent(const EntanglementTimeResult& result) {
  std::string s = "t_ent=";
  s += result.never() ? std::string("never") : format_number(*result.t_ent);
  s += " method=";
  s += to_string(result.method);
  s += " residual=" + format_number(result.residual);
  return s;
}

void cmd_tent(const RunConfig& cfg, std::ostream& out) {
  const EvolutionProblem p = cfg.problem();
  out << format_tent(entanglement_time(p.initial, p.channel)) << '\n';
}

RunConfig with_axis_value(const RunConfig& base, const std::string& axis, double value) {
  RunConfig cfg = base;
  if (axis == "N1" || axis == "NB") cfg.bath1 = nm_with_n(cfg.bath1, value);
  if (axis == "N2" || axis == "NB") cfg.bath2 = nm_with_n(cfg.bath2, value);
  if (axis == "r1" || axis == "rB") cfg.bath1 = phen_with(cfg.bath1, PhenField::R, value);
  if (axis == "r2" || axis == "rB") cfg.bath2 = phen_with(cfg.bath2, PhenField::R, value);
  if (axis == "mu1" || axis == "muB") cfg.bath1 = phen_with(cfg.bath1, PhenField::Mu, value);
  if (axis == "mu2" || axis == "muB") cfg.bath2 = phen_with(cfg.bath2, PhenField::Mu, value);
  if (axis == "phi2") cfg.bath2 = phen_with(cfg.bath2, PhenField::Phi, value);
  if (axis == "r_state" || axis == "mu_state") {
    if (!cfg.state || cfg.state->kind != StateSpec::Kind::SqueezedThermal) {
      throw ConfigError("axis " + axis + " needs a squeezed thermal state ('sqth mu r')");
    }
    (axis == "r_state" ? cfg.state->r : cfg.state->mu) = value;
  }
  if (axis == "t") cfg.times = std::vector<double>{value};
  return cfg;
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.axes.empty() || cfg.axes.size() > 2) throw ConfigError("sweep needs axis1 and optionally axis2");
  const bool tent = cfg.mode == SweepMode::Tent;
  std::vector<const AxisSpec*> shown;
  for (const auto& axis : cfg.axes) {
    if (axis.name == "t" && tent) throw ConfigError("a t axis makes no sense for t_ent sweeps");
    if (axis.name != "t") shown.push_back(&axis);
  }
  if (!cfg.state) throw ConfigError("missing 'state' (set it with --state or in the config file)");

  std::ostringstream buf;
  for (const auto* axis : shown) buf << axis->name << ',';
  buf << (tent ? std::string_view("t_ent") : kMetricsHeader) << '\n';

  const std::vector<double> inner = cfg.axes.size() == 2 ? cfg.axes[1].values() : std::vector<double>{0.0};
  for (const double v1 : cfg.axes[0].values()) {
    const RunConfig outer_cfg = with_axis_value(cfg, cfg.axes[0].name, v1);
    for (const double v2 : inner) {
      const RunConfig point = cfg.axes.size() == 2 ? with_axis_value(outer_cfg, cfg.axes[1].name, v2) : outer_cfg;
      std::string prefix;
      if (cfg.axes[0].name != "t") prefix += format_number(v1) + ',';
      if (cfg.axes.size() == 2 && cfg.axes[1].name != "t") prefix += format_number(v2) + ',';
      if (tent) {
        const EvolutionProblem p = point.problem();
        std::string cell;
        try {
          const EntanglementTimeResult r = entanglement_time(p.initial, p.channel);
          cell = r.never() ? "never" : format_number(*r.t_ent);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotEntangledAtStart) throw;
          cell = "separable";
        }
        buf << prefix << cell << '\n';
      } else {
        for (const MetricsRow& row : time_series(point.problem())) buf << prefix << format_metrics(row) << '\n';
      }
    }
  }
  out << buf.str();
}

RunConfig preset_config(const CurvePreset& preset) {
  RunConfig cfg;
  cfg.state = StateSpec::parse(preset.state);
  cfg.bath1 = BathSpec::parse(preset.bath1);
  cfg.bath2 = BathSpec::parse(preset.bath2);
  cfg.t_max = kFigureTmax;
  cfg.points = kFigurePoints;
  return cfg;
}

namespace {

struct FlagSpec {
  const char* flag;
  const char* key;
  int max_tokens;
  const char* help;
};

constexpr FlagSpec kRunFlags[] = {
    {"--state", "state", 5, "sf A B C1 C2 | sqth MU R"},
    {"--bath1", "bath1", 4, "mu MU R PHI | nm N REM IMM | thermal N | vacuum"},
    {"--bath2", "bath2", 4, "mu MU R PHI | nm N REM IMM | thermal N | vacuum"},
    {"--gamma", "gamma", 1, "damping rate (default 1)"},
    {"--tmax", "tmax", 1, "end of the time grid (default 3)"},
    {"--points", "points", 1, "grid points including t=0 (default 301)"},
    {"--times", "times", -1, "explicit time list, overrides tmax/points"},
    {"--t", "t", 1, "single evaluation time"},
    {"--axis1", "axis1", 1, "sweep axis NAME:LO:HI:N"},
    {"--axis2", "axis2", 1, "second sweep axis NAME:LO:HI:N"},
    {"--mode", "mode", 1, "sweep output: metrics | tent"},
    {"-o,--output", "output", 1, "write to FILE instead of stdout"},
};

struct Command {
  explicit Command(CLI::App* sub) : app(sub) {}

  CLI::App* app;
  std::string config_path;
  std::map<std::string, std::vector<std::string>> values;
  std::map<std::string, CLI::Option*> options;
};

void add_run_flags(Command& cmd) {
  cmd.app->add_option("--config", cmd.config_path, "key = value configuration file");
  for (const FlagSpec& f : kRunFlags) {
    CLI::Option* opt = cmd.app->add_option(f.flag, cmd.values[f.key], f.help);
    if (f.max_tokens == 1) {
      opt->expected(1);
    } else {
      opt->expected(1, f.max_tokens < 0 ? CLI::detail::expected_max_vector_size : f.max_tokens);
    }
    opt->allow_extra_args();
    cmd.options[f.key] = opt;
  }
}

RawConfig collect(const Command& cmd) {
  RawConfig raw;
  if (!cmd.config_path.empty()) raw.merge_file(cmd.config_path);
  for (const auto& [key, opt] : cmd.options) {
    if (opt->count() == 0) continue;
    std::string joined;
    for (const auto& tok : cmd.values.at(key)) joined += (joined.empty() ? "" : " ") + tok;
    raw.set(key, joined, opt->get_name());
  }
  return raw;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-mode Gaussian states in uncorrelated Gaussian channels", "gclab"};
  app.set_version_flag("--version", "gclab 0.1.0 (figure presets v" + std::to_string(kFigurePresetVersion) + ")");
  app.require_subcommand(1, 1);

  Command metrics{app.add_subcommand("metrics", "time series of purity, entropy, mutual information and E_N")};
  Command tent{app.add_subcommand("tent", "entanglement time t_ent")};
  Command sweep{app.add_subcommand("sweep", "grid over one or two parameters")};
  for (Command* c : {&metrics, &tent, &sweep}) add_run_flags(*c);

  CLI::App* figure = app.add_subcommand("figure", "write the preset curves of figure N as CSV files");
  std::string figure_n;
  std::string figure_prefix;
  figure->add_option("n", figure_n, "figure number 1..8")->required();
  figure->add_option("-o,--output", figure_prefix, "file prefix (default figN); writes PREFIX_curveK.csv");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (figure->parsed()) {
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(figure_n, &used);
        if (used != figure_n.size()) n = 0;
      } catch (const std::exception&) {
        n = 0;
      }
      if (n < 1 || n > 8) throw ConfigError("figure number must be 1..8, got '" + figure_n + "'");
      const std::string prefix = figure_prefix.empty() ? "fig" + std::to_string(n) : figure_prefix;
      for (const CurvePreset& preset : figure_presets()) {
        if (preset.figure != n) continue;
        std::vector<MetricsRow> rows;
        try {
          rows = time_series(preset_config(preset).problem());
        } catch (const Error& e) {
          err << "gclab: warning: figure " << n << " curve " << preset.curve << " (" << preset.style
              << ") skipped: " << e.what() << '\n';
          continue;
        }
        const std::string path = prefix + "_curve" + std::to_string(preset.curve) + ".csv";
        with_output(path, out, [&](std::ostream& os) { write_metrics_csv(os, rows); });
        out << path << ": " << preset.style << ", " << preset.quantity << ", state " << preset.state << ", bath1 "
            << preset.bath1 << ", bath2 " << preset.bath2 << '\n';
      }
      return kExitOk;
    }

    for (Command* c : {&metrics, &tent, &sweep}) {
      if (!c->app->parsed()) continue;
      const RunConfig cfg = resolve_config(collect(*c));
      with_output(cfg.output, out, [&](std::ostream& os) {
        if (c == &metrics) cmd_metrics(cfg, os);
        if (c == &tent) cmd_tent(cfg, os);
        if (c == &sweep) cmd_sweep(cfg, os);
      });
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "gclab: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotEntangledAtStart) {
      err << "gclab: not entangled at start (E_N = 0 at t=0): " << e.what() << '\n';
    } else {
      err << "gclab: error: " << e.what() << '\n';
    }
    return exit_code(e.kind());
  }
}

}  // namespace gclab::cli
