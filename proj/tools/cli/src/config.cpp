#include "gclab/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace gclab::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (const char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r' || ch == '\n') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

double parse_term(std::string_view s, std::string_view whole) {
  double sign = 1.0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  double factor = 1.0;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    factor = std::numbers::pi;
    s.remove_suffix(2);
    if (!s.empty() && s.back() == '*') s.remove_suffix(1);
    if (s.empty()) return sign * factor;
  }
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) {
    throw ConfigError("not a number: '" + std::string(whole) + "'");
  }
  return sign * value * factor;
}

std::size_t parse_count(std::string_view s) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw ConfigError("not a non-negative integer: '" + std::string(s) + "'");
  }
  return value;
}

void expect_arity(const std::vector<std::string>& t, std::size_t n, const char* usage) {
  if (t.size() != n) throw ConfigError(std::string("expected '") + usage + "'");
}

}  // namespace

double parse_number(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_term(s, s);
  const double num = parse_term(trim(s.substr(0, slash)), s);
  const double den = parse_term(trim(s.substr(slash + 1)), s);
  if (den == 0.0) throw ConfigError("division by zero in '" + std::string(s) + "'");
  return num / den;
}

StateSpec StateSpec::parse(std::string_view text) {
  const auto t = tokens(text);
  if (t.empty()) throw ConfigError("empty state; use 'sf a b c1 c2' or 'sqth mu r'");
  StateSpec spec;
  if (t[0] == "sf") {
    expect_arity(t, 5, "sf a b c1 c2");
    spec.kind = Kind::StandardForm;
    spec.sf = {parse_number(t[1]), parse_number(t[2]), parse_number(t[3]), parse_number(t[4])};
  } else if (t[0] == "sqth") {
    expect_arity(t, 3, "sqth mu r");
    spec.kind = Kind::SqueezedThermal;
    spec.mu = parse_number(t[1]);
    spec.r = parse_number(t[2]);
  } else {
    throw ConfigError("unknown state kind '" + t[0] + "'; use 'sf' or 'sqth'");
  }
  return spec;
}

StandardForm StateSpec::resolve() const {
  return kind == Kind::StandardForm ? sf : squeezed_thermal_state(mu, r);
}

BathSpec BathSpec::parse(std::string_view text) {
  const auto t = tokens(text);
  if (t.empty()) throw ConfigError("empty bath; use 'mu m r phi', 'nm N ReM ImM', 'thermal N' or 'vacuum'");
  if (t[0] == "mu") {
    expect_arity(t, 4, "mu m r phi");
    return phenomenological(parse_number(t[1]), parse_number(t[2]), parse_number(t[3]));
  }
  if (t[0] == "nm") {
    expect_arity(t, 4, "nm N ReM ImM");
    return nm(parse_number(t[1]), parse_number(t[2]), parse_number(t[3]));
  }
  if (t[0] == "thermal") {
    expect_arity(t, 2, "thermal N");
    return nm(parse_number(t[1]), 0.0, 0.0);
  }
  if (t[0] == "vacuum") {
    expect_arity(t, 1, "vacuum");
    return phenomenological(1.0, 0.0, 0.0);
  }
  throw ConfigError("unknown bath kind '" + t[0] + "'; use 'mu', 'nm', 'thermal' or 'vacuum'");
}

Bath BathSpec::resolve() const {
  return kind == Kind::Phenomenological ? Bath::from_phenomenological(p0, p1, p2) : Bath::from_nm(p0, {p1, p2});
}

const std::vector<std::string>& sweep_axis_names() {
  static const std::vector<std::string> names{"N1", "N2",  "NB",  "r1",  "r2",      "rB",       "phi2",
                                              "mu1", "mu2", "muB", "r_state", "mu_state", "t"};
  return names;
}

AxisSpec AxisSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::string_view rest = trim(text);
  for (auto colon = rest.find(':'); colon != std::string_view::npos; colon = rest.find(':')) {
    parts.push_back(trim(rest.substr(0, colon)));
    rest.remove_prefix(colon + 1);
  }
  parts.push_back(trim(rest));
  if (parts.size() != 4) throw ConfigError("expected 'name:lo:hi:n'");
  AxisSpec axis;
  axis.name = std::string(parts[0]);
  const auto& names = sweep_axis_names();
  if (std::find(names.begin(), names.end(), axis.name) == names.end()) {
    std::string known;
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown sweep axis '" + axis.name + "' (known: " + known + ")");
  }
  axis.lo = parse_number(parts[1]);
  axis.hi = parse_number(parts[2]);
  axis.n = parse_count(parts[3]);
  if (axis.n == 0) throw ConfigError("axis needs at least one point");
  if (axis.n == 1 && axis.lo != axis.hi) throw ConfigError("a one-point axis needs lo == hi");
  return axis;
}

std::vector<double> AxisSpec::values() const {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = n == 1 ? lo : (i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return v;
}

std::vector<double> RunConfig::grid() const { return times ? *times : linear_grid(t_max, points); }

ChannelSpec RunConfig::channel() const { return {bath1.resolve(), bath2.resolve(), gamma}; }

EvolutionProblem RunConfig::problem() const {
  if (!state) throw ConfigError("missing 'state' (set it with --state or in the config file)");
  return {state->resolve(), channel(), grid()};
}

void RawConfig::merge_text(std::string_view text, const std::string& source) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string origin = source + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(origin + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(origin + ": unknown key '" + key + "'");
    }
    set(key, std::string(trim(line.substr(eq + 1))), origin);
  }
}

void RawConfig::merge_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  merge_text(buf.str(), path);
}

void RawConfig::set(const std::string& key, std::string value, std::string origin) {
  entries_[key] = Entry{std::move(value), std::move(origin)};
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"state", "bath1", "bath2", "gamma", "tmax",  "points",
                                             "times", "t",     "axis1", "axis2", "mode", "output"};
  return keys;
}

RunConfig resolve_config(const RawConfig& raw) {
  RunConfig cfg;
  for (const auto& [key, entry] : raw.entries()) {
    try {
      const std::string& v = entry.value;
      if (key == "state") {
        cfg.state = StateSpec::parse(v);
      } else if (key == "bath1") {
        cfg.bath1 = BathSpec::parse(v);
      } else if (key == "bath2") {
        cfg.bath2 = BathSpec::parse(v);
      } else if (key == "gamma") {
        cfg.gamma = parse_number(v);
        if (!(cfg.gamma > 0.0)) throw ConfigError("gamma must be > 0");
      } else if (key == "tmax") {
        cfg.t_max = parse_number(v);
        if (!(cfg.t_max >= 0.0)) throw ConfigError("tmax must be >= 0");
      } else if (key == "points") {
        cfg.points = parse_count(trim(v));
        if (cfg.points == 0) throw ConfigError("points must be >= 1");
      } else if (key == "times" || key == "t") {
        std::vector<double> grid;
        for (const auto& tok : tokens(v)) grid.push_back(parse_number(tok));
        if (grid.empty()) throw ConfigError("empty time list");
        for (std::size_t i = 0; i < grid.size(); ++i) {
          if (grid[i] < 0.0 || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw ConfigError("times must be >= 0 and strictly increasing");
          }
        }
        cfg.times = std::move(grid);
      } else if (key == "axis1" || key == "axis2") {
        // Stored in key order, so axis1 precedes axis2.
        cfg.axes.push_back(AxisSpec::parse(v));
      } else if (key == "mode") {
        if (trim(v) == "metrics") {
          cfg.mode = SweepMode::Metrics;
        } else if (trim(v) == "tent") {
          cfg.mode = SweepMode::Tent;
        } else {
          throw ConfigError("mode must be 'metrics' or 'tent'");
        }
      } else if (key == "output") {
        cfg.output = std::string(trim(v));
      }
    } catch (const ConfigError& e) {
      throw ConfigError(entry.origin + ": " + key + ": " + e.what());
    }
  }
  if (raw.entries().count("times") && raw.entries().count("t")) {
    throw ConfigError(raw.entries().at("t").origin + ": t: conflicts with 'times' (" +
                      raw.entries().at("times").origin + ")");
  }
  if (cfg.axes.size() == 2 && cfg.axes[0].name == cfg.axes[1].name) {
    throw ConfigError(raw.entries().at("axis2").origin + ": axis2: same parameter as axis1");
  }
  return cfg;
}

}  // namespace gclab::cli
