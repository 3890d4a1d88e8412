#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gclab/channel.hpp"
#include "gclab/covariance.hpp"
#include "gclab/evolution.hpp"

namespace gclab::cli {

/// Malformed or inconsistent configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plain numbers plus fractions and multiples of pi: "0.25", "1/6", "pi/4", "-3pi/8".
double parse_number(std::string_view text);

/// `sf a b c1 c2` or `sqth mu r`.
struct StateSpec {
  enum class Kind { StandardForm, SqueezedThermal };
  Kind kind{Kind::StandardForm};
  StandardForm sf;
  double mu{1.0};
  double r{0.0};

  static StateSpec parse(std::string_view text);
  StandardForm resolve() const;
};

/// `mu <mu> <r> <phi>`, `nm <N> <ReM> <ImM>`, `thermal <N>` or `vacuum`.
struct BathSpec {
  enum class Kind { Phenomenological, NM };
  Kind kind{Kind::Phenomenological};
  double p0{1.0}, p1{0.0}, p2{0.0};

  static BathSpec parse(std::string_view text);
  static BathSpec phenomenological(double mu, double r, double phi) { return {Kind::Phenomenological, mu, r, phi}; }
  static BathSpec nm(double n, double re_m, double im_m) { return {Kind::NM, n, re_m, im_m}; }
  Bath resolve() const;
};

/// `name:lo:hi:n`, a linear grid over one sweep parameter.
struct AxisSpec {
  std::string name;
  double lo{};
  double hi{};
  std::size_t n{1};

  static AxisSpec parse(std::string_view text);
  std::vector<double> values() const;
};

/// Names accepted by AxisSpec.
const std::vector<std::string>& sweep_axis_names();

enum class SweepMode { Metrics, Tent };

struct RunConfig {
  std::optional<StateSpec> state;
  BathSpec bath1 = BathSpec::phenomenological(1.0, 0.0, 0.0);
  BathSpec bath2 = BathSpec::phenomenological(1.0, 0.0, 0.0);
  double gamma{1.0};
  double t_max{3.0};
  std::size_t points{301};
  /// Explicit grid; overrides t_max/points.
  std::optional<std::vector<double>> times;
  std::vector<AxisSpec> axes;
  SweepMode mode{SweepMode::Metrics};
  std::string output;

  std::vector<double> grid() const;
  ChannelSpec channel() const;
  /// Needs `state`; throws ConfigError otherwise.
  EvolutionProblem problem() const;
};

/// Key/value pairs with where each came from, for error messages.
class RawConfig {
 public:
  struct Entry {
    std::string value;
    std::string origin;
  };

  /// Lines of `key = value`; `#` starts a comment, blank lines are ignored.
  void merge_text(std::string_view text, const std::string& source);
  void merge_file(const std::string& path);
  void set(const std::string& key, std::string value, std::string origin);

  const std::map<std::string, Entry>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

/// Keys understood by RunConfig.
const std::vector<std::string>& config_keys();

RunConfig resolve_config(const RawConfig& raw);

}  // namespace gclab::cli
