#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gclab/cli/app.hpp"
#include "gclab/cli/config.hpp"
#include "gclab/cli/csv.hpp"
#include "gclab/cli/figures.hpp"
#include "gclab/measures.hpp"

using namespace gclab;
using namespace gclab::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gclab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<double> column(const CsvTable& t, std::string_view name) {
  std::vector<double> v;
  const std::size_t c = t.column(name);
  for (const auto& row : t.rows) v.push_back(std::stod(row[c]));
  return v;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("gclab_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

const std::vector<std::string> kTmsvThermal{"metrics", "--state", "sqth", "1", "1", "--bath1", "mu", "1/2", "0", "0",
                                            "--bath2", "mu",   "1/2", "0", "0"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("number syntax") {
  CHECK(parse_number("0.25") == 0.25);
  CHECK(parse_number("1/6") == doctest::Approx(1.0 / 6));
  CHECK(parse_number("pi/4") == doctest::Approx(std::numbers::pi / 4));
  CHECK(parse_number("-3pi/8") == doctest::Approx(-3 * std::numbers::pi / 8));
  CHECK(parse_number(" -1 ") == -1.0);
  CHECK_THROWS_AS(parse_number("abc"), ConfigError);
  CHECK_THROWS_AS(parse_number("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_number(""), ConfigError);
}

TEST_CASE("config file with flag override") {
  RawConfig raw;
  raw.merge_text("# comment\nstate = sf 2 1 1 -1\n\nbath1 = thermal 0.5  # trailing\ngamma = 2\n", "run.cfg");
  raw.set("gamma", "3", "--gamma");
  const RunConfig cfg = resolve_config(raw);
  CHECK(cfg.gamma == 3.0);
  CHECK(cfg.state->sf == StandardForm{2, 1, 1, -1});
  CHECK(cfg.bath1.resolve().N() == 0.5);
  CHECK(cfg.bath2.resolve().mu() == 1.0);
  CHECK(cfg.grid().size() == 301);
}

TEST_CASE("config errors carry their origin") {
  RawConfig raw;
  CHECK_THROWS_WITH_AS(raw.merge_text("state = sf 2 1 1 -1\nbogus = 1\n", "a.cfg"), "a.cfg:2: unknown key 'bogus'",
                       ConfigError);
  CHECK_THROWS_WITH_AS(raw.merge_text("\n\nno equals sign\n", "b.cfg"), "b.cfg:3: expected 'key = value'", ConfigError);
  RawConfig bad;
  bad.merge_text("bath2 = mu x 0 0\n", "c.cfg");
  CHECK_THROWS_WITH_AS(resolve_config(bad), "c.cfg:1: bath2: not a number: 'x'", ConfigError);

  const Run r = run({"metrics", "--state", "sf", "2", "1", "1", "-1", "--points", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--points") != std::string::npos);
  CHECK(run({"metrics"}).code == 2);
  CHECK(run({"metrics", "--config", "/nonexistent/file.cfg"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"metrics", "--state", "sf", "2", "1", "1", "-1", "--times", "0", "2", "1"}).code == 2);
}

TEST_CASE("metrics csv format") {
  const Run r = run(cat(kTmsvThermal, {"--times", "0", "40"}));
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind(std::string(kMetricsHeader) + "\n", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(r.out.back() == '\n');
  const CsvTable t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 2);
  CHECK(std::stod(t.rows[0][t.column("log_negativity")]) == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(std::stod(t.rows[0][t.column("purity")]) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(t.rows[0][t.column("separable")] == "0");
  CHECK(std::stod(t.rows[1][t.column("log_negativity")]) == 0.0);
  CHECK(std::stod(t.rows[1][t.column("purity")]) == doctest::Approx(0.25).epsilon(1e-11));
  CHECK(t.rows[1][t.column("separable")] == "1");
}

TEST_CASE("metrics default grid and unphysical input") {
  Run r = run({"metrics", "--state", "sf", "1.5", "1.5", "1.2", "-1.4", "--bath1", "mu", "1/2", "0", "0", "--bath2",
               "mu", "1/2", "0", "0"});
  REQUIRE(r.code == 0);
  const CsvTable t = parse_csv(r.out);
  CHECK(t.rows.size() == 301);
  CHECK(std::stod(t.rows[0][t.column("log_negativity")]) == doctest::Approx(1.060131768100).epsilon(1e-11));
  CHECK(std::stod(t.rows.back()[t.column("t")]) == 3.0);

  r = run({"metrics", "--state", "sf", "1", "1", "1", "-1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("InvalidState") != std::string::npos);
  CHECK(run({"metrics", "--state", "sqth", "1", "1", "--bath1", "nm", "0.5", "1", "0"}).code == 3);
  CHECK(run({"metrics", "--state", "sqth", "1", "1", "--bath1", "mu", "4", "0", "0"}).code == 3);
}

TEST_CASE("csv round trip") {
  const std::vector<std::string> cfg{"--state", "sf",  "2",  "1",   "1",   "-1",     "--bath1", "mu",
                                     "1/3",     "0.4", "0",  "--bath2", "mu", "0.7", "0.2",     "0.3",
                                     "--gamma", "1.7", "--tmax", "2", "--points", "41"};
  const Run r = run(cat({"metrics"}, cfg));
  REQUIRE(r.code == 0);
  const CsvTable t = parse_csv(r.out);
  const ChannelSpec ch{Bath::from_phenomenological(1.0 / 3, 0.4, 0.0), Bath::from_phenomenological(0.7, 0.2, 0.3), 1.7};
  const CovarianceMatrix s0 = StandardForm{2, 1, 1, -1}.matrix();
  for (const auto& row : t.rows) {
    const double time = std::stod(row[0]);
    const MetricsRow m = metrics_at(evolve(s0, asymptotic_covariance(ch), ch.gamma, time), time);
    CHECK(format_metrics(m) == row[0] + "," + row[1] + "," + row[2] + "," + row[3] + "," + row[4] + "," + row[5] + "," +
                                   row[6] + "," + row[7] + "," + row[8]);
  }
  CHECK(run(cat({"metrics"}, cfg)).out == r.out);
}

TEST_CASE("tent command") {
  Run r = run({"tent", "--state", "sqth", "1", "1", "--bath1", "thermal", "1/2", "--bath2", "thermal", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("t_ent=0.6230812604 method=quartic residual=", 0) == 0);

  r = run({"tent", "--state", "sqth", "1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("t_ent=never method=", 0) == 0);

  r = run({"tent", "--state", "sf", "2", "2", "1.5", "-1.5", "--bath1", "thermal", "1", "--bath2", "thermal", "1"});
  CHECK(r.code == 4);
  CHECK(r.err.find("E_N = 0") != std::string::npos);

  r = run({"tent", "--state", "sf", "2", "1", "1", "-1", "--bath1", "mu", "1/2", "1", "pi/4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("ReferencePhase") != std::string::npos);
}

TEST_CASE("sweeps") {
  // phi2 over [0, pi/4] at t = 1: n~_- nondecreasing.
  Run r = run({"sweep", "--state", "sqth", "1", "1", "--bath1", "mu", "1/2", "1", "0", "--bath2", "mu", "1/2", "1", "0",
               "--t", "0.3", "--axis1", "phi2:0:pi/4:9"});
  REQUIRE(r.code == 0);
  CsvTable t = parse_csv(r.out);
  CHECK(t.header[0] == "phi2");
  CHECK(t.header[1] == "t");
  REQUIRE(t.rows.size() == 9);
  std::vector<double> nt = column(t, "ntilde_minus");
  for (std::size_t i = 1; i < nt.size(); ++i) CHECK(nt[i] >= nt[i - 1] - 1e-12);
  CHECK(nt.back() > nt.front());

  // N_B over [0, 2], t_ent mode: nonincreasing, never at N_B = 0.
  r = run({"sweep", "--state", "sqth", "1", "1", "--mode", "tent", "--axis1", "NB:0:2:9"});
  REQUIRE(r.code == 0);
  t = parse_csv(r.out);
  CHECK(t.header == std::vector<std::string>{"NB", "t_ent"});
  CHECK(t.rows[0][1] == "never");
  for (std::size_t i = 2; i < t.rows.size(); ++i) CHECK(std::stod(t.rows[i][1]) <= std::stod(t.rows[i - 1][1]));

  // r_B over [0, 2] for equal baths: E_N(t = 1) nonincreasing.
  r = run({"sweep", "--state", "sqth", "1", "1", "--bath1", "mu", "1/2", "0", "0", "--bath2", "mu", "1/2", "0", "0",
           "--t", "0.4", "--axis1", "rB:0:2:9"});
  REQUIRE(r.code == 0);
  const std::vector<double> en = column(parse_csv(r.out), "log_negativity");
  for (std::size_t i = 1; i < en.size(); ++i) CHECK(en[i] <= en[i - 1] + 1e-12);
  CHECK(en.front() > 0.0);

  // Two axes, axis1-major.
  r = run({"sweep", "--state", "sqth", "1", "1", "--t", "1", "--axis1", "mu_state:1/9:1:2", "--axis2", "N2:0:1:3"});
  REQUIRE(r.code == 0);
  t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 6);
  CHECK(t.header[0] == "mu_state");
  CHECK(t.header[1] == "N2");
  CHECK(t.rows[0][0] == t.rows[2][0]);
  CHECK(t.rows[2][1] == "1");
  CHECK(t.rows[3][1] == "0");

  // Sweeping time itself just replaces the grid.
  r = run({"sweep", "--state", "sqth", "1", "1", "--axis1", "t:0:1:3"});
  REQUIRE(r.code == 0);
  CHECK(parse_csv(r.out).header[0] == "t");

  CHECK(run({"sweep", "--state", "sf", "2", "1", "1", "-1", "--axis1", "r_state:0:1:3"}).code == 2);
  CHECK(run({"sweep", "--state", "sqth", "1", "1", "--axis1", "bogus:0:1:3"}).code == 2);
  CHECK(run({"sweep", "--state", "sqth", "1", "1"}).code == 2);
  r = run({"sweep", "--state", "sqth", "1/9", "0.1", "--mode", "tent", "--axis1", "NB:0.5:1:2"});
  CHECK(r.out.find("separable") != std::string::npos);
}

TEST_CASE("figure presets") {
  TempDir dir;
  const auto prefix = [&](int n) { return (dir.path / ("fig" + std::to_string(n))).string(); };
  const auto read = [&](int n, int k) { return parse_csv(slurp(prefix(n) + "_curve" + std::to_string(k) + ".csv")); };
  const auto first_zero = [](const CsvTable& t) {
    const std::vector<double> en = column(t, "log_negativity");
    const std::vector<double> ts = column(t, "t");
    for (std::size_t i = 0; i < en.size(); ++i)
      if (en[i] == 0.0) return ts[i];
    return 1e300;
  };

  Run r = run({"figure", "1", "-o", prefix(1)});
  REQUIRE(r.code == 0);
  for (int k = 1; k <= 4; ++k) CHECK(std::filesystem::exists(prefix(1) + "_curve" + std::to_string(k) + ".csv"));
  const CsvTable solid = read(1, 1);
  CHECK(std::stod(solid.rows[0][solid.column("log_negativity")]) == doctest::Approx(0.2693).epsilon(1e-4));
  CHECK(first_zero(read(1, 4)) < first_zero(solid));

  r = run({"figure", "3", "-o", prefix(3)});
  CHECK(r.code == 0);
  CHECK(r.err.find("curve 2") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(prefix(3) + "_curve2.csv"));
  CHECK(std::filesystem::exists(prefix(3) + "_curve3.csv"));

  r = run({"figure", "5", "-o", prefix(5)});
  REQUIRE(r.code == 0);
  CHECK(column(read(5, 1), "purity")[0] == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(column(read(5, 3), "purity")[0] == doctest::Approx(1.0 / 9).epsilon(1e-11));

  r = run({"figure", "6", "-o", prefix(6)});
  CHECK(r.code == 0);
  CHECK(r.err.find("curve 1") != std::string::npos);

  r = run({"figure", "7", "-o", prefix(7)});
  REQUIRE(r.code == 0);
  CHECK(column(read(7, 2), "mutual_information").back() > column(read(7, 1), "mutual_information").back());

  CHECK(run({"figure", "9"}).code == 2);
  CHECK(run({"figure", "0"}).code == 2);
  CHECK(run({"figure", "two"}).code == 2);
}

TEST_CASE("preset table") {
  int per_figure[9] = {};
  for (const CurvePreset& p : figure_presets()) {
    REQUIRE(p.figure >= 1);
    REQUIRE(p.figure <= 8);
    ++per_figure[p.figure];
    CHECK_NOTHROW(preset_config(p));
  }
  for (int n = 1; n <= 8; ++n) CHECK(per_figure[n] == 4);
}

TEST_CASE("output file and help") {
  TempDir dir;
  const std::string path = (dir.path / "out.csv").string();
  const Run r = run(cat(kTmsvThermal, {"--times", "0", "-o", path}));
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path).rfind(std::string(kMetricsHeader), 0) == 0);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
}
