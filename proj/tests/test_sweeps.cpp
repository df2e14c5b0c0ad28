// Sweep engine and CLI: spec parsing, per-task tables, error rows,
// schedule-free determinism, and the serialization contract.
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "cdm/meanfield.hpp"
#include "cdm/sweeps.hpp"

using namespace cdm;

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

std::string csv_of(const SweepTable& t) {
  std::ostringstream os;
  sweeps::write_csv(t, os);
  return os.str();
}

std::optional<std::string> header_value(const SweepTable& t,
                                        const std::string& key) {
  const std::string prefix = key + "=";
  for (const auto& h : t.header)
    if (h.rfind(prefix, 0) == 0) return h.substr(prefix.size());
  return std::nullopt;
}

double header_num(const SweepTable& t, const std::string& key) {
  auto v = header_value(t, key);
  REQUIRE(v.has_value());
  return std::stod(*v);
}

size_t col(const SweepTable& t, const std::string& name) {
  for (size_t k = 0; k < t.columns.size(); ++k)
    if (t.columns[k] == name) return k;
  REQUIRE_MESSAGE(false, "missing column ", name);
  return 0;
}

double num_at(const SweepTable& t, size_t row, const std::string& name) {
  const Cell& c = t.rows[row][col(t, name)];
  if (std::holds_alternative<long long>(c))
    return static_cast<double>(std::get<long long>(c));
  return std::get<double>(c);
}

std::string str_at(const SweepTable& t, size_t row, const std::string& name) {
  return std::get<std::string>(t.rows[row][col(t, name)]);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(CDM_SWEEP_BINARY) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("axis parsing") {
  auto a = sweeps::parse_axis("g_over_gc:0.5:2.5:11");
  CHECK(a.name == "g_over_gc");
  CHECK(a.start == 0.5);
  CHECK(a.stop == 2.5);
  CHECK(a.count == 11);
  CHECK_FALSE(a.log);

  auto b = sweeps::parse_axis("distance:1e-4:1e-2:40:log");
  CHECK(b.log);
  CHECK(b.start == 1e-4);

  CHECK_THROWS_AS(sweeps::parse_axis("g1:0:1"), InvalidParams);
  CHECK_THROWS_AS(sweeps::parse_axis("g1:0:1:abc"), InvalidParams);
  CHECK_THROWS_AS(sweeps::parse_axis("g1:0:1:1"), InvalidParams);
  CHECK_THROWS_AS(sweeps::parse_axis("g1:0:1:5:banana"), InvalidParams);
  CHECK_THROWS_AS(sweeps::parse_axis("d:0:1:5:log"), InvalidParams);
}

TEST_CASE("axis values hit both endpoints") {
  auto v = sweeps::axis_values(sweeps::parse_axis("phi:0.1:2.3:12"));
  REQUIRE(v.size() == 12);
  CHECK(v.front() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(v.back() == doctest::Approx(2.3).epsilon(1e-14));
  for (size_t k = 1; k < v.size(); ++k) CHECK(v[k] > v[k - 1]);

  auto w = sweeps::axis_values(sweeps::parse_axis("d:1e-4:1e-2:9:log"));
  REQUIRE(w.size() == 9);
  CHECK(w.front() == doctest::Approx(1e-4).epsilon(1e-14));
  CHECK(w.back() == doctest::Approx(1e-2).epsilon(1e-14));
  // log spacing: constant ratio
  for (size_t k = 1; k < w.size(); ++k)
    CHECK(w[k] / w[k - 1] == doctest::Approx(w[1] / w[0]).epsilon(1e-12));
}

TEST_CASE("task and side names round trip") {
  for (auto t : {Task::PhaseMap, Task::SpectrumCut, Task::CriticalLine,
                 Task::GapScaling, Task::ExponentMap, Task::EdCheck})
    CHECK(sweeps::parse_task(sweeps::task_name(t)) == t);
  CHECK_THROWS_AS(sweeps::parse_task("bogus"), InvalidParams);
  CHECK(sweeps::parse_side("normal") == ApproachSide::FromNormal);
  CHECK(sweeps::parse_side("superradiant") == ApproachSide::FromSuperradiant);
  CHECK_THROWS_AS(sweeps::parse_side("left"), InvalidParams);
}

TEST_CASE("config files parse with comments and precedence left to caller") {
  const std::string path = "/tmp/cdm_test_parse.cfg";
  {
    std::ofstream f(path);
    f << "# a comment line\n"
      << "task = phase_map\n"
      << "\n"
      << "  omega_z=1.5   # trailing comment\n"
      << "axis1 = g1:0:2:5\n";
  }
  auto kv = sweeps::parse_config(path);
  REQUIRE(kv.size() == 3);
  CHECK(kv[0].first == "task");
  CHECK(kv[0].second == "phase_map");
  CHECK(kv[1].first == "omega_z");
  CHECK(kv[1].second == "1.5");
  CHECK(kv[2].second == "g1:0:2:5");

  {
    std::ofstream f(path);
    f << "task phase_map\n";
  }
  CHECK_THROWS_AS(sweeps::parse_config(path), InvalidParams);
  CHECK_THROWS_AS(sweeps::parse_config("/tmp/does_not_exist.cfg"),
                  InvalidParams);
  std::remove(path.c_str());
}

TEST_CASE("phase map recovers the circular boundary") {
  SweepSpec spec;
  spec.base.omega_z = 1.5;
  spec.task = Task::PhaseMap;
  spec.axis1 = sweeps::parse_axis("g1:0:2:21");
  spec.axis2 = sweeps::parse_axis("g2:0:2:21");
  spec.threads = 1;

  auto t = sweeps::run(spec);
  CHECK(t.schema == "phase_map");
  CHECK(t.error_count == 0);
  REQUIRE(t.rows.size() == 21 * 21);

  const double gc2 = 1.5;  // boundary: g1^2 + g2^2 = omega_z * omega_c
  for (size_t r = 0; r < t.rows.size(); ++r) {
    CHECK(str_at(t, r, "status") == "ok");
    const double g1 = num_at(t, r, "g1");
    const double g2 = num_at(t, r, "g2");
    const double gsq = g1 * g1 + g2 * g2;
    const std::string ph = str_at(t, r, "phase");
    if (gsq < gc2 - 1e-9) {
      CHECK(ph == "normal");
      CHECK(num_at(t, r, "x_over_N") == 0.0);
    } else if (gsq > gc2 + 1e-9) {
      CHECK(ph == "superradiant");
      CHECK(num_at(t, r, "x_over_N") > 0.0);
      CHECK(str_at(t, r, "stability") == "minimum");
    }
  }

  // A dispersive shift moves the boundary: (1.3, 0) is condensed at U = 0
  // but normal once UN = -1 pushes g_c out to 1.5.
  spec.base.UN = -1.0;
  auto tu = sweeps::run(spec);
  auto at_13 = [&](const SweepTable& tab) {
    for (size_t r = 0; r < tab.rows.size(); ++r)
      if (std::abs(num_at(tab, r, "g1") - 1.3) < 1e-12 &&
          num_at(tab, r, "g2") == 0.0)
        return str_at(tab, r, "phase");
    return std::string("missing");
  };
  CHECK(at_13(t) == "superradiant");
  CHECK(at_13(tu) == "normal");
}

TEST_CASE("spectrum cut: layout, decoupled mode, reference column") {
  SweepSpec spec;
  spec.base.omega_z = 1.5;
  spec.task = Task::SpectrumCut;
  spec.axis1 = sweeps::parse_axis("g_over_gc:0.2:2.2:6");
  spec.axis2 = sweeps::parse_axis("phi:0:1.5707963267948966:3");
  spec.threads = 2;

  auto t = sweeps::run(spec);
  CHECK(t.error_count == 0);
  REQUIRE(t.rows.size() == 18);

  // phi is the slow index: six consecutive rows per angle.
  for (size_t r = 0; r < 6; ++r) CHECK(num_at(t, r, "phi") == 0.0);
  for (size_t r = 6; r < 12; ++r)
    CHECK(num_at(t, r, "phi") == doctest::Approx(pi / 4).epsilon(1e-12));

  for (size_t r = 0; r < t.rows.size(); ++r) {
    CHECK(num_at(t, r, "mode1") <= num_at(t, r, "mode2"));
    CHECK(num_at(t, r, "mode2") <= num_at(t, r, "mode3"));
    CHECK(num_at(t, r, "stable") == 1.0);
    const double ratio = num_at(t, r, "g_over_gc");
    const std::string ph = str_at(t, r, "phase");
    if (ratio < 1.0) {
      CHECK(ph == "normal");
      CHECK(num_at(t, r, "goldstone_count") == 0.0);
    } else if (ratio > 1.0) {
      CHECK(ph == "superradiant");
      CHECK(num_at(t, r, "goldstone_count") == 1.0);
      CHECK(num_at(t, r, "mode1") == 0.0);
    } else {
      // The grid hits the boundary exactly: soft mode already at zero.
      CHECK(ph == "critical");
      CHECK(num_at(t, r, "mode1") == 0.0);
    }
    // At phi = 0 the counter-rotating cavity mode stays bare: one mode is
    // exactly omega_c in both phases (U = 0).
    if (num_at(t, r, "phi") == 0.0) {
      const double d1 = std::abs(num_at(t, r, "mode1") - 1.0);
      const double d2 = std::abs(num_at(t, r, "mode2") - 1.0);
      const double d3 = std::abs(num_at(t, r, "mode3") - 1.0);
      CHECK(std::min({d1, d2, d3}) < 1e-9);
    }
  }

  // reference_linear is slope * |g - g_c|; exact statement of the column.
  const double g = num_at(t, 1, "g");
  const double gc = std::sqrt(1.5);
  ModelInput ref_in;
  ref_in.omega_z = 1.5;
  CHECK(num_at(t, 1, "reference_linear") ==
        doctest::Approx(
            criticality::analytic_slope(ModelParams::from(ref_in), 0.0) *
            std::abs(g - gc))
            .epsilon(1e-12));
}

TEST_CASE("critical line locator across the three regimes") {
  SweepSpec spec;
  spec.task = Task::CriticalLine;
  spec.axis1 = sweeps::parse_axis("phi:0:1.5707963267948966:200");
  spec.threads = 2;

  SUBCASE("omega_z = 1.5: zero at the interior degeneracy angle") {
    spec.base.omega_z = 1.5;
    auto t = sweeps::run(spec);
    CHECK(t.error_count == 0);
    CHECK(header_num(t, "phi_star_analytic") ==
          doctest::Approx(1.15026199).epsilon(1e-8));
    CHECK(*header_value(t, "zero_found") == "1");
    CHECK(header_num(t, "phi_zero") ==
          doctest::Approx(1.15026199).epsilon(1e-6));
    CHECK(header_num(t, "eps_min") < 1e-8);
    // Goldstone bookkeeping: one exact zero in every row on the line.
    for (size_t r = 0; r < t.rows.size(); ++r)
      CHECK(num_at(t, r, "mode1") == 0.0);
  }

  SUBCASE("omega_z = 1: zero lands on the counter-rotating axis") {
    spec.base.omega_z = 1.0;
    auto t = sweeps::run(spec);
    CHECK(*header_value(t, "zero_found") == "1");
    // The soft mode flattens quadratically into the pi/2 endpoint, so the
    // located angle is only good to the width of the clamped plateau.
    CHECK(header_num(t, "phi_zero") == doctest::Approx(pi / 2).epsilon(1e-3));
    CHECK(header_num(t, "eps_min") < 1e-8);
  }

  SUBCASE("omega_z = 0.5: no zero anywhere on the line") {
    spec.base.omega_z = 0.5;
    auto t = sweeps::run(spec);
    CHECK(*header_value(t, "phi_star_analytic") == "none");
    CHECK(*header_value(t, "zero_found") == "0");
    CHECK(header_num(t, "eps_min") == doctest::Approx(0.5).epsilon(1e-4));
  }
}

TEST_CASE("gap scaling at the degeneracy angle") {
  SweepSpec spec;
  spec.task = Task::GapScaling;
  spec.base.omega_z = 1.5;
  spec.threads = 2;

  auto t = sweeps::run(spec);
  CHECK(t.error_count == 0);
  REQUIRE(t.rows.size() == 40);
  CHECK(header_num(t, "phi") == doctest::Approx(1.15026199).epsilon(1e-8));
  CHECK(std::abs(header_num(t, "fit_z_nu") - 0.5) < 0.02);
  CHECK(*header_value(t, "fit_poor") == "0");
  CHECK(header_num(t, "fit_r_squared") > 0.999);

  for (size_t r = 0; r < t.rows.size(); ++r) {
    CHECK(str_at(t, r, "status") == "ok");
    // On the sqrt branch the reference column tracks the data closely.
    CHECK(num_at(t, r, "eps") ==
          doctest::Approx(num_at(t, r, "reference_sqrt")).epsilon(0.10));
  }
}

TEST_CASE("gap scaling at a generic angle follows the linear reference") {
  SweepSpec spec;
  spec.task = Task::GapScaling;
  spec.base.omega_z = 1.5;
  spec.phi = pi / 4;
  spec.threads = 1;

  auto t = sweeps::run(spec);
  CHECK(t.error_count == 0);
  CHECK(std::abs(header_num(t, "fit_z_nu") - 1.0) < 0.02);
  for (size_t r = 0; r < t.rows.size(); ++r)
    CHECK(num_at(t, r, "eps") ==
          doctest::Approx(num_at(t, r, "reference_linear")).epsilon(0.10));
}

TEST_CASE("gap scaling reports a fit error when no branch closes") {
  SweepSpec spec;
  spec.task = Task::GapScaling;
  spec.base.omega_z = 1.5;
  spec.phi = pi / 4;
  spec.side = ApproachSide::FromSuperradiant;
  spec.threads = 1;

  auto t = sweeps::run(spec);
  CHECK(*header_value(t, "fit_error") == "error:domain");
  CHECK(t.error_count >= 1);
  // The raw rows are still fine: the gapped branch simply does not vanish.
  for (size_t r = 0; r < t.rows.size(); ++r)
    CHECK(str_at(t, r, "status") == "ok");
}

TEST_CASE("exponent map over angles, both sides") {
  SweepSpec spec;
  spec.task = Task::ExponentMap;
  spec.base.omega_z = 1.5;
  spec.axis1 = sweeps::parse_axis("phi:0:0.6:4");
  spec.window.points = 15;
  spec.threads = 2;

  auto t = sweeps::run(spec);
  CHECK(t.error_count == 0);
  for (size_t r = 0; r < t.rows.size(); ++r) {
    CHECK(str_at(t, r, "status") == "ok");
    CHECK(std::abs(num_at(t, r, "z_nu") - 1.0) < 0.03);
    CHECK(num_at(t, r, "poor_fit") == 0.0);
  }

  // From the condensed side these generic angles have no vanishing branch:
  // every point becomes an error row instead of aborting the sweep.
  spec.side = ApproachSide::FromSuperradiant;
  auto ts = sweeps::run(spec);
  CHECK(ts.error_count == 4);
  for (size_t r = 0; r < ts.rows.size(); ++r) {
    CHECK(str_at(ts, r, "status") == "error:domain");
    CHECK(num_at(ts, r, "phi") == doctest::Approx(0.2 * r).epsilon(1e-12));
    CHECK(std::isnan(num_at(ts, r, "z_nu")));
  }
}

TEST_CASE("ed check column contract at small N") {
  SweepSpec spec;
  spec.task = Task::EdCheck;
  spec.base.omega_z = 1.5;
  spec.base.g1 = std::sqrt(3.0);  // g = 2 g_c at phi = pi/4
  spec.base.g2 = std::sqrt(3.0);
  // Even N only: at odd N the spin projection is half-integer and so is L^z.
  spec.axis1 = sweeps::parse_axis("N:4:6:2");
  spec.threads = 2;

  auto t = sweeps::run(spec);
  CHECK(t.error_count == 0);
  REQUIRE(t.rows.size() == 2);
  for (size_t r = 0; r < t.rows.size(); ++r) {
    CHECK(str_at(t, r, "status") == "ok");
    CHECK(num_at(t, r, "converged") == 1.0);
    CHECK(num_at(t, r, "e_mf_per_atom") == doctest::Approx(-1.59375).epsilon(1e-12));
    CHECK(num_at(t, r, "variational_slack") >= -1e-10);
    const double lz = num_at(t, r, "lz");
    CHECK(std::abs(lz - std::llround(lz)) < 1e-8);
  }
  // Finite-size error shrinks with N.
  CHECK(num_at(t, 1, "abs_diff") < num_at(t, 0, "abs_diff"));
}

TEST_CASE("tables are byte-identical across thread counts") {
  SweepSpec spec;
  spec.base.omega_z = 1.3;
  spec.task = Task::PhaseMap;
  spec.axis1 = sweeps::parse_axis("g1:0:2:41");
  spec.axis2 = sweeps::parse_axis("UN:-3:3:41");  // includes invalid rows

  spec.threads = 1;
  auto t1 = sweeps::run(spec);
  spec.threads = 4;
  auto t4 = sweeps::run(spec);

  CHECK(t1.error_count > 0);
  CHECK(t1.error_count == t4.error_count);
  CHECK(csv_of(t1) == csv_of(t4));
}

TEST_CASE("error rows echo the raw axis values and tokens") {
  SweepSpec spec;
  spec.base.omega_z = 1.5;
  spec.task = Task::PhaseMap;
  spec.axis1 = sweeps::parse_axis("g1:0:1:2");
  spec.axis2 = sweeps::parse_axis("UN:1:3:2");  // UN = 3 is out of bounds
  spec.threads = 1;

  auto t = sweeps::run(spec);
  CHECK(t.error_count == 2);  // two g1 values at UN = 3
  long long seen = 0;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (str_at(t, r, "status") == "ok") continue;
    ++seen;
    CHECK(str_at(t, r, "status") == "error:invalid_params");
    CHECK(num_at(t, r, "UN") == 3.0);
    CHECK(std::isnan(num_at(t, r, "mu_tilde")));
  }
  CHECK(seen == t.error_count);
}

TEST_CASE("csv layout: schema line, columns, headers, then rows") {
  SweepSpec spec;
  spec.base.omega_z = 1.5;
  spec.task = Task::PhaseMap;
  spec.axis1 = sweeps::parse_axis("g1:0:1:3");
  spec.axis2 = sweeps::parse_axis("g2:0:1:2");
  spec.threads = 1;
  auto t = sweeps::run(spec);

  std::istringstream is(csv_of(t));
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "# schema=phase_map version=1");
  REQUIRE(std::getline(is, line));
  CHECK(line ==
        "g1,g2,omega_z,UN,mu_tilde,x_over_N,energy_per_atom,phase,stability,"
        "status");
  size_t headers = 0, rows = 0;
  while (std::getline(is, line)) {
    if (line.rfind("# ", 0) == 0) {
      ++headers;
      CHECK(rows == 0);  // all header echo lines precede the data
    } else {
      ++rows;
      CHECK(std::count(line.begin(), line.end(), ',') ==
            static_cast<long>(t.columns.size()) - 1);
    }
  }
  CHECK(headers == t.header.size());
  CHECK(rows == 6);
  // No wall-clock echo anywhere: headers are pure parameter lines.
  for (const auto& h : t.header) {
    CHECK(h.find("time") == std::string::npos);
    CHECK(h.find("thread") == std::string::npos);
  }
}

TEST_CASE("json output carries the same table with nulls for nan") {
  SweepSpec spec;
  spec.base.omega_z = 1.5;
  spec.task = Task::SpectrumCut;
  spec.axis1 = sweeps::parse_axis("g_over_gc:-0.5:1.5:3");  // first point invalid
  spec.axis2 = sweeps::parse_axis("phi:0:0.5:2");
  spec.threads = 1;
  auto t = sweeps::run(spec);
  CHECK(t.error_count == 2);

  std::ostringstream os;
  sweeps::write_json(t, os);
  auto j = nlohmann::json::parse(os.str());
  CHECK(j["schema"] == "spectrum_cut");
  CHECK(j["version"] == 1);
  CHECK(j["error_count"] == 2);
  CHECK(j["columns"].size() == t.columns.size());
  REQUIRE(j["rows"].size() == t.rows.size());

  const auto mode_k = col(t, "mode1");
  const auto status_k = col(t, "status");
  bool saw_null = false;
  for (const auto& row : j["rows"]) {
    REQUIRE(row.size() == t.columns.size());
    if (row[status_k] == "error:domain" && row[mode_k].is_null())
      saw_null = true;
  }
  CHECK(saw_null);
}

TEST_CASE("cli: clean run writes the table and exits 0") {
  const std::string out = "/tmp/cdm_cli_phase.csv";
  int rc = run_cli("--task phase_map --omega_z 1.5 --axis1 g1:0:2:8 "
                   "--axis2 g2:0:2:8 --threads 2 --out " +
                   out);
  CHECK(rc == 0);
  const std::string body = slurp(out);
  CHECK(body.rfind("# schema=phase_map version=1\n", 0) == 0);
  CHECK(body.find("error:") == std::string::npos);

  // Byte-for-byte reproducible end to end, including through the file path.
  const std::string out2 = "/tmp/cdm_cli_phase2.csv";
  rc = run_cli("--task phase_map --omega_z 1.5 --axis1 g1:0:2:8 "
               "--axis2 g2:0:2:8 --threads 5 --out " +
               out2);
  CHECK(rc == 0);
  CHECK(slurp(out2) == body);
  std::remove(out.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("cli: config file with flag overrides") {
  const std::string cfg = "/tmp/cdm_cli_config.cfg";
  {
    std::ofstream f(cfg);
    f << "task = spectrum_cut\n"
      << "omega_z = 1.5\n"
      << "axis1 = g_over_gc:0.2:2:5\n"
      << "axis2 = phi:0:0.5:2   # two angles\n"
      << "format = csv\n";
  }
  const std::string out = "/tmp/cdm_cli_cut.csv";
  int rc = run_cli("--config " + cfg + " --out " + out);
  CHECK(rc == 0);
  std::string body = slurp(out);
  size_t data_rows = 0;
  {
    std::istringstream is(body);
    std::string line;
    std::getline(is, line);  // schema
    std::getline(is, line);  // columns
    while (std::getline(is, line))
      if (line.rfind("# ", 0) != 0) ++data_rows;
  }
  CHECK(data_rows == 10);

  // A flag overrides the config value for the same key.
  rc = run_cli("--config " + cfg + " --axis1 g_over_gc:0.2:2:7 --out " + out);
  CHECK(rc == 0);
  body = slurp(out);
  data_rows = 0;
  {
    std::istringstream is(body);
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    while (std::getline(is, line))
      if (line.rfind("# ", 0) != 0) ++data_rows;
  }
  CHECK(data_rows == 14);
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}

TEST_CASE("cli: exit codes") {
  // 2: bad invocation or spec
  CHECK(run_cli("--task no_such_task") == 2);
  CHECK(run_cli("") == 2);  // no task at all
  CHECK(run_cli("--task phase_map --axis1 g1:0:1:1") == 2);
  CHECK(run_cli("--task phase_map --g 1 --g1 0.5") == 2);
  const std::string cfg = "/tmp/cdm_cli_badkey.cfg";
  {
    std::ofstream f(cfg);
    f << "task = phase_map\nbanana = 7\n";
  }
  CHECK(run_cli("--config " + cfg) == 2);
  std::remove(cfg.c_str());

  // 3: sweep ran but produced error rows
  CHECK(run_cli("--task phase_map --omega_z 1.5 --axis1 g1:0:1:2 "
                "--axis2 UN:1:3:3 --out /tmp/cdm_cli_err.csv") == 3);
  std::remove("/tmp/cdm_cli_err.csv");

  // json goes to stdout by default
  CHECK(run_cli("--task critical_line --omega_z 1.5 "
                "--axis1 phi:0:1.5707963267948966:40 --format json") == 0);
}
