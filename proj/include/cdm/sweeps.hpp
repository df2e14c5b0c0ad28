// sweeps.hpp -- parameter sweeps over the model stack, emitted as tables.
//
// One task per run: phase maps, spectral cuts, critical-line traces, gap
// scaling, exponent maps, finite-N checks.  Grid points are evaluated in
// parallel and gathered by index, so output bytes depend only on the spec,
// never on scheduling.  Per-point failures become error rows instead of
// aborting the sweep.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cdm/criticality.hpp"
#include "cdm/model.hpp"

namespace cdm {

struct AxisSpec {
  std::string name;  // g1, g2, g, phi, g_over_gc, omega_z, U, UN, N, distance
  double start = 0.0;
  double stop = 0.0;
  int count = 2;
  bool log = false;
};

enum class Task {
  PhaseMap,
  SpectrumCut,
  CriticalLine,
  GapScaling,
  ExponentMap,
  EdCheck,
};

enum class OutputFormat { Csv, Json };

struct SweepSpec {
  ModelInput base{};  // input units; couplings may be overridden by axes
  Task task = Task::PhaseMap;
  std::optional<AxisSpec> axis1{};  // defaults are per task
  std::optional<AxisSpec> axis2{};
  std::optional<double> phi{};  // fixed angle where a task needs one
  ApproachSide side = ApproachSide::FromNormal;
  FitWindow window{};
  OutputFormat format = OutputFormat::Csv;
  int threads = 0;  // 0: CDM_SWEEP_THREADS env var, then hardware
};

using Cell = std::variant<double, long long, std::string>;

struct SweepTable {
  std::string schema;
  std::vector<std::string> header;  // comment lines, emitted '# '-prefixed
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  long long error_count = 0;  // error rows plus failed summary fits
};

namespace sweeps {

Task parse_task(const std::string& name);
std::string task_name(Task t);
ApproachSide parse_side(const std::string& name);

// "name:start:stop:count[:log|lin]"
AxisSpec parse_axis(const std::string& text);
std::vector<double> axis_values(const AxisSpec& axis);

// Plain-text key-value config ("key = value", '#' comments).  Returned as
// raw strings; the CLI layers precedence (flags override config).
std::vector<std::pair<std::string, std::string>> parse_config(
    const std::string& path);

SweepTable run(const SweepSpec& spec);

SweepTable run_phase_map(const SweepSpec& spec);
SweepTable run_spectrum_cut(const SweepSpec& spec);
SweepTable run_critical_line(const SweepSpec& spec);
SweepTable run_gap_scaling(const SweepSpec& spec);
SweepTable run_exponent_map(const SweepSpec& spec);
SweepTable run_ed_check(const SweepSpec& spec);

// Line 1: "# schema=<task> version=1"; line 2: column names; then the
// parameter echo as '#' lines; then data rows.  Floats at 17 significant
// digits; no timestamps, so identical specs give identical bytes.
void write_csv(const SweepTable& table, std::ostream& os);
void write_json(const SweepTable& table, std::ostream& os);

std::string format_double(double v);

}  // namespace sweeps
}  // namespace cdm
