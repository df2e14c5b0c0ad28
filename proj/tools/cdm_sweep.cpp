// cdm-sweep: run one sweep task and emit a CSV/JSON table.
//
// Parameters come from an optional key=value config file; command-line flags
// override config entries.  Exit codes: 0 clean, 2 bad invocation or spec,
// 3 sweep finished but contains error rows, 1 anything fatal.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "cdm/model.hpp"
#include "cdm/sweeps.hpp"

namespace {

const std::set<std::string> known_keys = {
    "task",  "out", "format", "threads", "axis1", "axis2",
    "omega_c", "omega_z", "g1", "g2", "g", "phi",
    "U",     "UN",  "N",    "side",    "window"};

double parse_num(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw cdm::InvalidParams(key + ": not a number: " + v);
  }
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw cdm::InvalidParams(key + ": not an integer: " + v);
  }
}

cdm::FitWindow parse_window(const std::string& v) {
  const auto c1 = v.find(':');
  const auto c2 = v.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw cdm::InvalidParams("window syntax is lo:hi:points: " + v);
  cdm::FitWindow w;
  w.lo = parse_num("window.lo", v.substr(0, c1));
  w.hi = parse_num("window.hi", v.substr(c1 + 1, c2 - c1 - 1));
  w.points = static_cast<int>(parse_int("window.points", v.substr(c2 + 1)));
  return w;
}

cdm::SweepSpec build_spec(const std::map<std::string, std::string>& kv) {
  const auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  cdm::SweepSpec spec;
  if (const auto* v = get("task"))
    spec.task = cdm::sweeps::parse_task(*v);
  else
    throw cdm::InvalidParams("no task given (flag --task or config key)");

  if (const auto* v = get("omega_c")) spec.base.omega_c = parse_num("omega_c", *v);
  if (const auto* v = get("omega_z")) spec.base.omega_z = parse_num("omega_z", *v);
  if (const auto* v = get("N")) spec.base.N = parse_int("N", *v);
  if (const auto* v = get("U")) spec.base.U = parse_num("U", *v);
  if (const auto* v = get("UN")) spec.base.UN = parse_num("UN", *v);
  if (const auto* v = get("phi")) spec.phi = parse_num("phi", *v);

  if (const auto* v = get("g")) {
    if (get("g1") || get("g2"))
      throw cdm::InvalidParams("give either g1/g2 or g (with phi), not both");
    const auto [a, b] = cdm::from_polar(
        cdm::CouplingPolar{parse_num("g", *v), spec.phi.value_or(0.0)});
    spec.base.g1 = a;
    spec.base.g2 = b;
  } else {
    if (const auto* v1 = get("g1")) spec.base.g1 = parse_num("g1", *v1);
    if (const auto* v2 = get("g2")) spec.base.g2 = parse_num("g2", *v2);
  }

  if (const auto* v = get("side")) spec.side = cdm::sweeps::parse_side(*v);
  if (const auto* v = get("window")) spec.window = parse_window(*v);
  if (const auto* v = get("axis1")) spec.axis1 = cdm::sweeps::parse_axis(*v);
  if (const auto* v = get("axis2")) spec.axis2 = cdm::sweeps::parse_axis(*v);
  if (const auto* v = get("threads"))
    spec.threads = static_cast<int>(parse_int("threads", *v));
  if (const auto* v = get("format")) {
    if (*v == "csv")
      spec.format = cdm::OutputFormat::Csv;
    else if (*v == "json")
      spec.format = cdm::OutputFormat::Json;
    else
      throw cdm::InvalidParams("format must be csv or json, got " + *v);
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parameter sweeps for the chiral two-mode Dicke model"};
  std::string config_path;
  std::map<std::string, std::string> cli;
  app.add_option("--config", config_path, "key=value parameter file");
  for (const auto& key : known_keys) {
    if (key == "task")
      app.add_option("--task", cli[key],
                     "phase_map | spectrum_cut | critical_line | gap_scaling "
                     "| exponent_map | ed_check");
    else if (key == "axis1" || key == "axis2")
      app.add_option("--" + key, cli[key], "name:start:stop:count[:log|lin]");
    else if (key == "window")
      app.add_option("--window", cli[key], "fit window lo:hi:points");
    else if (key == "side")
      app.add_option("--side", cli[key], "normal | superradiant");
    else if (key == "out")
      app.add_option("--out", cli[key], "output path (default: stdout)");
    else
      app.add_option("--" + key, cli[key]);
  }
  CLI11_PARSE(app, argc, argv);

  try {
    std::map<std::string, std::string> kv;
    if (!config_path.empty()) {
      for (const auto& [key, value] : cdm::sweeps::parse_config(config_path)) {
        if (!known_keys.count(key))
          throw cdm::InvalidParams("config: unknown key '" + key + "'");
        kv[key] = value;
      }
    }
    for (const auto& key : known_keys)
      if (app.count("--" + key)) kv[key] = cli[key];

    const cdm::SweepSpec spec = build_spec(kv);
    const cdm::SweepTable table = cdm::sweeps::run(spec);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (kv.count("out")) {
      file.open(kv.at("out"));
      if (!file)
        throw cdm::Error("cannot open output file " + kv.at("out"));
      os = &file;
    }
    if (spec.format == cdm::OutputFormat::Csv)
      cdm::sweeps::write_csv(table, *os);
    else
      cdm::sweeps::write_json(table, *os);
    os->flush();
    if (!*os) throw cdm::Error("write failed");

    return table.error_count > 0 ? 3 : 0;
  } catch (const cdm::InvalidParams& e) {
    std::cerr << "cdm-sweep: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cdm-sweep: " << e.what() << "\n";
    return 1;
  }
}
