#include "flatpipe/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flatpipe/config.hpp"
#include "flatpipe/error.hpp"
#include "flatpipe/fluids.hpp"
#include "flatpipe/hydro.hpp"
#include "flatpipe/limits.hpp"

namespace flatpipe::cli {
namespace {

using nlohmann::json;

constexpr const char* kCalibrationNote =
    "Default wick (45 um spheres, porosity 0.4, 10 deg wetting angle, Kozeny constant 705) is a "
    "calibration: it is tuned so the default 44 x 30 mm pipe reaches 21 W at 60 C. Sphere size, "
    "porosity and footprints of the tested prototype are not known independently.";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::vector<int> grid;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "Configuration file (key = value lines)");
  cmd->add_option("--out", c.out_path, "Write results to PATH instead of standard output");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--grid", c.grid, "Grid override: NX NY")->expected(2);
}

Config load_config(const Common& c) {
  Config config;
  if (!c.config_path.empty()) {
    std::ifstream in(c.config_path);
    if (!in) throw UsageError("cannot read config file '" + c.config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    config = parse_config(buf.str());
  }
  if (!c.grid.empty()) {
    if (c.grid[0] < 2 || c.grid[1] < 2) throw UsageError("--grid needs NX >= 2 and NY >= 2");
    config.grid_nx = c.grid[0];
    config.grid_ny = c.grid[1];
  }
  return config;
}

double rounded(double v) { return std::stod(format_number(v)); }

const std::vector<std::string> kReportColumns{"T_C", "dp_cap_Pa", "dpl_per_W", "dpv_per_W", "q_max_W"};

std::string emit_table(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json obj = json::object();
      for (std::size_t k = 0; k < columns.size(); ++k) obj[columns[k]] = rounded(r[k]);
      arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
    return out.str();
  }
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << format_number(r[k]);
    out << '\n';
  }
  return out.str();
}

std::vector<double> report_row(const CapillaryReport& r) {
  return {r.temperature, r.dp_cap, r.dp_l_per_w, r.dp_v_per_w, r.q_max};
}

void warn_packaging(const Config& config, std::ostream& err) {
  if (!config.geometry().within_packaging_limit()) {
    err << "warning: wick + vapor thickness " << format_number(config.wick_thickness_m + config.vapor_thickness_m)
        << " m exceeds the 1 mm packaging limit\n";
  }
}

std::string cmd_props(double temperature, const std::string& format) {
  const FluidState f = saturation_properties(temperature);
  return emit_table({"T_C", "sigma_N_per_m", "rho_l", "mu_l", "rho_v", "mu_v", "h_fg_J_per_kg", "p_sat_Pa"},
                    {{f.temperature, f.sigma, f.rho_l, f.mu_l, f.rho_v, f.mu_v, f.h_fg, f.p_sat}}, format);
}

std::string cmd_field(const Config& config, double temperature, double power, Phase phase,
                      const std::string& format) {
  const Geometry geometry = config.geometry();
  const WickSpec wick = config.wick();
  const Grid grid = config.grid();
  const SolverOptions solver = config.solver();
  const FluidState fluid = saturation_properties(temperature);

  const MassFluxField flux = phase_change_flux(grid, geometry, power, fluid.h_fg);
  auto [pl, pv] = rereference(liquid_pressure(grid, flux, fluid, wick, solver),
                              vapor_pressure(grid, flux, fluid, geometry.vapor_thickness, solver),
                              fluid, geometry);
  const PressureField& field = phase == Phase::Liquid ? pl : pv;
  const std::vector<double> p = field.absolute_values();

  std::ostringstream out;
  if (format == "json") {
    json doc;
    doc["nx"] = grid.nx;
    doc["ny"] = grid.ny;
    doc["dx_m"] = rounded(grid.dx);
    doc["dy_m"] = rounded(grid.dy);
    doc["phase"] = to_string(phase);
    doc["T_C"] = rounded(temperature);
    doc["Q_W"] = rounded(power);
    json xs = json::array();
    json ys = json::array();
    json rows = json::array();
    for (int i = 0; i < grid.nx; ++i) xs.push_back(rounded(grid.x_center(i)));
    for (int j = 0; j < grid.ny; ++j) {
      ys.push_back(rounded(grid.y_center(j)));
      json row = json::array();
      for (int i = 0; i < grid.nx; ++i) row.push_back(rounded(p[grid.index(i, j)]));
      rows.push_back(std::move(row));
    }
    doc["x_m"] = std::move(xs);
    doc["y_m"] = std::move(ys);
    doc["pressure_Pa"] = std::move(rows);
    out << doc.dump() << '\n';
    return out.str();
  }

  out << "# nx=" << grid.nx << " ny=" << grid.ny << " dx_m=" << format_number(grid.dx)
      << " dy_m=" << format_number(grid.dy) << " phase=" << to_string(phase)
      << " T_C=" << format_number(temperature) << " Q_W=" << format_number(power) << '\n';
  for (int i = 0; i < grid.nx; ++i) out << (i ? "," : "") << format_number(grid.x_center(i));
  out << '\n';
  for (int j = 0; j < grid.ny; ++j) {
    out << format_number(grid.y_center(j));
    for (int i = 0; i < grid.nx; ++i) out << ',' << format_number(p[grid.index(i, j)]);
    out << '\n';
  }
  return out.str();
}

std::vector<double> sweep_temperatures(double tmin, double tmax, double tstep) {
  if (!(tstep > 0.0)) throw UsageError("--tstep must be positive");
  if (tmax < tmin) throw UsageError("--tmax must not be below --tmin");
  const auto count = static_cast<long>(std::floor((tmax - tmin) / tstep + 1e-9)) + 1;
  std::vector<double> temps;
  for (long k = 0; k < count; ++k) temps.push_back(tmin + static_cast<double>(k) * tstep);
  return temps;
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value == 0.0 ? 0.0 : value);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady hydraulic model and capillary limit of thin flat heat pipes with sintered wicks.",
               "flatpipe"};
  app.footer(kCalibrationNote);
  app.require_subcommand(1);

  Common common;
  double temp = 0.0;
  double tmin = 0.0;
  double tmax = 0.0;
  double tstep = 0.0;
  double power = 0.0;
  std::string phase_name;

  auto* props = app.add_subcommand("props", "Saturated-water properties at one temperature");
  props->add_option("--temp", temp, "Working temperature [C]")->required();
  add_common(props, common);

  auto* qmax = app.add_subcommand("qmax", "Capillary-limited maximum heat power at one temperature");
  qmax->add_option("--temp", temp, "Working temperature [C]")->required();
  add_common(qmax, common);

  auto* sweep = app.add_subcommand("sweep", "Maximum heat power over a temperature range");
  sweep->add_option("--tmin", tmin, "First temperature [C]")->required();
  sweep->add_option("--tmax", tmax, "Last temperature [C]")->required();
  sweep->add_option("--tstep", tstep, "Temperature step [C]")->required();
  add_common(sweep, common);

  auto* field = app.add_subcommand("field", "Absolute pressure field of one phase");
  field->add_option("--temp", temp, "Working temperature [C]")->required();
  field->add_option("--power", power, "Transported heat power [W]")->required();
  field->add_option("--phase", phase_name, "liquid or vapor")
      ->required()
      ->check(CLI::IsMember({"liquid", "vapor"}));
  add_common(field, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string text;
  try {
    if (props->parsed()) {
      text = cmd_props(temp, common.format);
    } else {
      const Config config = load_config(common);
      warn_packaging(config, err);
      if (qmax->parsed()) {
        const CapillaryReport r =
            q_max(config.geometry(), config.wick(), temp, config.grid(), config.solver());
        text = emit_table(kReportColumns, {report_row(r)}, common.format);
      } else if (sweep->parsed()) {
        const std::vector<double> temps = sweep_temperatures(tmin, tmax, tstep);
        const SweepResult result =
            sweep_temperature(config.geometry(), config.wick(), temps, config.grid(), config.solver());
        std::vector<std::vector<double>> rows;
        for (const auto& r : result.rows) rows.push_back(report_row(r));
        text = emit_table(kReportColumns, rows, common.format);
      } else {
        if (power < 0.0) throw UsageError("--power must be non-negative");
        const Phase phase = phase_name == "liquid" ? Phase::Liquid : Phase::Vapor;
        text = cmd_field(config, temp, power, phase, common.format);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    const bool config_error = e.code() == Errc::UnknownKey || e.code() == Errc::MalformedLine ||
                              e.code() == Errc::InvalidValue;
    err << "error [" << e.module() << "]: " << e.what() << "\n";
    return config_error ? kExitUsage : kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }

  if (!common.out_path.empty()) {
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) {
      err << "usage error: cannot write '" << common.out_path << "'\n";
      return kExitUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return kExitOk;
}

}  // namespace flatpipe::cli
