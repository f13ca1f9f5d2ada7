#include "flatpipe/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

#include "flatpipe/error.hpp"

namespace flatpipe {
namespace {

using Member = std::variant<double Config::*, int Config::*>;
using Check = bool (*)(double);

struct KeySpec {
  const char* name;
  Member member;
  Check valid;
  const char* requirement;
};

bool positive(double v) { return v > 0.0; }
bool non_negative(double v) { return v >= 0.0; }
bool open_unit(double v) { return v > 0.0 && v < 1.0; }
bool wetting(double v) { return v >= 0.0 && v < 90.0; }
bool grid_count(double v) { return v >= 2.0; }

const std::array<KeySpec, 22>& key_table() {
  static const std::array<KeySpec, 22> table{{
      {"length_m", &Config::length_m, positive, "> 0"},
      {"width_m", &Config::width_m, positive, "> 0"},
      {"wick_thickness_m", &Config::wick_thickness_m, positive, "> 0"},
      {"vapor_thickness_m", &Config::vapor_thickness_m, positive, "> 0"},
      {"wall_thickness_m", &Config::wall_thickness_m, positive, "> 0"},
      {"evap_x0_m", &Config::evap_x0_m, non_negative, ">= 0"},
      {"evap_y0_m", &Config::evap_y0_m, non_negative, ">= 0"},
      {"evap_length_m", &Config::evap_length_m, positive, "> 0"},
      {"evap_width_m", &Config::evap_width_m, positive, "> 0"},
      {"cond_x0_m", &Config::cond_x0_m, non_negative, ">= 0"},
      {"cond_y0_m", &Config::cond_y0_m, non_negative, ">= 0"},
      {"cond_length_m", &Config::cond_length_m, positive, "> 0"},
      {"cond_width_m", &Config::cond_width_m, positive, "> 0"},
      {"sphere_diameter_m", &Config::sphere_diameter_m, positive, "> 0"},
      {"porosity", &Config::porosity, open_unit, "in (0, 1)"},
      {"wetting_angle_deg", &Config::wetting_angle_deg, wetting, "in [0, 90)"},
      {"pore_radius_factor", &Config::pore_radius_factor, positive, "> 0"},
      {"kozeny_constant", &Config::kozeny_constant, positive, "> 0"},
      {"grid_nx", &Config::grid_nx, grid_count, ">= 2"},
      {"grid_ny", &Config::grid_ny, grid_count, ">= 2"},
      {"solver_rel_tol", &Config::solver_rel_tol, positive, "> 0"},
      {"solver_max_iter", &Config::solver_max_iter, non_negative, ">= 0 (0 = automatic)"},
  }};
  return table;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
bool parse_number(std::string_view token, T& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Geometry Config::geometry() const {
  Geometry g;
  g.length = length_m;
  g.width = width_m;
  g.wick_thickness = wick_thickness_m;
  g.vapor_thickness = vapor_thickness_m;
  g.wall_thickness = wall_thickness_m;
  g.evaporator = {evap_x0_m, evap_y0_m, evap_length_m, evap_width_m};
  g.condenser = {cond_x0_m, cond_y0_m, cond_length_m, cond_width_m};
  return g;
}

WickSpec Config::wick() const {
  return WickSpec{
      .sphere_diameter = sphere_diameter_m,
      .porosity = porosity,
      .thickness = wick_thickness_m,
      .wetting_angle_deg = wetting_angle_deg,
      .pore_radius_factor = pore_radius_factor,
      .kozeny_constant = kozeny_constant,
  };
}

Grid Config::grid() const { return build_grid(geometry(), grid_nx, grid_ny); }

SolverOptions Config::solver() const {
  SolverOptions o;
  o.rel_tol = solver_rel_tol;
  o.max_iter = solver_max_iter;
  return o;
}

void Config::validate() const {
  geometry().validate();
  wick().validate();
  (void)grid();
}

Config parse_config(std::string_view text) {
  Config config;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::MalformedLine, "cli",
                  "line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw Error(Errc::MalformedLine, "cli",
                  "line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
    }

    const KeySpec* spec = nullptr;
    for (const auto& k : key_table()) {
      if (key == k.name) spec = &k;
    }
    if (!spec) {
      throw Error(Errc::UnknownKey, "cli",
                  "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'",
                  line_no);
    }
    if (!seen.insert(std::string(key)).second) {
      throw Error(Errc::MalformedLine, "cli",
                  "line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'",
                  line_no);
    }

    auto invalid = [&](const std::string& why) {
      return Error(Errc::InvalidValue, "cli",
                   "line " + std::to_string(line_no) + ": " + std::string(key) + " = " +
                       std::string(value) + " " + why,
                   line_no);
    };

    double numeric = 0.0;
    if (const auto* dm = std::get_if<double Config::*>(&spec->member)) {
      if (!parse_number(value, numeric) || !std::isfinite(numeric)) throw invalid("is not a number");
      config.*(*dm) = numeric;
    } else {
      int integer = 0;
      if (!parse_number(value, integer)) throw invalid("is not an integer");
      numeric = integer;
      config.*std::get<int Config::*>(spec->member) = integer;
    }
    if (!spec->valid(numeric)) throw invalid(std::string("must be ") + spec->requirement);
  }

  try {
    config.validate();
  } catch (const Error& e) {
    throw Error(Errc::InvalidValue, "cli", std::string("inconsistent configuration: ") + e.what());
  }
  return config;
}

std::string render_config(const Config& config) {
  std::ostringstream out;
  char buf[64];
  for (const auto& k : key_table()) {
    if (const auto* dm = std::get_if<double Config::*>(&k.member)) {
      std::snprintf(buf, sizeof buf, "%.17g", config.*(*dm));
    } else {
      std::snprintf(buf, sizeof buf, "%d", config.*std::get<int Config::*>(k.member));
    }
    out << k.name << " = " << buf << '\n';
  }
  return out.str();
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& k : key_table()) keys.emplace_back(k.name);
  return keys;
}

}  // namespace flatpipe
