#include "hcyl/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "hcyl/errors.hpp"
#include "hcyl/truncation.hpp"

namespace hcyl {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_number(const std::string& v) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(x)) {
    throw ConfigError("'" + v + "' is not a finite number");
  }
  return x;
}

int to_int(const std::string& v) {
  int x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError("'" + v + "' is not an integer");
  }
  return x;
}

bool to_bool(std::string v) {
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  throw ConfigError("'" + v + "' is not a boolean");
}

std::vector<double> to_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_number(trim(item)));
  return out;
}

struct Seen {
  bool E = false, nu = false, h = false, a = false, b = false, eps = false;
};

}  // namespace

ElasticMaterial RunSpec::material() const { return ElasticMaterial::from_engineering(E, nu); }

AxialLoad RunSpec::load() const {
  if (P) return AxialLoad::from_total_force(*P, geom);
  if (p) return AxialLoad::from_pressure(*p, geom);
  throw ConfigError("no load given: set P_kN or p_MPa");
}

int RunSpec::mode_count() const {
  if (M) return *M;
  if (target_l2_u1 && target_l2_u3) {
    return select_mode_count(*target_l2_u1, *target_l2_u3, material(), geom, load());
  }
  throw ConfigError("no mode count: set modes_M or both target_l2_u1 and target_l2_u3");
}

void RunSpec::validate() const {
  if (!(E > 0)) throw ConfigError("E_MPa must be positive");
  if (!(nu > -1 && nu < 0.5)) throw ConfigError("nu must lie in (-1, 0.5)");
  if (!(geom.h > 0)) throw ConfigError("h_m must be positive");
  if (!(geom.a > 0)) throw ConfigError("diameter_inner_mm must be positive");
  if (!(geom.eps > geom.a)) throw ConfigError("diameter_load_mm must exceed diameter_inner_mm");
  if (!(geom.b > geom.eps)) throw ConfigError("diameter_outer_mm must exceed diameter_load_mm");
  if (P && p) throw ConfigError("ambiguous load: both P_kN and p_MPa are given");
  if (!P && !p) throw ConfigError("no load given: set P_kN or p_MPa");
  if ((P && *P < 0) || (p && *p < 0)) throw ConfigError("the load must be non-negative");
  if (!(epsilon_tol > 0)) throw ConfigError("epsilon_tol must be positive");
  const bool targets = target_l2_u1 || target_l2_u3;
  if (M && targets) {
    throw ConfigError("ambiguous mode count: both modes_M and L2 targets are given");
  }
  if (!M && !(target_l2_u1 && target_l2_u3)) {
    throw ConfigError("no mode count: set modes_M or both target_l2_u1 and target_l2_u3");
  }
  if (M && *M < 1) throw ConfigError("modes_M must be >= 1");
  if ((target_l2_u1 && !(*target_l2_u1 > 0)) || (target_l2_u3 && !(*target_l2_u3 > 0))) {
    throw ConfigError("L2 targets must be positive");
  }
  if (grid_nrho < 2 || grid_nz < 2) throw ConfigError("grid_nrho and grid_nz must be >= 2");
  if (N_ceiling < 5 || N_ceiling % 2 == 0) throw ConfigError("N_ceiling must be odd and >= 5");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

RunSpec parse_config_text(const std::string& text, const std::string& origin) {
  RunSpec spec;
  Seen seen;
  const double mm = 1e-3;
  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters{
      {"E_MPa", [&](const std::string& v) { spec.E = to_number(v) * 1e6; seen.E = true; }},
      {"nu", [&](const std::string& v) { spec.nu = to_number(v); seen.nu = true; }},
      {"h_m", [&](const std::string& v) { spec.geom.h = to_number(v); seen.h = true; }},
      {"diameter_inner_mm",
       [&](const std::string& v) { spec.geom.a = to_number(v) * mm / 2; seen.a = true; }},
      {"diameter_outer_mm",
       [&](const std::string& v) { spec.geom.b = to_number(v) * mm / 2; seen.b = true; }},
      {"diameter_load_mm",
       [&](const std::string& v) { spec.geom.eps = to_number(v) * mm / 2; seen.eps = true; }},
      {"P_kN", [&](const std::string& v) { spec.P = to_number(v) * 1e3; }},
      {"p_MPa", [&](const std::string& v) { spec.p = to_number(v) * 1e6; }},
      {"epsilon_tol", [&](const std::string& v) { spec.epsilon_tol = to_number(v); }},
      {"modes_M", [&](const std::string& v) { spec.M = to_int(v); }},
      {"target_l2_u1", [&](const std::string& v) { spec.target_l2_u1 = to_number(v); }},
      {"target_l2_u3", [&](const std::string& v) { spec.target_l2_u3 = to_number(v); }},
      {"grid_nrho", [&](const std::string& v) { spec.grid_nrho = to_int(v); }},
      {"grid_nz", [&](const std::string& v) { spec.grid_nz = to_int(v); }},
      {"grid_theta_deg",
       [&](const std::string& v) {
         spec.grid_theta.clear();
         for (double d : to_list(v)) spec.grid_theta.push_back(d * std::numbers::pi / 180);
       }},
      {"output_dir", [&](const std::string& v) { spec.output_dir = v; }},
      {"extended_precision", [&](const std::string& v) { spec.extended_precision = to_bool(v); }},
      {"verify", [&](const std::string& v) { spec.verify = to_bool(v); }},
      {"N_ceiling", [&](const std::string& v) { spec.N_ceiling = to_int(v); }},
  };

  std::istringstream in(text);
  std::string raw;
  std::map<std::string, int> first_line;
  for (int line = 1; std::getline(in, raw); ++line) {
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto where = origin + ":" + std::to_string(line) + ": ";
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + "missing key before '='");
    if (value.empty()) throw ConfigError(where + "missing value for " + key);
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(where + "unknown key " + key);
    if (const auto prev = first_line.find(key); prev != first_line.end()) {
      throw ConfigError(where + key + " already set on line " + std::to_string(prev->second));
    }
    first_line[key] = line;
    try {
      it->second(value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }

  if (!seen.E) throw ConfigError(origin + ": missing required key E_MPa (Young modulus E)");
  if (!seen.nu) throw ConfigError(origin + ": missing required key nu (Poisson ratio nu)");
  if (!seen.h) throw ConfigError(origin + ": missing required key h_m (cylinder height h)");
  if (!seen.a) throw ConfigError(origin + ": missing required key diameter_inner_mm (2a)");
  if (!seen.b) throw ConfigError(origin + ": missing required key diameter_outer_mm (2b)");
  if (!seen.eps) throw ConfigError(origin + ": missing required key diameter_load_mm (2eps)");
  try {
    spec.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return spec;
}

RunSpec parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), path);
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw ConfigError("grid must look like NRxNZ, got '" + text + "'");
  try {
    const int nr = to_int(trim(text.substr(0, x)));
    const int nz = to_int(trim(text.substr(x + 1)));
    if (nr < 2 || nz < 2) throw ConfigError("grid sizes must be >= 2");
    return {nr, nz};
  } catch (const ConfigError& e) {
    throw ConfigError("bad grid '" + text + "': " + e.what());
  }
}

}  // namespace hcyl
