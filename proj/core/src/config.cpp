#include "nlslab/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace nlslab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& name, int line,
                       const std::string& msg) {
  std::ostringstream os;
  os << name << ":" << line << ": " << msg;
  throw ConfigError(os.str());
}

double parse_double(const std::string& name, int line, const std::string& v) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) fail(name, line, "trailing characters in number '" + v + "'");
    return d;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(name, line, "cannot parse number '" + v + "'");
  }
}

std::vector<double> parse_doubles(const std::string& name, int line,
                                  const std::string& v, size_t count) {
  std::istringstream is(v);
  std::vector<double> out;
  double d;
  while (is >> d) out.push_back(d);
  if (!is.eof() || out.size() != count) {
    std::ostringstream os;
    os << "expected " << count << " numbers, got '" << v << "'";
    fail(name, line, os.str());
  }
  return out;
}

std::vector<Complex> load_profile(const std::string& cfg_name, int line,
                                  const std::filesystem::path& path,
                                  double& L_out) {
  std::ifstream in(path);
  if (!in) fail(cfg_name, line, "cannot open profile file " + path.string());
  std::vector<double> xs;
  std::vector<Complex> vals;
  std::string row;
  int rowno = 0;
  while (std::getline(in, row)) {
    ++rowno;
    const std::string t = trim(row);
    if (t.empty() || t[0] == '#') continue;
    std::string cells = t;
    for (char& ch : cells)
      if (ch == ',') ch = ' ';
    std::istringstream is(cells);
    double x, re, im;
    if (!(is >> x >> re >> im))
      fail(path.string(), rowno, "expected 'x,Re f,Im f'");
    xs.push_back(x);
    vals.emplace_back(re, im);
  }
  if (vals.size() < 2) fail(cfg_name, line, "profile needs >= 2 rows");
  if (std::abs(xs.front()) > 1e-12)
    fail(cfg_name, line, "profile must start at x = 0");
  const double h = xs[1] - xs[0];
  for (size_t j = 1; j < xs.size(); ++j)
    if (std::abs(xs[j] - xs[j - 1] - h) > 1e-9 * std::max(1.0, std::abs(h)))
      fail(cfg_name, line, "profile nodes must be uniform");
  L_out = xs.back();
  return vals;
}

}  // namespace

PotentialSpec ScatteringConfig::potential_at(double k, int slab_m) const {
  const double Luse = slab_m > 0 ? 2.0 * kPi * slab_m / K : L;
  const double zeta = strength_is_hat ? strength * k * k : strength;
  if (sampled) return PotentialSpec::from_samples(Luse, K, zeta, profile);
  return PotentialSpec::fourier(Luse, K, zeta, coefficients);
}

NonlinearitySpec ScatteringConfig::nonlinearity_at(double k) const {
  return NonlinearitySpec::kerr(gamma_is_hat ? gamma * k * k : gamma);
}

ScatteringConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in, path);
}

ScatteringConfig parse_config(std::istream& in, const std::string& name) {
  ScatteringConfig cfg;
  std::string section;
  std::string raw;
  int lineno = 0;
  bool have_strength = false, have_gamma = false, have_L = false, have_m = false;
  std::string profile_path;
  int profile_line = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(name, lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "potential" && section != "nonlinearity" &&
          section != "incidence" && section != "numerics")
        fail(name, lineno, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(name, lineno, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) fail(name, lineno, "key outside of any section");

    if (section == "potential") {
      if (key == "K") {
        cfg.K = parse_double(name, lineno, value);
      } else if (key == "L") {
        cfg.L = parse_double(name, lineno, value);
        have_L = true;
      } else if (key == "m") {
        cfg.m = static_cast<int>(parse_double(name, lineno, value));
        have_m = true;
      } else if (key == "strength" || key == "strength_hat") {
        if (have_strength)
          fail(name, lineno, "strength given twice (strength/strength_hat)");
        cfg.strength = parse_double(name, lineno, value);
        cfg.strength_is_hat = key == "strength_hat";
        have_strength = true;
      } else if (key == "coefficient") {
        const auto v = parse_doubles(name, lineno, value, 3);
        const int n = static_cast<int>(std::lround(v[0]));
        cfg.coefficients[n] += Complex{v[1], v[2]};
      } else if (key == "profile") {
        profile_path = value;
        profile_line = lineno;
      } else {
        fail(name, lineno, "unknown potential key '" + key + "'");
      }
    } else if (section == "nonlinearity") {
      if (key == "kind") {
        if (value != "kerr")
          fail(name, lineno,
               "unknown nonlinearity kind '" + value +
                   "' (config supports kerr; custom laws are library-only)");
      } else if (key == "gamma" || key == "gamma_hat") {
        if (have_gamma) fail(name, lineno, "gamma given twice (gamma/gamma_hat)");
        cfg.gamma = parse_double(name, lineno, value);
        cfg.gamma_is_hat = key == "gamma_hat";
        have_gamma = true;
      } else {
        fail(name, lineno, "unknown nonlinearity key '" + key + "'");
      }
    } else if (section == "incidence") {
      if (key == "amplitude_right") {
        const auto v = parse_doubles(name, lineno, value, 2);
        cfg.amplitude_right = Complex{v[0], v[1]};
      } else if (key == "amplitude_left") {
        const auto v = parse_doubles(name, lineno, value, 2);
        cfg.amplitude_left = Complex{v[0], v[1]};
      } else {
        fail(name, lineno, "unknown incidence key '" + key + "'");
      }
    } else {  // numerics
      if (key == "grid_size") {
        cfg.grid_size = static_cast<int>(parse_double(name, lineno, value));
      } else if (key == "solver_tol") {
        cfg.solver_tol = parse_double(name, lineno, value);
      } else if (key == "classify_tol") {
        cfg.classify_tol = parse_double(name, lineno, value);
      } else {
        fail(name, lineno, "unknown numerics key '" + key + "'");
      }
    }
  }

  if (!(cfg.K > 0.0)) throw ConfigError(name + ": K must be > 0");
  if (have_L && have_m)
    throw ConfigError(name + ": give either L or m, not both");
  if (have_m) {
    if (cfg.m < 1) throw ConfigError(name + ": m must be >= 1");
    cfg.L = 2.0 * kPi * cfg.m / cfg.K;
  }

  if (!profile_path.empty()) {
    if (!cfg.coefficients.empty())
      throw ConfigError(name +
                        ": exactly one of coefficients/profile may be given");
    std::filesystem::path p(profile_path);
    if (p.is_relative()) {
      const std::filesystem::path base = std::filesystem::path(name).parent_path();
      if (!base.empty()) p = base / p;
    }
    double Lprof = 0.0;
    cfg.profile = load_profile(name, profile_line, p, Lprof);
    cfg.sampled = true;
    if (!have_L && !have_m) cfg.L = Lprof;
    if (std::abs(Lprof - cfg.L) > 1e-9 * std::max(1.0, cfg.L))
      throw ConfigError(name + ": profile extent disagrees with L");
  }

  if (!(cfg.L > 0.0))
    throw ConfigError(name + ": slab thickness unset (give m or L)");
  if (cfg.coefficients.empty() && !cfg.sampled)
    throw ConfigError(name + ": potential has no coefficients and no profile");
  if (cfg.amplitude_right == Complex{0.0, 0.0} ||
      cfg.amplitude_left == Complex{0.0, 0.0})
    throw ConfigError(name + ": incidence amplitudes must be nonzero");
  if (cfg.grid_size < 64 || cfg.grid_size % 2 != 0)
    throw ConfigError(name + ": grid_size must be even and >= 64");
  if (!(cfg.solver_tol > 0.0) || !(cfg.classify_tol > 0.0))
    throw ConfigError(name + ": tolerances must be > 0");
  return cfg;
}

}  // namespace nlslab
