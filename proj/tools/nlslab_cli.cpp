// nlslab command-line front end: single-point amplitudes, k sweeps,
// invisibility classification, and the resonant-wavenumber grid.
//
// Exit codes: 0 ok, 2 config error, 3 solver error, 4 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlslab/born.hpp"
#include "nlslab/classify.hpp"
#include "nlslab/config.hpp"
#include "nlslab/direct.hpp"
#include "nlslab/sweep.hpp"

namespace {

using nlslab::Amplitudes;
using nlslab::Method;
using nlslab::ScatteringConfig;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

Method parse_method(const std::string& name) {
  if (name == "direct") return Method::Direct;
  if (name == "born1") return Method::Born1;
  if (name == "born2") return Method::Born2;
  if (name == "born2res") return Method::Born2Resonance;
  throw CLI::ValidationError("--method",
                             "expected direct|born1|born2|born2res");
}

bool parse_k_range(const std::string& spec, double& lo, double& hi, int& n) {
  const auto c1 = spec.find(':');
  const auto c2 = spec.rfind(':');
  if (c1 == std::string::npos || c2 == c1) return false;
  try {
    size_t p = 0;
    lo = std::stod(spec.substr(0, c1), &p);
    hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1), &p);
    n = std::stoi(spec.substr(c2 + 1), &p);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

void print_warnings(const ScatteringConfig& cfg) {
  const auto pot = cfg.potential_at(cfg.K);  // representative k for hats
  for (const std::string& w : pot.warnings())
    std::cerr << "warning: " << w << "\n";
}

void print_complex_row(const char* name, nlslab::Complex v) {
  std::printf("%-4s % .17g  % .17g  |.| = %.17g\n", name, v.real(), v.imag(),
              std::abs(v));
}

int cmd_amplitudes(const ScatteringConfig& cfg, double k_over_K,
                   Method method) {
  if (method == Method::Direct) {
    const double k = k_over_K * cfg.K;
    nlslab::SolveOptions opt;
    opt.grid_size = cfg.grid_size * std::max(1, cfg.m);
    opt.tol = cfg.solver_tol;
    const nlslab::DirectResult r = nlslab::direct_scattering(
        cfg.potential_at(k), cfg.nonlinearity_at(k), k, cfg.amplitude_right,
        cfg.amplitude_left, opt);
    std::printf("# method: direct, k/K = %.17g\n", k_over_K);
    print_complex_row("Rr", r.jost.Rr);
    print_complex_row("Rl", r.jost.Rl);
    print_complex_row("Tr", r.jost.Tr);
    print_complex_row("Tl", r.jost.Tl);
    std::printf("# transforms (X~(0), X~(2k), Y~(0), Y~(-2k)):\n");
    print_complex_row("X0", r.transforms.X0);
    print_complex_row("X2k", r.transforms.X2k);
    print_complex_row("Y0", r.transforms.Y0);
    print_complex_row("Ym2k", r.transforms.Ym2k);
    return kExitOk;
  }
  const Amplitudes a = nlslab::evaluate_method(cfg, method, k_over_K);
  std::printf("# method: %s, k/K = %.17g\n", nlslab::method_name(method),
              k_over_K);
  print_complex_row("Rr", a.Rr);
  print_complex_row("Rl", a.Rl);
  print_complex_row("Tr", a.Tr);
  print_complex_row("Tl", a.Tl);
  return kExitOk;
}

int cmd_sweep(const ScatteringConfig& cfg, nlslab::SweepRequest req,
              const std::vector<int>& m_list, const std::string& out_path) {
  auto write_one = [&](const std::filesystem::path& path,
                       const std::vector<nlslab::SweepRow>& rows) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::ios_base::failure("cannot open " + path.string());
    nlslab::write_sweep_csv(os, rows);
    os.flush();
    if (!os) throw std::ios_base::failure("write failed for " + path.string());
  };

  if (m_list.empty()) {
    write_one(out_path, nlslab::run_sweep(cfg, req));
    return kExitOk;
  }
  // one file per m, suffixed _m<M> before the extension, same fixed header
  const std::filesystem::path base(out_path);
  for (int m : m_list) {
    req.slab_m = m;
    std::filesystem::path p = base;
    const std::string stem = p.stem().string();
    const std::string ext = p.extension().string();
    p.replace_filename(stem + "_m" + std::to_string(m) + ext);
    write_one(p, nlslab::run_sweep(cfg, req));
  }
  return kExitOk;
}

int cmd_classify(const ScatteringConfig& cfg, double k_over_K, Method method,
                 double tol) {
  const double k = k_over_K * cfg.K;
  nlslab::Classification c;
  if (method == Method::Direct) {
    nlslab::SolveOptions opt;
    opt.grid_size = cfg.grid_size * std::max(1, cfg.m);
    opt.tol = cfg.solver_tol;
    const nlslab::DirectResult r = nlslab::direct_scattering(
        cfg.potential_at(k), cfg.nonlinearity_at(k), k, cfg.amplitude_right,
        cfg.amplitude_left, opt);
    c = nlslab::classify_transforms(r.transforms.X0, r.transforms.X2k,
                                    r.transforms.Ym2k, r.transforms.Y0, k,
                                    tol);
  } else {
    c = nlslab::classify_amplitudes(
        nlslab::evaluate_method(cfg, method, k_over_K), tol);
  }
  nlohmann::json j{
      {"k_over_K", k_over_K},
      {"method", nlslab::method_name(method)},
      {"tol", c.tol},
      {"reflectionless_right", c.reflectionless_right},
      {"reflectionless_left", c.reflectionless_left},
      {"transparent_right", c.transparent_right},
      {"transparent_left", c.transparent_left},
      {"invisible_right", c.invisible_right},
      {"invisible_left", c.invisible_left},
      {"unidirectional", nlslab::unidirectional_name(c.unidirectional)},
      {"residual_reflection_right", c.residual_reflection_right},
      {"residual_reflection_left", c.residual_reflection_left},
      {"residual_transparency_right", c.residual_transparency_right},
      {"residual_transparency_left", c.residual_transparency_left},
  };
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_resonances(const ScatteringConfig& cfg, int s_max) {
  const auto set = nlslab::resonant_wavenumbers(cfg.potential_at(cfg.K), s_max);
  std::printf("# m = %d\ns,k,k_over_K\n", set.m);
  for (const auto& [s, k] : set.points)
    std::printf("%d,%.17g,%.17g\n", s, k, k / cfg.K);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattering amplitudes of a finite slab with a confined "
               "Kerr-type nonlinearity"};
  app.require_subcommand(1);

  std::string config_path, method_name = "direct", k_range, out_path = "sweep.csv";
  std::string m_list_str;
  double k_over_K = 1.0, tol = -1.0;
  int workers = 1, s_max = 9;

  app.add_option("--config", config_path, "configuration file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* amp = app.add_subcommand("amplitudes",
                                     "R and T at a single wavenumber");
  amp->add_option("--k", k_over_K, "wavenumber in units of K")->required();
  amp->add_option("--method", method_name, "direct|born1|born2|born2res");

  CLI::App* sweep = app.add_subcommand("sweep", "amplitudes over a k grid -> CSV");
  sweep->add_option("--method", method_name, "direct|born1|born2|born2res");
  sweep->add_option("--k-range", k_range, "lo:hi:points (k in units of K)")
      ->required();
  sweep->add_option("--m-list", m_list_str,
                    "comma-separated slab multiples; one CSV per m");
  sweep->add_option("--out", out_path, "output CSV path");
  sweep->add_option("--workers", workers, "worker threads");

  CLI::App* cls = app.add_subcommand("classify",
                                     "reflectionless/transparent/invisible flags");
  cls->add_option("--k", k_over_K, "wavenumber in units of K")->required();
  cls->add_option("--method", method_name, "direct|born1|born2|born2res");
  cls->add_option("--tol", tol, "classification threshold");

  CLI::App* res = app.add_subcommand("resonances", "resonant grid k = sK/2");
  res->add_option("--s-max", s_max, "largest s");

  CLI11_PARSE(app, argc, argv);

  try {
    const ScatteringConfig cfg = nlslab::load_config(config_path);
    print_warnings(cfg);
    if (amp->parsed())
      return cmd_amplitudes(cfg, k_over_K, parse_method(method_name));
    if (sweep->parsed()) {
      nlslab::SweepRequest req;
      req.method = parse_method(method_name);
      req.workers = workers;
      if (!parse_k_range(k_range, req.k_over_K_lo, req.k_over_K_hi, req.points))
        throw nlslab::ConfigError("--k-range must be lo:hi:points");
      std::vector<int> m_list;
      if (!m_list_str.empty()) {
        std::istringstream is(m_list_str);
        std::string tok;
        while (std::getline(is, tok, ',')) m_list.push_back(std::stoi(tok));
      }
      return cmd_sweep(cfg, req, m_list, out_path);
    }
    if (cls->parsed()) {
      const ScatteringConfig c2 = cfg;
      const double use_tol = tol > 0.0 ? tol : c2.classify_tol;
      return cmd_classify(c2, k_over_K, parse_method(method_name), use_tol);
    }
    return cmd_resonances(cfg, s_max);
  } catch (const nlslab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlslab::SolverError& e) {
    std::cerr << "solver error: " << e.what() << " (reached x = " << e.reached_x
              << ")\n";
    return kExitSolver;
  } catch (const nlslab::SpectralSingularityError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
