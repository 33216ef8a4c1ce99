// vacpol: running vacuum permittivity, Landau-pole reports, screened
// Coulomb profiles and plane-wave identity checks on the command line.

#include "CLI11.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "vacpol/coulomb.hpp"
#include "vacpol/fields.hpp"
#include "vacpol/landau.hpp"
#include "vacpol/polarization.hpp"
#include "vacpol/version.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
  std::string preset_name;
  std::string registry_path;
  std::string output_path;
  double tolerance = 1e-12;
};

vacpol::ParticleRegistry resolve_registry(const CommonOpts& o,
                                          bool required = true) {
  if (!o.registry_path.empty() && !o.preset_name.empty()) {
    throw vacpol::ValidationError(
        "--preset and --registry are mutually exclusive");
  }
  if (!o.registry_path.empty()) {
    return vacpol::load_registry_file(o.registry_path);
  }
  if (!o.preset_name.empty()) {
    return vacpol::preset(o.preset_name);
  }
  if (required) {
    throw vacpol::ValidationError(
        "a registry is required: pass --preset <name> or --registry <file>");
  }
  return vacpol::preset(vacpol::Preset::sm_paper);
}

void add_registry_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--preset", o.preset_name,
                  "registry preset: sm_paper, sm_fermions, susy_doubled");
  cmd->add_option("--registry", o.registry_path, "registry JSON file");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--output", o.output_path,
                  "output path (default: stdout)");
  cmd->add_option("--tolerance", o.tolerance,
                  "absolute numerical tolerance");
}

void write_output(const CommonOpts& o, const std::string& text) {
  if (o.output_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(o.output_path, std::ios::binary);
  if (!out) {
    throw vacpol::ValidationError("cannot open output file '" +
                                  o.output_path + "'");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string registry_hash(const vacpol::ParticleRegistry& reg) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(reg.dump_json())));
  return buf;
}

std::string g_command_line;  // argv joined, echoed into CSV metadata

std::string csv_header(const vacpol::ParticleRegistry& reg,
                       const std::string& columns) {
  std::ostringstream os;
  os << "# vacpol " << vacpol::kVersion << "\n";
  os << "# command: " << g_command_line << "\n";
  os << "# registry: fnv1a64:" << registry_hash(reg) << "\n";
  os << columns << "\n";
  return os.str();
}

std::vector<double> make_grid(double from, double to, int points,
                              const std::string& scale) {
  if (points < 2) {
    throw vacpol::ValidationError("--points must be >= 2");
  }
  if (!(from < to)) {
    throw vacpol::ValidationError("--from must be below --to");
  }
  std::vector<double> grid;
  grid.reserve(points);
  if (scale == "log") {
    if (!(from > 0.0)) {
      throw vacpol::ValidationError(
          "log grids need positive bounds; use --scale linear to include 0");
    }
    const double ratio = to / from;
    for (int i = 0; i < points; ++i) {
      grid.push_back(from * std::pow(ratio, double(i) / (points - 1)));
    }
  } else if (scale == "linear") {
    if (from < 0.0) {
      throw vacpol::ValidationError("grid bounds must be >= 0");
    }
    for (int i = 0; i < points; ++i) {
      grid.push_back(from + (to - from) * double(i) / (points - 1));
    }
  } else {
    throw vacpol::ValidationError("--scale must be log or linear");
  }
  grid.front() = from;
  grid.back() = to;
  return grid;
}

const char* method_name(vacpol::PotentialMethod m) {
  switch (m) {
  case vacpol::PotentialMethod::numeric_full: return "numeric_full";
  case vacpol::PotentialMethod::numeric_linearized:
    return "numeric_linearized";
  case vacpol::PotentialMethod::asymptotic_small_r: return "asymptotic_small_r";
  case vacpol::PotentialMethod::asymptotic_large_r: return "asymptotic_large_r";
  }
  return "?";
}

struct SweepOpts {
  CommonOpts common;
  std::string quantity;
  double from = 0.0, to = 0.0;
  int points = 0;
  std::string scale = "log";
  std::string regime = "spacelike";
  std::string mode;
  int max_intervals = 512;
};

// rows for the k^2 quantities: running polarizability and couplings
std::string sweep_k2_rows(const SweepOpts& s,
                          const vacpol::ParticleRegistry& reg,
                          const vacpol::PhysicalConstants& consts) {
  const bool asymptotic = s.mode == "asymptotic";
  const auto regime = s.regime == "timelike" ? vacpol::Regime::timelike
                                             : vacpol::Regime::spacelike;
  std::ostringstream os;
  for (double q : make_grid(s.from, s.to, s.points, s.scale)) {
    const auto k2 = vacpol::k2_from_energy(q, regime);
    os << fmt17(q);
    try {
      if (asymptotic) {
        if (k2.k2_gev2 == 0.0) {
          throw vacpol::ValidationError(
              "asymptotic mode is undefined at Q = 0");
        }
        const double dp = vacpol::delta_pi_asymptotic(k2, reg, consts);
        if (std::fabs(1.0 - dp) < vacpol::kPoleProximity) {
          throw vacpol::PoleError("pole");
        }
        os << ',' << fmt17(dp) << ',' << fmt17(0.0) << ','
           << fmt17(1.0 - dp) << ',' << fmt17(1.0 / (1.0 - dp)) << ','
           << fmt17(0.0);
      } else {
        const auto r = vacpol::evaluate(k2, reg, consts, s.common.tolerance);
        os << ',' << fmt17(r.delta_pi.real()) << ','
           << fmt17(r.delta_pi.imag()) << ','
           << fmt17(r.eps0_of_k2 / consts.eps0) << ','
           << fmt17(r.alpha_eff.real() / consts.alpha) << ','
           << fmt17(r.alpha_eff.imag() / consts.alpha);
      }
    } catch (const vacpol::PoleError&) {
      os << ",POLE,POLE,POLE,POLE,POLE";
    } catch (const vacpol::ConvergenceError& e) {
      throw vacpol::ConvergenceError("at grid point Q = " + fmt17(q) +
                                         " GeV: " + e.what(),
                                     e.error_estimate());
    }
    os << "\n";
  }
  return os.str();
}

std::string sweep_phi_rows(const SweepOpts& s,
                           const vacpol::ParticleRegistry& reg,
                           const vacpol::PhysicalConstants& consts) {
  const auto mode = s.mode == "full" ? vacpol::PotentialMode::full
                                     : vacpol::PotentialMode::linearized;
  vacpol::CoulombOptions opts;
  opts.abs_tol = std::max(s.common.tolerance, 1e-14);
  opts.max_intervals = s.max_intervals;
  const double compton = vacpol::electron_compton_m(consts);
  std::ostringstream os;
  for (double rho : make_grid(s.from, s.to, s.points, s.scale)) {
    os << fmt17(rho);
    try {
      const auto sample = vacpol::phi_r(rho * compton, reg, consts, mode, opts);
      os << ',' << fmt17(sample.phi_volts) << ',' << fmt17(sample.correction)
         << ',' << method_name(sample.method);
      if (sample.truncated) {
        std::cerr << "warning: momentum integral truncated at rho = " << rho
                  << " (error estimate " << sample.error_estimate << ")\n";
      }
    } catch (const vacpol::PoleError&) {
      os << ",POLE,POLE,POLE";
    } catch (const vacpol::ConvergenceError& e) {
      throw vacpol::ConvergenceError("at grid point r/compton = " +
                                         fmt17(rho) + ": " + e.what(),
                                     e.error_estimate());
    }
    os << "\n";
  }
  return os.str();
}

int cmd_sweep(const SweepOpts& s) {
  const auto consts = vacpol::make_si_constants();
  const auto reg = resolve_registry(s.common);

  SweepOpts opts = s;
  if (opts.quantity == "phi_r") {
    if (opts.mode.empty()) opts.mode = "linearized";
    if (opts.mode != "full" && opts.mode != "linearized") {
      throw vacpol::ValidationError(
          "phi_r sweeps take --mode full|linearized");
    }
    const std::string body = sweep_phi_rows(opts, reg, consts);
    write_output(opts.common,
                 csv_header(reg, "r_over_compton,phi_volts,correction,method") +
                     body);
    return 0;
  }
  if (opts.quantity != "delta_pi" && opts.quantity != "alpha_eff" &&
      opts.quantity != "eps0") {
    throw vacpol::ValidationError(
        "--quantity must be delta_pi, alpha_eff, eps0 or phi_r");
  }
  if (opts.mode.empty()) opts.mode = "exact";
  if (opts.mode != "exact" && opts.mode != "asymptotic") {
    throw vacpol::ValidationError("--mode must be exact or asymptotic");
  }
  if (opts.mode == "asymptotic" && opts.from == 0.0) {
    throw vacpol::ValidationError("asymptotic mode is undefined at Q = 0");
  }
  const std::string body = sweep_k2_rows(opts, reg, consts);
  write_output(
      opts.common,
      csv_header(reg, "q_gev,delta_pi_re,delta_pi_im,eps0_ratio,"
                      "alpha_eff_re_ratio,alpha_eff_im_ratio") +
          body);
  return 0;
}

int cmd_landau(const CommonOpts& common) {
  const auto consts = vacpol::make_si_constants();
  const auto reg = resolve_registry(common);
  const auto res = vacpol::solve_landau_pole(reg, consts);

  ordered_json doc;
  doc["hbar_c_lambda_l_gev"] = res.lambda_l_gev;
  doc["log10_hbar_c_lambda_l"] = std::log10(res.lambda_l_gev);
  doc["f_factor"] = res.f_factor;
  doc["closure"] = vacpol::semiclassical_closure(res, consts);
  doc["charge_sum"] = res.charge_sum;
  doc["mean_mass_gev"] = res.mean_mass_gev;
  write_output(common, doc.dump(2) + "\n");
  return 0;
}

vacpol::Vec3 parse_triplet(const std::string& text, const char* flag) {
  vacpol::Vec3 v;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &v.x, &v.y, &v.z, &extra) !=
      3) {
    throw vacpol::ValidationError(std::string(flag) +
                                  " expects three comma-separated numbers");
  }
  return v;
}

struct WaveOpts {
  CommonOpts common;
  std::string k_text;
  std::string e_text;
  double omega_scale = 1.0;
};

int cmd_wave_check(const WaveOpts& w) {
  const auto consts = vacpol::make_si_constants();
  const vacpol::Vec3 k = parse_triplet(w.k_text, "--k");
  const vacpol::Vec3 e = parse_triplet(w.e_text, "--e0");
  const vacpol::CVec3 e0{e.x, e.y, e.z};

  vacpol::PlaneWaveField wave;
  if (w.omega_scale == 1.0) {
    wave = vacpol::make_plane_wave(k, e0, consts);
  } else {
    const auto reg = resolve_registry(w.common, /*required=*/false);
    const double omega = w.omega_scale * vacpol::norm(k) * consts.c;
    wave = vacpol::make_wave_with_omega(k, e0, omega, reg, consts);
  }
  const auto res = vacpol::maxwell_residual(wave, 0.0, {});
  const bool pass = res.gauss <= w.common.tolerance &&
                    res.ampere <= w.common.tolerance;

  ordered_json doc;
  doc["omega_rad_s"] = wave.omega;
  doc["k2_si"] = wave.k2_si;
  doc["residual_gauss"] = res.gauss;
  doc["residual_ampere"] = res.ampere;
  doc["d_amplitude"] = vacpol::norm(wave.d0);
  doc["h_amplitude"] = vacpol::norm(wave.h0);
  doc["tolerance"] = w.common.tolerance;
  doc["pass"] = pass;
  write_output(w.common, doc.dump(2) + "\n");
  return pass ? 0 : 1;
}

int cmd_registry_dump(const CommonOpts& common) {
  const auto reg = resolve_registry(common);
  ordered_json doc = ordered_json::parse(reg.dump_json());
  ordered_json out;
  out["registry"] = doc;
  ordered_json summary;
  summary["species_count"] = reg.species().size();
  summary["effective_charge_sum"] = reg.effective_charge_sum();
  summary["mean_log_mass_gev"] = reg.mean_log_mass_gev();
  summary["uses_mean_mass"] = reg.uses_mean_mass();
  summary["warnings"] = reg.warnings();
  out["summary"] = summary;
  write_output(common, out.dump(2) + "\n");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  std::ostringstream cmdline;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) cmdline << ' ';
    cmdline << argv[i];
  }
  g_command_line = cmdline.str();

  CLI::App app{"dielectric response of the quantum vacuum"};
  app.require_subcommand(1);

  SweepOpts sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "tabulate a quantity over a grid");
  sweep_cmd->add_option("--quantity", sweep.quantity,
                        "delta_pi | alpha_eff | eps0 | phi_r")
      ->required();
  sweep_cmd->add_option("--from", sweep.from, "lower grid bound")->required();
  sweep_cmd->add_option("--to", sweep.to, "upper grid bound")->required();
  sweep_cmd->add_option("--points", sweep.points, "grid size")->required();
  sweep_cmd->add_option("--scale", sweep.scale, "log | linear");
  sweep_cmd->add_option("--regime", sweep.regime, "spacelike | timelike");
  sweep_cmd->add_option("--mode", sweep.mode,
                        "exact|asymptotic (k2) or full|linearized (phi_r)");
  sweep_cmd->add_option("--max-intervals", sweep.max_intervals,
                        "oscillatory quadrature interval cap");
  add_registry_flags(sweep_cmd, sweep.common);
  add_output_flags(sweep_cmd, sweep.common);

  CommonOpts landau;
  auto* landau_cmd =
      app.add_subcommand("landau", "Landau-pole scale, f factor and closure");
  add_registry_flags(landau_cmd, landau);
  add_output_flags(landau_cmd, landau);

  SweepOpts pot;
  pot.quantity = "phi_r";
  auto* pot_cmd = app.add_subcommand(
      "potential", "screened Coulomb potential profile over r/compton");
  pot_cmd->add_option("--from", pot.from, "lower r/compton bound")->required();
  pot_cmd->add_option("--to", pot.to, "upper r/compton bound")->required();
  pot_cmd->add_option("--points", pot.points, "grid size")->required();
  pot_cmd->add_option("--scale", pot.scale, "log | linear");
  pot_cmd->add_option("--mode", pot.mode, "full | linearized");
  pot_cmd->add_option("--max-intervals", pot.max_intervals,
                      "oscillatory quadrature interval cap");
  add_registry_flags(pot_cmd, pot.common);
  add_output_flags(pot_cmd, pot.common);

  WaveOpts wave;
  auto* wave_cmd = app.add_subcommand(
      "wave-check", "Maxwell residuals of a plane-wave configuration");
  wave_cmd->add_option("--k", wave.k_text, "wavevector x,y,z in 1/m")
      ->required();
  wave_cmd->add_option("--e0", wave.e_text, "E amplitude x,y,z in V/m")
      ->required();
  wave_cmd->add_option("--omega-scale", wave.omega_scale,
                       "omega / (|k| c); 1 is on shell");
  add_registry_flags(wave_cmd, wave.common);
  add_output_flags(wave_cmd, wave.common);

  CommonOpts reg_dump;
  auto* registry_cmd =
      app.add_subcommand("registry", "registry inspection commands");
  registry_cmd->require_subcommand(1);
  auto* dump_cmd = registry_cmd->add_subcommand(
      "dump", "echo the validated registry with a summary");
  add_registry_flags(dump_cmd, reg_dump);
  add_output_flags(dump_cmd, reg_dump);

  try {
    app.parse(argc, argv);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (landau_cmd->parsed()) return cmd_landau(landau);
    if (pot_cmd->parsed()) return cmd_sweep(pot);
    if (wave_cmd->parsed()) return cmd_wave_check(wave);
    if (registry_cmd->parsed() && dump_cmd->parsed()) {
      return cmd_registry_dump(reg_dump);
    }
    std::cerr << "no command selected\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const vacpol::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const vacpol::PoleError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const vacpol::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vacpol::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
