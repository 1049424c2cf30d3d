/*
  hquant — desk-scale checks of the multipole quantization identities.

  Subcommands
  -----------
    degeneracy   sphere-quadrature sum over |Y_n^m|^2 versus 2n+1, per order
    radial       closed-form radial integral versus its large-kR limit (CSV scan)
    energy       band energy and the inferred action beta_hat per reference k0
    angmom       intrinsic angular momentum sampled over one cycle
    verify-all   the whole acceptance battery, one PASS/FAIL line per criterion

  Exit codes (CI contract)
  ------------------------
    0  success / all checks passed
    1  usage error (bad flags, invalid parameter values)
    2  verification failure (a tolerance was breached)

  Output is deterministic: identical invocations produce identical bytes.
  The HQ_THREADS environment variable caps worker threads without affecting
  any emitted value.
*/

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hq/angmom.hpp"
#include "hq/angular.hpp"
#include "hq/core.hpp"
#include "hq/energy.hpp"
#include "hq/io.hpp"
#include "hq/radial.hpp"
#include "hq/verify.hpp"

namespace {

enum class ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailure = 2,
};

int to_int(ExitCode code) { return static_cast<int>(code); }

/// Writes to the given path, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << payload;
}

struct DegeneracyOptions {
  int n_max = 10;
  double tol = 1e-9;
  int theta_order = 0;  // 0 = smallest sufficient rule per order
  int phi_points = 0;
  std::string output;
};

struct RadialOptions {
  int n_max = 10;
  std::vector<double> kR_values{1e2, 1e3, 1e4, 1e5};
  std::string output;
};

struct SetupOptions {
  bool si = false;
  double R = 1.0;
  double V = 1.0;
  double E0 = 1.0;

  [[nodiscard]] hq::PhysicalSetup build() const {
    hq::PhysicalSetup setup = si ? hq::PhysicalSetup::si() : hq::PhysicalSetup::natural();
    setup.R = R;
    setup.V = V;
    setup.E0 = E0;
    return hq::validated(setup);
  }
};

struct EnergyOptions {
  int n = 0;
  double omega = 1.0;
  std::vector<double> k0_values{1.0, 10.0, 100.0};
  std::string radial_mode = "asymptotic";
  std::string format = "json";
  std::string output;
  SetupOptions setup;
  int radial_panels = 8;
  int radial_order = 12;
};

struct AngmomOptions {
  int n = 1;
  double kR = 5.0;
  std::string polarization = "circular+";
  int samples = 9;
  std::string format = "json";
  std::string output;
  SetupOptions setup;
};

struct VerifyOptions {
  std::string profile = "quick";
  std::string output;
};

int run_degeneracy(const DegeneracyOptions& opt) {
  if (opt.n_max < 0) throw std::domain_error("--n-max must be >= 0");
  std::string csv = "n,sum,error\n";
  bool breached = false;
  for (int n = 0; n <= opt.n_max; ++n) {
    hq::QuadratureSpec spec = hq::QuadratureSpec::for_order(n);
    if (opt.theta_order > 0) spec.theta_order = opt.theta_order;
    if (opt.phi_points > 0) spec.phi_points = opt.phi_points;
    const double sum = hq::angular::degeneracy_sum(n, spec);
    const double error = sum - (2.0 * n + 1.0);
    if (std::abs(error) > opt.tol) breached = true;
    csv += std::to_string(n) + ',' + hq::io::fmt17(sum) + ',' + hq::io::fmt17(error) + '\n';
  }
  emit(opt.output, csv);
  return to_int(breached ? ExitCode::kVerificationFailure : ExitCode::kOk);
}

int run_radial(const RadialOptions& opt) {
  const auto rows = hq::radial::asymptotic_deviation_scan(opt.n_max, opt.kR_values);
  emit(opt.output, hq::io::deviation_scan_csv(rows));
  return to_int(ExitCode::kOk);
}

int run_energy(const EnergyOptions& opt) {
  const hq::PhysicalSetup setup = opt.setup.build();
  hq::QuadratureSpec spec;
  spec.radial_panels = opt.radial_panels;
  spec.radial_order = opt.radial_order;
  const auto report = hq::energy::k0_independence_scan(
      opt.n, opt.omega, opt.k0_values, setup,
      hq::io::radial_mode_from_string(opt.radial_mode), spec);
  if (opt.format == "csv") {
    emit(opt.output, hq::io::beta_report_csv(report));
  } else {
    emit(opt.output, hq::io::beta_report_json(report).dump(2) + "\n");
  }
  return to_int(ExitCode::kOk);
}

int run_angmom(const AngmomOptions& opt) {
  const hq::PhysicalSetup setup = opt.setup.build();
  if (opt.samples < 2) throw std::domain_error("--samples must be >= 2");
  if (!(opt.kR > 0.0)) throw std::domain_error("--kr must be > 0");

  hq::FieldSpec fs;
  fs.n = opt.n;
  fs.k = opt.kR / setup.R;
  fs.E0 = setup.E0;
  fs.polarization = hq::io::polarization_from_string(opt.polarization);
  fs.khat = hq::Vec3{1.0, 2.0, 3.0}.normalized();

  const double omega = setup.c * fs.k;
  const double period = 2.0 * hq::pi / omega;
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(opt.samples));
  for (int i = 0; i < opt.samples; ++i) {
    times.push_back(period * static_cast<double>(i) / static_cast<double>(opt.samples - 1));
  }

  const auto report = hq::angmom::conservation_check(fs, setup, setup.R, times,
                                                     hq::QuadratureSpec::for_order(opt.n));
  if (opt.format == "csv") {
    emit(opt.output, hq::io::angmom_samples_csv(report));
  } else {
    emit(opt.output, hq::io::angmom_report_json(report).dump(2) + "\n");
  }
  return to_int(ExitCode::kOk);
}

int run_verify(const VerifyOptions& opt) {
  const auto profile =
      (opt.profile == "full") ? hq::verify::Profile::Full : hq::verify::Profile::Quick;
  const auto results = hq::verify::run_all(profile);
  emit(opt.output, hq::verify::render(results));
  return to_int(hq::verify::all_passed(results) ? ExitCode::kOk
                                                : ExitCode::kVerificationFailure);
}

void add_setup_flags(CLI::App* cmd, SetupOptions& setup) {
  cmd->add_flag("--si", setup.si, "use SI constants (default: natural units)");
  cmd->add_option("--radius", setup.R, "quantization radius R")->capture_default_str();
  cmd->add_option("--volume", setup.V, "quantization volume V")->capture_default_str();
  cmd->add_option("--amplitude", setup.E0, "field amplitude E0")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale checks of the multipole quantization identities"};
  app.set_config("--config", "", "key = value configuration file");
  app.require_subcommand(1);

  DegeneracyOptions deg;
  auto* deg_cmd = app.add_subcommand(
      "degeneracy", "sphere-quadrature sum over |Y_n^m|^2 versus 2n+1, per order");
  deg_cmd->add_option("--n-max", deg.n_max, "largest order to check")->capture_default_str();
  deg_cmd->add_option("--tol", deg.tol, "gate on |sum - (2n+1)|")->capture_default_str();
  deg_cmd->add_option("--theta-order", deg.theta_order,
                      "fixed polar quadrature order (default: per-order minimum)");
  deg_cmd->add_option("--phi-points", deg.phi_points,
                      "fixed azimuthal point count (default: per-order minimum)");
  deg_cmd->add_option("-o,--output", deg.output, "write CSV here instead of stdout");

  RadialOptions rad;
  auto* rad_cmd = app.add_subcommand(
      "radial", "closed-form radial integral versus its large-kR limit (CSV scan)");
  rad_cmd->add_option("--n-max", rad.n_max, "largest order to scan")->capture_default_str();
  rad_cmd->add_option("--kr", rad.kR_values, "ascending kR values")->capture_default_str();
  rad_cmd->add_option("-o,--output", rad.output, "write CSV here instead of stdout");

  EnergyOptions ene;
  auto* ene_cmd = app.add_subcommand(
      "energy", "band energy and the inferred action beta_hat per reference k0");
  ene_cmd->add_option("--n", ene.n, "multipole order")->capture_default_str();
  ene_cmd->add_option("--omega", ene.omega, "band width as angular frequency")
      ->capture_default_str();
  ene_cmd->add_option("--k0", ene.k0_values, "reference wavenumbers")->capture_default_str();
  ene_cmd->add_option("--radial-mode", ene.radial_mode, "numeric | closed | asymptotic")
      ->capture_default_str();
  ene_cmd->add_option("--format", ene.format, "json | csv")->capture_default_str();
  ene_cmd->add_option("--radial-panels", ene.radial_panels, "quadrature panels per band")
      ->capture_default_str();
  ene_cmd->add_option("--radial-order", ene.radial_order, "quadrature order per panel")
      ->capture_default_str();
  ene_cmd->add_option("-o,--output", ene.output, "write here instead of stdout");
  add_setup_flags(ene_cmd, ene.setup);

  AngmomOptions ang;
  auto* ang_cmd = app.add_subcommand(
      "angmom", "intrinsic angular momentum sampled over one cycle");
  ang_cmd->add_option("--n", ang.n, "multipole order")->capture_default_str();
  ang_cmd->add_option("--kr", ang.kR, "dimensionless kR of the mode")->capture_default_str();
  ang_cmd->add_option("--polarization", ang.polarization,
                      "linear1 | linear2 | circular+ | circular-")
      ->capture_default_str();
  ang_cmd->add_option("--samples", ang.samples, "time samples across one period")
      ->capture_default_str();
  ang_cmd->add_option("--format", ang.format, "json | csv")->capture_default_str();
  ang_cmd->add_option("-o,--output", ang.output, "write here instead of stdout");
  add_setup_flags(ang_cmd, ang.setup);

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand(
      "verify-all", "the whole acceptance battery, one PASS/FAIL line per criterion");
  ver_cmd->add_option("--profile", ver.profile, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  ver_cmd->add_option("-o,--output", ver.output, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : to_int(ExitCode::kUsage);
  }

  try {
    if (app.got_subcommand(deg_cmd)) return run_degeneracy(deg);
    if (app.got_subcommand(rad_cmd)) return run_radial(rad);
    if (app.got_subcommand(ene_cmd)) return run_energy(ene);
    if (app.got_subcommand(ang_cmd)) return run_angmom(ang);
    if (app.got_subcommand(ver_cmd)) return run_verify(ver);
  } catch (const std::domain_error& e) {
    std::cerr << "hquant: " << e.what() << '\n';
    return to_int(ExitCode::kUsage);
  } catch (const std::invalid_argument& e) {
    std::cerr << "hquant: " << e.what() << '\n';
    return to_int(ExitCode::kUsage);
  } catch (const std::exception& e) {
    std::cerr << "hquant: " << e.what() << '\n';
    return to_int(ExitCode::kUsage);
  }
  return to_int(ExitCode::kUsage);
}
