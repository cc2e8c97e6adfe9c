// Command-line front end. Talks to the library only through the C interface.
//
//   goldfish simulate   --config c.json --method spectral --out traj.csv
//   goldfish equilibria --n 3 --out catalog.json
//   goldfish verify     --config c.json --tol 1e-5
//   goldfish plot       --trajectory traj.csv --out traj.svg --overlay-equilibria --overlay-initial
//
// Exit status: 0 success, 1 usage or I/O error, 2 numerical failure (including a failed verification).

#include <cstdio>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "goldfish/goldfish.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

int report(gf_status status) {
  if (status == GF_OK) return kExitOk;
  std::fprintf(stderr, "error (%s): %s\n", gf_status_name(status), gf_last_error());
  return gf_status_is_numerical(status) ? kExitNumerical : kExitUsage;
}

struct ConfigDeleter {
  void operator()(gf_config c) const { gf_config_destroy(c); }
};
struct TrajectoryDeleter {
  void operator()(gf_trajectory t) const { gf_trajectory_destroy(t); }
};
struct CatalogDeleter {
  void operator()(gf_catalog c) const { gf_catalog_destroy(c); }
};
using ConfigPtr = std::unique_ptr<gf_config_s, ConfigDeleter>;
using TrajectoryPtr = std::unique_ptr<gf_trajectory_s, TrajectoryDeleter>;
using CatalogPtr = std::unique_ptr<gf_catalog_s, CatalogDeleter>;

struct SimulateArgs {
  std::string config;
  std::string method = "spectral";
  double t_end = 0.0;
  int samples = 0;
  std::string out;
  std::string format = "csv";
  double rtol = 0.0;
  double atol = 0.0;
  bool literal_m = false;
};

int run_simulate(const SimulateArgs& a) {
  static const std::map<std::string, gf_method> methods = {{"spectral", GF_METHOD_SPECTRAL},
                                                           {"ode", GF_METHOD_ODE},
                                                           {"isogold-algebraic", GF_METHOD_ISOGOLD_ALGEBRAIC},
                                                           {"isogold-ode", GF_METHOD_ISOGOLD_ODE}};
  gf_config raw_config = nullptr;
  if (gf_status s = gf_config_load_file(a.config.c_str(), &raw_config); s != GF_OK) return report(s);
  ConfigPtr config(raw_config);

  gf_simulate_options options = gf_simulate_defaults();
  options.t_end = a.t_end;
  options.samples = a.samples;
  options.rtol = a.rtol;
  options.atol = a.atol;
  options.literal_m = a.literal_m ? 1 : 0;
  gf_trajectory raw = nullptr;
  if (gf_status s = gf_simulate(config.get(), methods.at(a.method), &options, &raw); s != GF_OK) return report(s);
  TrajectoryPtr trajectory(raw);
  return report(gf_trajectory_write(trajectory.get(), a.out.c_str(), a.format == "json" ? GF_FORMAT_JSON : GF_FORMAT_CSV));
}

int run_equilibria(int n, const std::string& out) {
  gf_catalog raw = nullptr;
  if (gf_status s = gf_equilibria(n, &raw); s != GF_OK) return report(s);
  CatalogPtr catalog(raw);
  size_t entries = 0;
  gf_catalog_size(catalog.get(), &entries, nullptr);
  if (gf_status s = gf_catalog_write_json(catalog.get(), out.c_str()); s != GF_OK) return report(s);
  std::printf("%zu equilibrium configurations written to %s\n", entries, out.c_str());
  return kExitOk;
}

int run_verify(const std::string& path, double tol, double t_end, double ode_tol) {
  gf_config raw_config = nullptr;
  if (gf_status s = gf_config_load_file(path.c_str(), &raw_config); s != GF_OK) return report(s);
  ConfigPtr config(raw_config);
  const gf_verify_options options{tol, t_end, ode_tol};
  gf_verify_report result{};
  if (gf_status s = gf_verify(config.get(), &options, &result); s != GF_OK) return report(s);
  std::fputs(gf_last_verify_summary(), stdout);
  return result.passed ? kExitOk : kExitNumerical;
}

int run_plot(const std::string& trajectory_path, const std::string& catalog_path, const std::string& out,
             bool equilibria, bool initial) {
  if (!catalog_path.empty()) {
    gf_catalog raw = nullptr;
    if (gf_status s = gf_catalog_read_json(catalog_path.c_str(), &raw); s != GF_OK) return report(s);
    CatalogPtr catalog(raw);
    return report(gf_plot_catalog_svg(catalog.get(), out.c_str()));
  }
  gf_trajectory raw = nullptr;
  if (gf_status s = gf_trajectory_read_csv(trajectory_path.c_str(), &raw); s != GF_OK) return report(s);
  TrajectoryPtr trajectory(raw);
  return report(gf_plot_trajectory_svg(trajectory.get(), out.c_str(), equilibria ? 1 : 0, initial ? 1 : 0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver, ODE cross-check and equilibria for the goldfish-type N-body problem"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Compute a trajectory and write it as CSV or JSON");
  simulate->add_option("--config", sim.config, "Configuration JSON")->required()->check(CLI::ExistingFile);
  simulate->add_option("--method", sim.method, "Solver")
      ->check(CLI::IsMember({"spectral", "ode", "isogold-algebraic", "isogold-ode"}));
  simulate->add_option("--t-end", sim.t_end, "End time (default from config)")->check(CLI::PositiveNumber);
  simulate->add_option("--samples", sim.samples, "Number of intervals (default from config)")->check(CLI::PositiveNumber);
  simulate->add_option("--out", sim.out, "Output path")->required();
  simulate->add_option("--format", sim.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  simulate->add_option("--rtol", sim.rtol, "ODE relative tolerance")->check(CLI::PositiveNumber);
  simulate->add_option("--atol", sim.atol, "ODE absolute tolerance")->check(CLI::PositiveNumber);
  simulate->add_flag("--literal-m", sim.literal_m, "Diagnostic: build M(0) from position differences");

  int eq_n = 0;
  std::string eq_out;
  auto* equilibria = app.add_subcommand("equilibria", "Write the equilibrium catalog (omega = 1) as JSON");
  equilibria->add_option("--n", eq_n, "Number of bodies (2..8)")->required()->check(CLI::Range(2, 8));
  equilibria->add_option("--out", eq_out, "Output path")->required();

  std::string verify_config;
  double tol = 1e-5, verify_t_end = 0.0, ode_tol = 0.0;
  auto* verify = app.add_subcommand("verify", "Cross-check spectral and ODE solutions and periodicity");
  verify->add_option("--config", verify_config, "Configuration JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--tol", tol, "Acceptance tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--t-end", verify_t_end, "End time of the comparison grid")->check(CLI::PositiveNumber);
  verify->add_option("--ode-tol", ode_tol, "Relative tolerance of the ODE run")->check(CLI::PositiveNumber);

  std::string plot_trajectory, plot_catalog, plot_out;
  bool overlay_equilibria = false, overlay_initial = false;
  auto* plot = app.add_subcommand("plot", "Render a trajectory CSV or an equilibrium catalog as SVG");
  auto* trajectory_opt = plot->add_option("--trajectory", plot_trajectory, "Trajectory CSV from simulate");
  auto* catalog_opt = plot->add_option("--catalog", plot_catalog, "Catalog JSON from equilibria");
  trajectory_opt->excludes(catalog_opt);
  plot->add_option("--out", plot_out, "SVG output path")->required();
  plot->add_flag("--overlay-equilibria", overlay_equilibria, "Mark the nearest equilibrium");
  plot->add_flag("--overlay-initial", overlay_initial, "Mark the initial positions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (simulate->parsed()) return run_simulate(sim);
  if (equilibria->parsed()) return run_equilibria(eq_n, eq_out);
  if (verify->parsed()) return run_verify(verify_config, tol, verify_t_end, ode_tol);
  if (plot->parsed()) {
    if (plot_trajectory.empty() && plot_catalog.empty()) {
      std::fprintf(stderr, "plot: one of --trajectory or --catalog is required\n");
      return kExitUsage;
    }
    return run_plot(plot_trajectory, plot_catalog, plot_out, overlay_equilibria, overlay_initial);
  }
  return kExitUsage;
}
