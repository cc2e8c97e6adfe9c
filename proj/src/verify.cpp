#include "goldfish/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "goldfish/config.hpp"
#include "goldfish/roots.hpp"
#include "goldfish/spectral.hpp"
#include "goldfish/symmetry.hpp"

namespace goldfish {

namespace {

constexpr double kPsiMembershipLimit = 1e-8;

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", x);
  return buffer;
}

}  // namespace

VerifyReport verify(const SystemConfig& config, const VerifyOptions& options) {
  validate(config);
  if (!(options.tol > 0.0)) throw InvalidArgument("verify: tol must be > 0");
  VerifyReport report;
  report.period = period(config);
  const double t_end = options.t_end.value_or(config.t_end);
  const std::vector<double> grid = uniform_times(t_end, config.samples);

  const NewgoldSolution exact = solve_newgold_full(config, grid);
  const Trajectory ode = integrate(OdeSystem::kNewgold, config.z0, config.v0, config.omega, grid, options.ode);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ComplexVector& z = exact.positions.samples[i];
    report.max_deviation = std::max(report.max_deviation, max_abs_difference(z, ode.samples[i]));
    report.max_displacement = std::max(report.max_displacement, max_abs_difference(z, config.z0));
    const MonicPolynomial psi(exact.coefficients[i]);
    for (const Complex& zn : z) report.psi_residual = std::max(report.psi_residual, std::abs(eval_monic(psi, zn)) / psi.scale());
  }

  // The coefficient matrix is T-periodic, but its labeled eigenvalues may come back permuted;
  // the positions can only return once the coefficients have.
  const NewgoldSolution one_period = solve_newgold_full(config, uniform_times(report.period, config.samples));
  report.closure_multiset_error = multiset_distance(one_period.positions.samples.back(), config.z0);
  const ComplexVector& c0 = one_period.coefficients.front();
  report.coefficient_order = permutation_order(match_labels(one_period.coefficients.back(), c0));

  const int kc = report.coefficient_order;
  const ComplexVector z_kc =
      kc == 1 ? one_period.positions.samples.back()
              : solve_newgold(config, uniform_times(kc * report.period, kc * config.samples)).samples.back();
  report.closure_permutation = match_labels(z_kc, config.z0);
  report.closure_order = kc * permutation_order(report.closure_permutation);

  const int k = report.closure_order;
  if (k == 1) {
    report.closure_error_kT = max_abs_difference(z_kc, config.z0);
  } else {
    const Trajectory k_periods = solve_newgold(config, uniform_times(k * report.period, k * config.samples));
    report.closure_error_kT = max_abs_difference(k_periods.samples.back(), config.z0);
  }

  report.passed = report.max_deviation <= options.tol && report.closure_multiset_error <= options.tol &&
                  report.closure_error_kT <= options.tol && report.psi_residual <= kPsiMembershipLimit;
  return report;
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  auto line = [&](const char* label) -> std::ostream& { return out << std::left << std::setw(32) << label; };
  line("period T") << sci(period) << "\n";
  line("spectral vs ODE max deviation") << sci(max_deviation) << "\n";
  line("multiset closure error at T") << sci(closure_multiset_error) << "\n";
  line("coefficient relabeling order") << coefficient_order << "\n";
  line("closure permutation") << "[";
  for (std::size_t k = 0; k < closure_permutation.size(); ++k) out << (k ? " " : "") << closure_permutation[k] + 1;
  out << "] at " << coefficient_order << "T, period multiple k=" << closure_order << "\n";
  line("label-wise closure error at kT") << sci(closure_error_kT) << "\n";
  line("psi membership residual") << sci(psi_residual) << "\n";
  line("max displacement from z(0)") << sci(max_displacement)
      << (max_displacement <= 1e-8 ? "  (no motion: equilibrium)" : "") << "\n";
  out << (passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace goldfish
