#include "goldfish/classic.hpp"

#include <cmath>

#include "goldfish/config.hpp"
#include "goldfish/roots.hpp"
#include "goldfish/symmetry.hpp"

namespace goldfish {

namespace {

constexpr double kNearPeriodTolerance = 1e-8;

bool near_period_multiple(double omega, double t) {
  if (omega == 0.0) return t == 0.0;
  return std::abs(std::exp(Complex(0.0, omega * t)) - 1.0) < kNearPeriodTolerance;
}

}  // namespace

Complex isogold_time(double omega, double t) {
  require_finite(omega, "omega");
  require_finite(t, "t");
  if (omega == 0.0) return t;
  const Complex iw(0.0, omega);
  return (std::exp(iw * t) - 1.0) / iw;
}

ComplexVector isogold_coefficients(const SystemConfig& config, double t, IsogoldForm form) {
  validate(config);
  // Clearing denominators of sum_l u_l/(z - z_l(0)) = 1/tau gives
  // prod_m (z - z_m(0)) - tau sum_l u_l prod_{m != l}(z - z_m(0)) = 0, and the second
  // polynomial is minus the coefficient velocity of the product along u.
  ComplexVector numerators = config.v0;
  if (form == IsogoldForm::kAsPrinted)
    for (int l = 0; l < config.n; ++l) numerators[l] += Complex(0.0, config.omega) * config.z0[l];
  const CoeffState state = coeff_state_from_roots(config.z0, numerators);
  const Complex tau = isogold_time(config.omega, t);
  ComplexVector c(state.c.size());
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = state.c[m] + tau * state.cdot[m];
  return c;
}

ComplexVector solve_isogold(const SystemConfig& config, double t, IsogoldForm form) {
  require_finite(t, "t");
  validate(config);
  if (near_period_multiple(config.omega, t)) return config.z0;
  return roots_of_monic(MonicPolynomial(isogold_coefficients(config, t, form)));
}

Trajectory solve_isogold_path(const SystemConfig& config, std::span<const double> times, IsogoldForm form) {
  validate(config);
  if (times.empty() || times.front() != 0.0) throw InvalidArgument("solve_isogold_path: time grid must start at 0");
  Trajectory out =
      track_roots(times, [&](double t) { return isogold_coefficients(config, t, form); }, config.z0);
  out.samples.front() = config.z0;
  out.closure_permutation = closure_permutation(out, period(config));
  return out;
}

Complex hamiltonian_isogold(std::span<const Complex> zeta, std::span<const Complex> z, double omega,
                            HamiltonianForm form) {
  if (zeta.size() != z.size()) throw InvalidArgument("hamiltonian_isogold: length mismatch");
  require_finite(zeta, "zeta");
  require_finite(z, "z");
  require_finite(omega, "omega");
  require_distinct(z, 'z', "hamiltonian_isogold");
  const Complex iw(0.0, form == HamiltonianForm::kConsistent ? -omega : omega);
  Complex h = 0.0;
  for (std::size_t n = 0; n < z.size(); ++n) {
    Complex product = 1.0;
    for (std::size_t l = 0; l < z.size(); ++l)
      if (l != n) product *= z[n] - z[l];
    h += iw * z[n] + std::exp(zeta[n]) / product;
  }
  return h;
}

}  // namespace goldfish
