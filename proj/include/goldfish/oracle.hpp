#pragma once

#include <span>
#include <vector>

#include "goldfish/types.hpp"

namespace goldfish {

/// Accelerations of the new goldfish-type model for arbitrary N. The bracket polynomial
/// sum_m x^{N-m} [-w^2 c_m + 2 sum_l (c_m - c_l)^{-3}] is assembled once and evaluated at
/// every particle.
ComplexVector rhs_newgold(std::span<const Complex> z, std::span<const Complex> v, double omega);

/// Hard-coded two-body form at omega = 1.
ComplexVector rhs_newgold_n2(std::span<const Complex> z, std::span<const Complex> v);

/// Hard-coded three-body form at omega = 1, written with the auxiliary functions F1, F2, F3.
ComplexVector rhs_newgold_n3(std::span<const Complex> z, std::span<const Complex> v);

/// Calogero system with harmonic confinement: -w^2 c_m + 2 sum_{l != m} (c_m - c_l)^{-3}.
ComplexVector rhs_calogero(std::span<const Complex> c, double omega);

/// Isochronous goldfish: i w v_n + sum_{l != n} 2 v_n v_l / (z_n - z_l).
ComplexVector rhs_isogold(std::span<const Complex> z, std::span<const Complex> v, double omega);

/// Complex first integral of the coefficient system:
/// sum (cdot^2 + w^2 c^2)/2 + sum_{m<l} (c_m - c_l)^{-2}.
Complex calogero_energy(std::span<const Complex> c, std::span<const Complex> cdot, double omega);

enum class OdeSystem { kNewgold, kCalogero, kIsogold };

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  long max_steps = 5'000'000;
};

/// Dormand-Prince 5(4) on the real-ified first-order system. Step sizes are chosen by the
/// error control alone; intermediate times come from the 4th-order continuous extension and
/// the last time is stepped onto exactly. `times` must be strictly increasing; times[0] is
/// the initial time.
/// Collisions and step-size underflow raise IntegrationError with the last good time.
Trajectory integrate(OdeSystem system, std::span<const Complex> x0, std::span<const Complex> v0, double omega,
                     std::span<const double> times, const IntegratorOptions& options = {});

/// Convenience form: samples + 1 equally spaced times over t_span.
Trajectory integrate(OdeSystem system, std::span<const Complex> x0, std::span<const Complex> v0, double omega,
                     double t_begin, double t_end, int samples, const IntegratorOptions& options = {});

/// Like integrate, but also returns the velocities at every sample.
struct PhaseTrajectory {
  Trajectory positions;
  std::vector<ComplexVector> velocities;
};
PhaseTrajectory integrate_phase(OdeSystem system, std::span<const Complex> x0, std::span<const Complex> v0,
                                double omega, std::span<const double> times, const IntegratorOptions& options = {});

}  // namespace goldfish
