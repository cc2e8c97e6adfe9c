#pragma once

#include <span>

#include "goldfish/types.hpp"

namespace goldfish {

/// Which numerator the algebraic solution uses. kTranslationInvariant (zdot_l(0) alone) is
/// the one consistent with the equations of motion; kAsPrinted adds i*w*z_l(0) and exists
/// only so that the discrepancy can be demonstrated.
enum class IsogoldForm { kTranslationInvariant, kAsPrinted };

/// (e^{iwt} - 1)/(iw), with the limit t at w = 0.
Complex isogold_time(double omega, double t);

/// Coefficients of the monic polynomial whose roots are the positions at time t:
/// c(0) + tau(t) * cdot(0).
ComplexVector isogold_coefficients(const SystemConfig& config, double t,
                                   IsogoldForm form = IsogoldForm::kTranslationInvariant);

/// Positions at time t as an unordered set. Returns z0 itself when |e^{iwt} - 1| < 1e-8.
ComplexVector solve_isogold(const SystemConfig& config, double t,
                            IsogoldForm form = IsogoldForm::kTranslationInvariant);

/// Labeled positions along `times` (starting at 0), with closure permutation when the grid
/// contains the period.
Trajectory solve_isogold_path(const SystemConfig& config, std::span<const double> times,
                              IsogoldForm form = IsogoldForm::kTranslationInvariant);

/// Sign of the linear term in the Hamiltonian. With z as coordinates and zeta as momenta,
/// kConsistent (-i w z_n) generates zddot = +i w zdot + ...; kAsPrinted (+i w z_n) generates
/// the same system with w -> -w.
enum class HamiltonianForm { kConsistent, kAsPrinted };

/// H(zeta; z) = sum_n [ -/+ i w z_n + exp(zeta_n) prod_{l != n} (z_n - z_l)^{-1} ].
Complex hamiltonian_isogold(std::span<const Complex> zeta, std::span<const Complex> z, double omega,
                            HamiltonianForm form = HamiltonianForm::kConsistent);

}  // namespace goldfish
