#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "goldfish/types.hpp"

namespace goldfish {

/// How the commutator matrix M(0) is built. The coefficient-difference reading is the one
/// whose eigenvalue flow solves the coefficient ODE; the position-difference reading is kept
/// for diagnostics only.
enum class MatrixReading { kCoefficientDifferences, kPositionDifferences };

/// Frozen initial data of the matrix propagator C(t) = C(0) cos(wt) + Cdot(0) sin(wt)/w.
struct SpectralData {
  ComplexVector c0_diag;   ///< C(0) = diag(c_m(0))
  Eigen::MatrixXcd cdot0;  ///< Cdot(0) = diag(cdot_m(0)) + i [M, C(0)]
  double omega = 1.0;

  int size() const noexcept { return static_cast<int>(c0_diag.size()); }
};

SpectralData build_spectral(const SystemConfig& config,
                            MatrixReading reading = MatrixReading::kCoefficientDifferences);

/// Propagator directly from coefficient initial data (c-based M only).
SpectralData build_spectral(const CoeffState& state, double omega);

/// C(t) itself.
Eigen::MatrixXcd coefficient_matrix_at(const SpectralData& sd, double t);

/// Eigenvalues of C(t), i.e. the coefficients c_m(t), in no particular order.
ComplexVector coefficients_at(const SpectralData& sd, double t);

/// Coefficients on `times` (starting at 0), labeled by continuity from c0_diag.
Trajectory coefficient_trajectory(const SpectralData& sd, std::span<const double> times);

struct NewgoldSolution {
  Trajectory positions;
  std::vector<ComplexVector> coefficients;  ///< labeled c(t), aligned with positions.times
};

/// Exact solution: propagate C(t), track its eigenvalues as labeled coefficients, then track
/// the roots of the resulting monic polynomial. Sample 0 is z0 itself. The closure
/// permutation is recorded when `times` contains 2*pi/omega.
NewgoldSolution solve_newgold_full(const SystemConfig& config, std::span<const double> times,
                                   MatrixReading reading = MatrixReading::kCoefficientDifferences);

Trajectory solve_newgold(const SystemConfig& config, std::span<const double> times,
                         MatrixReading reading = MatrixReading::kCoefficientDifferences);

/// All eigenvalues of a general complex matrix (balancing, Hessenberg reduction, shifted QR).
/// Throws ConvergenceError after 30*N sweeps without convergence.
ComplexVector eigenvalues(const Eigen::MatrixXcd& m);

}  // namespace goldfish
