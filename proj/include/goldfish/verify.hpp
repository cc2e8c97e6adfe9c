#pragma once

#include <optional>
#include <string>

#include "goldfish/oracle.hpp"
#include "goldfish/types.hpp"

namespace goldfish {

struct VerifyOptions {
  double tol = 1e-5;
  std::optional<double> t_end;  ///< defaults to config.t_end
  IntegratorOptions ode;
};

struct VerifyReport {
  double period = 0.0;
  double max_deviation = 0.0;            ///< spectral vs ODE, label-wise over the grid
  double closure_multiset_error = 0.0;   ///< {z(T)} vs {z(0)}
  int coefficient_order = 1;             ///< order of the relabeling of c(T) relative to c(0)
  Permutation closure_permutation;       ///< relabeling of z at coefficient_order * T
  int closure_order = 1;                 ///< k: coefficient_order times the order of closure_permutation
  double closure_error_kT = 0.0;         ///< label-wise |z(kT) - z(0)|
  double psi_residual = 0.0;             ///< max |psi(z_n(t); t)| / scale
  double max_displacement = 0.0;         ///< max |z_n(t) - z_n(0)| (zero for equilibria)
  bool passed = false;

  std::string summary() const;
};

/// Runs the spectral and ODE solvers against each other and checks periodicity.
VerifyReport verify(const SystemConfig& config, const VerifyOptions& options = {});

}  // namespace goldfish
