#pragma once

#include <vector>

#include "goldfish/types.hpp"

namespace goldfish {

/// Physicists' Hermite polynomial H_n(x) via the three-term recurrence.
double hermite_value(int n, double x);

/// Zeros of H_n in ascending order (Jacobi matrix eigenvalues plus two Newton steps).
std::vector<double> hermite_zeros(int n);

struct CoefficientEquilibrium {
  EquilibriumFamily family;
  ComplexVector values;  ///< ascending Hermite order, times i for the imaginary family
};

/// The real and imaginary equilibrium sets of the coefficient system, each certified by
/// ||rhs_calogero||_inf <= 1e-10. Only omega = 1 is supported.
std::vector<CoefficientEquilibrium> calogero_equilibria(int n, double omega);

/// Equilibria of the N-body model obtained as roots of every ordering of both coefficient
/// families, deduplicated as multisets (1e-8) and certified with rhs_newgold.
EquilibriumCatalog newgold_equilibria(int n, double omega = 1.0);

/// The permutation with lexicographic rank `index` of {0, ..., n-1}.
std::vector<int> permutation_from_index(int n, int index);

inline constexpr double kEquilibriumResidualLimit = 1e-6;

}  // namespace goldfish
