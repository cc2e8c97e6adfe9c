#include "goldfish/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "goldfish/oracle.hpp"
#include "goldfish/roots.hpp"

namespace goldfish {

namespace {

constexpr double kCoefficientCertification = 1e-10;
constexpr double kDuplicateTolerance = 1e-8;

// Both value and derivative: H_n' = 2 n H_{n-1}.
std::pair<double, double> hermite_with_derivative(int n, double x) {
  double previous = 1.0;  // H_0
  if (n == 0) return {1.0, 0.0};
  double current = 2.0 * x;  // H_1
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return {current, 2.0 * n * previous};
}

ComplexVector sorted_by_components(ComplexVector values) {
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return values;
}

bool same_multiset(const ComplexVector& a, const ComplexVector& b) {
  return multiset_distance(a, b) <= kDuplicateTolerance;
}

}  // namespace

double hermite_value(int n, double x) {
  if (n < 0) throw InvalidArgument("hermite_value: degree must be >= 0");
  require_finite(x, "x");
  return hermite_with_derivative(n, x).first;
}

std::vector<double> hermite_zeros(int n) {
  if (n < 1) throw InvalidArgument("hermite_zeros: n must be >= 1");
  // Jacobi matrix of the recurrence x H_k = H_{k+1}/2 + k H_{k-1}, symmetrized: off-diagonal sqrt(k/2).
  Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off = Eigen::VectorXd::Zero(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("hermite_zeros: tridiagonal eigensolver failed", 0.0);

  std::vector<double> zeros(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (double& x : zeros)
    for (int polish = 0; polish < 2; ++polish) {
      const auto [h, dh] = hermite_with_derivative(n, x);
      if (dh != 0.0) x -= h / dh;
    }
  std::sort(zeros.begin(), zeros.end());
  // The zero set is symmetric about the origin.
  for (int k = 0; k < n / 2; ++k) {
    const double magnitude = 0.5 * (zeros[n - 1 - k] - zeros[k]);
    zeros[k] = -magnitude;
    zeros[n - 1 - k] = magnitude;
  }
  if (n % 2 == 1) zeros[n / 2] = 0.0;
  return zeros;
}

std::vector<CoefficientEquilibrium> calogero_equilibria(int n, double omega) {
  if (n < 2) throw InvalidArgument("calogero_equilibria: n must be >= 2");
  require_finite(omega, "omega");
  if (omega != 1.0) throw UnsupportedError("calogero_equilibria: only omega = 1 is supported");
  const std::vector<double> zeros = hermite_zeros(n);
  std::vector<CoefficientEquilibrium> out;
  for (EquilibriumFamily family : {EquilibriumFamily::kReal, EquilibriumFamily::kImaginary}) {
    const Complex factor = family == EquilibriumFamily::kReal ? Complex(1.0) : Complex(0.0, 1.0);
    ComplexVector values(n);
    for (int k = 0; k < n; ++k) values[k] = factor * zeros[k];
    double residual = 0.0;
    for (const Complex& a : rhs_calogero(values, omega)) residual = std::max(residual, std::abs(a));
    if (residual > kCoefficientCertification)
      throw ConvergenceError("calogero_equilibria: certification failed (residual " + std::to_string(residual) + ")",
                             residual);
    out.push_back({family, std::move(values)});
  }
  return out;
}

std::vector<int> permutation_from_index(int n, int index) {
  if (n < 1) throw InvalidArgument("permutation_from_index: n must be >= 1");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<long> factorial(n, 1);
  for (int k = 1; k < n; ++k) factorial[k] = factorial[k - 1] * k;
  if (index < 0 || index >= factorial[n - 1] * n) throw InvalidArgument("permutation_from_index: index out of range");
  std::vector<int> perm;
  perm.reserve(n);
  long rest = index;
  for (int k = n - 1; k >= 0; --k) {
    const long slot = rest / factorial[k];
    rest %= factorial[k];
    perm.push_back(pool[slot]);
    pool.erase(pool.begin() + slot);
  }
  return perm;
}

EquilibriumCatalog newgold_equilibria(int n, double omega) {
  if (n < 2) throw InvalidArgument("newgold_equilibria: n must be >= 2");
  if (n > 8) throw UnsupportedError("newgold_equilibria: n! orderings; n <= 8 supported");
  const std::vector<CoefficientEquilibrium> families = calogero_equilibria(n, omega);

  EquilibriumCatalog catalog;
  const ComplexVector zero_velocity(n, Complex(0.0));
  for (const CoefficientEquilibrium& family : families) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int index = 0;
    do {
      ComplexVector coeffs(n);
      for (int k = 0; k < n; ++k) coeffs[k] = family.values[order[k]];
      const ComplexVector z = roots_of_monic(MonicPolynomial(coeffs));
      double residual = 0.0;
      try {
        for (const Complex& a : rhs_newgold(z, zero_velocity, omega)) residual = std::max(residual, std::abs(a));
      } catch (const CollisionError&) {
        // Repeated root: not a configuration of distinct particles.
        ++index;
        continue;
      }
      const bool duplicate = std::any_of(catalog.entries.begin(), catalog.entries.end(),
                                         [&](const EquilibriumEntry& e) { return same_multiset(e.configuration, z); });
      if (!duplicate) {
        if (residual > kEquilibriumResidualLimit)
          throw ConvergenceError("newgold_equilibria: residual " + std::to_string(residual) +
                                     " above certification limit",
                                 residual);
        catalog.entries.push_back({sorted_by_components(z), family.family, index, residual});
      }
      ++index;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return catalog;
}

}  // namespace goldfish
