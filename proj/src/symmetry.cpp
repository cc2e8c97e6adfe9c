#include "goldfish/symmetry.hpp"

namespace goldfish {

ComplexVector coeffs_from_roots(std::span<const Complex> roots) {
  require_finite(roots, "roots");
  // a[0] = 1 is the implicit leading coefficient.
  ComplexVector a(roots.size() + 1, Complex(0.0));
  a[0] = 1.0;
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (std::size_t j = k + 1; j >= 1; --j) a[j] -= roots[k] * a[j - 1];
  return ComplexVector(a.begin() + 1, a.end());
}

CoeffState coeff_state_from_roots(std::span<const Complex> roots, std::span<const Complex> velocities) {
  if (roots.size() != velocities.size()) throw InvalidArgument("coeff_velocities: length mismatch");
  require_finite(roots, "roots");
  require_finite(velocities, "velocities");
  const std::size_t n = roots.size();
  ComplexVector a(n + 1, Complex(0.0));
  ComplexVector da(n + 1, Complex(0.0));
  a[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    // Descending j keeps a[j-1], da[j-1] at their pre-multiplication values.
    for (std::size_t j = k + 1; j >= 1; --j) {
      da[j] -= roots[k] * da[j - 1] + velocities[k] * a[j - 1];
      a[j] -= roots[k] * a[j - 1];
    }
  }
  return {ComplexVector(a.begin() + 1, a.end()), ComplexVector(da.begin() + 1, da.end())};
}

ComplexVector coeff_velocities(std::span<const Complex> roots, std::span<const Complex> velocities) {
  return coeff_state_from_roots(roots, velocities).cdot;
}

Complex eval_monic(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 1.0;
  for (const Complex& c : coeffs) acc = acc * z + c;
  return acc;
}

Complex eval_monic(const MonicPolynomial& p, Complex z) { return eval_monic(p.coeffs(), z); }

MonicValue eval_monic_with_derivative(std::span<const Complex> coeffs, Complex z) {
  Complex value = 1.0;
  Complex derivative = 0.0;
  for (const Complex& c : coeffs) {
    derivative = derivative * z + value;
    value = value * z + c;
  }
  return {value, derivative};
}

}  // namespace goldfish
