#pragma once

#include <span>

#include "goldfish/types.hpp"

namespace goldfish {

/// Coefficients c_1..c_N of prod_n (z - z_n), built by multiplying in one factor at a time.
ComplexVector coeffs_from_roots(std::span<const Complex> roots);

/// d/dt of coeffs_from_roots(z + t v) at t = 0 (the differentiated product recurrence).
ComplexVector coeff_velocities(std::span<const Complex> roots, std::span<const Complex> velocities);

/// Both of the above from one pass.
CoeffState coeff_state_from_roots(std::span<const Complex> roots, std::span<const Complex> velocities);

/// Horner evaluation of z^N + sum_m c_m z^{N-m}.
Complex eval_monic(const MonicPolynomial& p, Complex z);
Complex eval_monic(std::span<const Complex> coeffs, Complex z);

struct MonicValue {
  Complex value;
  Complex derivative;
};
MonicValue eval_monic_with_derivative(std::span<const Complex> coeffs, Complex z);

}  // namespace goldfish
