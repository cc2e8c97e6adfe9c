#include "goldfish/types.hpp"

#include <numeric>

namespace goldfish {

double MonicPolynomial::scale() const noexcept {
  double s = 1.0;
  for (const Complex& c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

void require_finite(std::span<const Complex> values, const std::string& what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
      throw InvalidArgument(what + "[" + std::to_string(i) + "] is not finite");
  }
}

void require_finite(double value, const std::string& what) {
  if (!std::isfinite(value)) throw InvalidArgument(what + " is not finite");
}

void require_distinct(std::span<const Complex> values, char family, const std::string& context) {
  const int n = static_cast<int>(values.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (max_norm_difference(values[i], values[j]) < kCollisionTolerance)
        throw CollisionError(family, i, j, context);
}

double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw InvalidArgument("max_abs_difference: length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

int permutation_order(const Permutation& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  int order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int length = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

}  // namespace goldfish
