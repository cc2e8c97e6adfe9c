#include "goldfish/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "goldfish/spectral.hpp"
#include "goldfish/symmetry.hpp"

namespace goldfish {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kResidualFactor = 1e-10;

double max_residual(std::span<const Complex> coeffs, std::span<const Complex> roots) {
  double r = 0.0;
  for (const Complex& z : roots) r = std::max(r, std::abs(eval_monic(coeffs, z)));
  return r;
}

// Bound on the rounding error of Horner's scheme at |z|: sum_k |a_k| |z|^{N-k}.
double horner_bound(std::span<const Complex> coeffs, double modulus) {
  double acc = 1.0;
  for (const Complex& c : coeffs) acc = acc * modulus + std::abs(c);
  return acc;
}

// A root is accepted when its residual is below the absolute contract or, for large roots,
// within a small multiple of the rounding level of evaluating p there.
bool acceptable(std::span<const Complex> coeffs, std::span<const Complex> roots, double limit) {
  for (const Complex& z : roots) {
    const double r = std::abs(eval_monic(coeffs, z));
    if (!(r <= std::max(limit, 64.0 * kEps * horner_bound(coeffs, std::abs(z))))) return false;
  }
  return true;
}

struct AberthResult {
  ComplexVector roots;
  bool converged = false;
};

AberthResult aberth(std::span<const Complex> coeffs, const RootOptions& options) {
  const int n = static_cast<int>(coeffs.size());
  double radius = 0.0;
  for (int m = 1; m <= n; ++m) radius = std::max(radius, std::pow(std::abs(coeffs[m - 1]), 1.0 / m));
  radius += 1.0;

  AberthResult result;
  result.roots.resize(n);
  for (int k = 0; k < n; ++k)
    result.roots[k] = std::polar(radius, kTwoPi * k / n + options.rotation);

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex& zi = result.roots[i];
      const MonicValue pv = eval_monic_with_derivative(coeffs, zi);
      if (std::abs(pv.value) <= 4.0 * kEps * horner_bound(coeffs, std::abs(zi))) {
        done[i] = true;
        continue;
      }
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (zi - result.roots[j]);
      Complex step;
      if (pv.derivative == Complex(0.0)) {
        step = 1e-3 * (1.0 + std::abs(zi)) * std::polar(1.0, 0.7 * (i + 1));
      } else {
        const Complex ratio = pv.value / pv.derivative;
        step = ratio / (1.0 - ratio * repulsion);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return result;
      zi -= step;
      if (std::abs(step) < 1e-13 * (1.0 + std::abs(zi)))
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done) {
      result.converged = true;
      return result;
    }
  }
  result.converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
  return result;
}

ComplexVector companion_roots(std::span<const Complex> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) companion(0, j) = -coeffs[j];
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  return eigenvalues(companion);
}

// Hungarian method (potentials form) on a square cost matrix; returns row -> column.
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> assignment(n);
  for (int j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
  return assignment;
}

}  // namespace

ComplexVector roots_of_monic(const MonicPolynomial& p, const RootOptions& options) {
  const auto& coeffs = p.coeffs();
  const int n = p.degree();
  if (n < 1) throw InvalidArgument("roots_of_monic: degree must be >= 1");
  require_finite(coeffs, "coefficients");
  if (n == 1) return {-coeffs[0]};

  const double limit = kResidualFactor * p.scale();
  AberthResult a = aberth(coeffs, options);
  if (a.converged && acceptable(coeffs, a.roots, limit)) return a.roots;

  ComplexVector fallback = companion_roots(coeffs);
  if (acceptable(coeffs, fallback, limit)) return fallback;
  const double residual = max_residual(coeffs, fallback);
  char message[160];
  std::snprintf(message, sizeof message, "roots_of_monic: no convergence within %d iterations (residual %.3e)",
                options.max_iterations, residual);
  throw ConvergenceError(message, residual);
}

double assignment_cost(std::span<const Complex> prev, std::span<const Complex> next, const Permutation& sigma) {
  double cost = 0.0;
  for (std::size_t k = 0; k < prev.size(); ++k) cost += std::norm(next[sigma[k]] - prev[k]);
  return cost;
}

Permutation match_labels(std::span<const Complex> prev, std::span<const Complex> next) {
  if (prev.size() != next.size()) throw InvalidArgument("match_labels: length mismatch");
  require_finite(prev, "prev");
  require_finite(next, "next");
  const int n = static_cast<int>(prev.size());
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  if (n <= 6) {
    Permutation best = sigma;
    double best_cost = assignment_cost(prev, next, sigma);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
      const double c = assignment_cost(prev, next, sigma);
      if (c < best_cost) {
        best_cost = c;
        best = sigma;
      }
    }
    return best;
  }
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost[i][j] = std::norm(next[j] - prev[i]);
  return hungarian(cost);
}

double tracking_threshold(std::span<const Complex> current) {
  double min_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < current.size(); ++i)
    for (std::size_t j = i + 1; j < current.size(); ++j)
      min_distance = std::min(min_distance, std::abs(current[i] - current[j]));
  return std::max(0.1 * min_distance, 1e-6);
}

std::optional<ComplexVector> relabel_continuously(std::span<const Complex> prev, std::span<const Complex> unordered) {
  const Permutation sigma = match_labels(prev, unordered);
  const double threshold = tracking_threshold(prev);
  ComplexVector labeled(prev.size());
  for (std::size_t k = 0; k < prev.size(); ++k) {
    labeled[k] = unordered[sigma[k]];
    if (std::abs(labeled[k] - prev[k]) > threshold) return std::nullopt;
  }
  return labeled;
}

Trajectory track_roots(std::span<const double> times, const CoefficientEvaluator& coeffs_at,
                       std::optional<ComplexVector> initial_labels) {
  if (times.empty()) throw InvalidArgument("track_roots: empty time grid");
  for (std::size_t k = 0; k < times.size(); ++k) require_finite(times[k], "times");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1])) throw InvalidArgument("track_roots: times must be strictly increasing");

  ComplexVector first = roots_of_monic(MonicPolynomial(coeffs_at(times[0])));
  if (initial_labels) {
    if (initial_labels->size() != first.size()) throw InvalidArgument("track_roots: initial label count mismatch");
    const Permutation sigma = match_labels(*initial_labels, first);
    ComplexVector labeled(first.size());
    for (std::size_t k = 0; k < first.size(); ++k) labeled[k] = first[sigma[k]];
    first = std::move(labeled);
  }

  auto advance = [&](const ComplexVector& from, double t) {
    return relabel_continuously(from, roots_of_monic(MonicPolynomial(coeffs_at(t))));
  };
  Trajectory out;
  out.times.assign(times.begin(), times.end());
  out.samples = detail::track_with_bisection(times, std::move(first), advance);
  return out;
}

Trajectory track_roots(const std::vector<std::pair<double, ComplexVector>>& coeff_path) {
  if (coeff_path.empty()) throw InvalidArgument("track_roots: empty coefficient path");
  std::vector<double> times;
  times.reserve(coeff_path.size());
  for (const auto& [t, c] : coeff_path) times.push_back(t);

  auto interpolate = [&](double t) -> ComplexVector {
    auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end()) return coeff_path.back().second;
    const std::size_t hi = static_cast<std::size_t>(it - times.begin());
    if (*it == t || hi == 0) return coeff_path[hi].second;
    const std::size_t lo = hi - 1;
    const double w = (t - times[lo]) / (times[hi] - times[lo]);
    ComplexVector c(coeff_path[lo].second.size());
    for (std::size_t m = 0; m < c.size(); ++m)
      c[m] = (1.0 - w) * coeff_path[lo].second[m] + w * coeff_path[hi].second[m];
    return c;
  };
  return track_roots(times, interpolate);
}

std::optional<Permutation> closure_permutation(const Trajectory& trajectory, double period) {
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    if (std::abs(trajectory.times[k] - (trajectory.times.front() + period)) > 1e-12) continue;
    const ComplexVector& start = trajectory.samples.front();
    double size = 1.0;
    for (const Complex& z : start) size = std::max(size, std::abs(z));
    if (multiset_distance(trajectory.samples[k], start) > kClosureTolerance * size) return std::nullopt;
    return match_labels(trajectory.samples[k], start);
  }
  return std::nullopt;
}

double multiset_distance(std::span<const Complex> a, std::span<const Complex> b) {
  const Permutation sigma = match_labels(a, b);
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(b[sigma[k]] - a[k]));
  return d;
}

}  // namespace goldfish
