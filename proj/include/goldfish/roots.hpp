#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goldfish/types.hpp"

namespace goldfish {

struct RootOptions {
  /// Rotation (radians) of the equally spaced starting circle.
  double rotation = 0.4;
  int max_iterations = 500;
};

/// All N roots (with multiplicity) of a monic polynomial. Aberth-Ehrlich iteration with a
/// companion-matrix eigenvalue fallback. Every root r satisfies |p(r)| <= 1e-10 * p.scale();
/// otherwise ConvergenceError carries the residual reached.
ComplexVector roots_of_monic(const MonicPolynomial& p, const RootOptions& options = {});

/// Assignment sigma minimizing sum_n |next[sigma[n]] - prev[n]|^2. Exhaustive search (first
/// optimum in lexicographic order) for N <= 6, Hungarian method beyond.
Permutation match_labels(std::span<const Complex> prev, std::span<const Complex> next);

/// sum_n |next[sigma[n]] - prev[n]|^2, summed in label order.
double assignment_cost(std::span<const Complex> prev, std::span<const Complex> next, const Permutation& sigma);

/// Maximum displacement accepted between consecutive tracked samples:
/// 0.1 * (minimum pairwise distance in `current`), floored at 1e-6.
double tracking_threshold(std::span<const Complex> current);

/// Reorders `unordered` to follow the labels of `prev`; nullopt if some matched displacement
/// exceeds tracking_threshold(prev).
std::optional<ComplexVector> relabel_continuously(std::span<const Complex> prev, std::span<const Complex> unordered);

inline constexpr int kMaxBisectionDepth = 20;

namespace detail {

/// Walks `times` from `initial` (labeled state at times[0]). `advance(state, t)` returns the
/// labeled state at t or nullopt when the step is ambiguous; ambiguous steps are bisected
/// up to kMaxBisectionDepth levels. Returns the states at the requested times.
template <class State, class Advance>
std::vector<State> track_with_bisection(std::span<const double> times, State initial, Advance&& advance) {
  std::vector<State> out;
  out.reserve(times.size());
  out.push_back(initial);
  std::function<State(double, const State&, double, int)> step = [&](double ta, const State& sa, double tb,
                                                                     int depth) -> State {
    if (auto next = advance(sa, tb)) return std::move(*next);
    if (depth >= kMaxBisectionDepth)
      throw TrackingError("root tracking ambiguous near t=" + std::to_string(ta) +
                              " (bisection depth exhausted; near-collision of labels)",
                          ta);
    const double mid = 0.5 * (ta + tb);
    State sm = step(ta, sa, mid, depth + 1);
    return step(mid, sm, tb, depth + 1);
  };
  for (std::size_t k = 1; k < times.size(); ++k) out.push_back(step(times[k - 1], out.back(), times[k], 0));
  return out;
}

}  // namespace detail

using CoefficientEvaluator = std::function<ComplexVector(double)>;

/// Roots of the monic polynomial with coefficients `coeffs_at(t)` on `times`, labeled by
/// continuity. Labels at times[0] follow `initial_labels` when given (matched by
/// match_labels), otherwise the root finder's order. Intervals whose matched displacement
/// exceeds the tracking threshold are bisected using `coeffs_at` at the midpoint.
Trajectory track_roots(std::span<const double> times, const CoefficientEvaluator& coeffs_at,
                       std::optional<ComplexVector> initial_labels = std::nullopt);

/// Same, for a sampled coefficient path; midpoints use linear interpolation of the coefficients.
Trajectory track_roots(const std::vector<std::pair<double, ComplexVector>>& coeff_path);

/// Relative multiset agreement required before a closure permutation is recorded.
inline constexpr double kClosureTolerance = 1e-6;

/// Finds the sample at `period` (within 1e-12) and returns the permutation relating it to
/// sample 0. nullopt when the grid does not contain the period, or when the configuration
/// there is not a relabeling of sample 0 (the coefficients came back permuted).
std::optional<Permutation> closure_permutation(const Trajectory& trajectory, double period);

/// Distance between two point sets as multisets: max displacement of the optimal matching.
double multiset_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace goldfish
