#include "goldfish/spectral.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "goldfish/config.hpp"
#include "goldfish/roots.hpp"
#include "goldfish/symmetry.hpp"

namespace goldfish {

namespace {

double l1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Parlett-Reinsch diagonal similarity scaling by powers of two; eigenvalues are unchanged.
void balance(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += l1(a(j, i));
        r += l1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

struct JointState {
  ComplexVector c;
  ComplexVector z;
};

void require_grid_from_zero(std::span<const double> times) {
  if (times.empty()) throw InvalidArgument("time grid is empty");
  for (double t : times) require_finite(t, "times");
  if (times.front() != 0.0) throw InvalidArgument("time grid must start at 0");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1])) throw InvalidArgument("times must be strictly increasing");
}

}  // namespace

ComplexVector eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("eigenvalues: matrix must be square");
  if (!m.allFinite()) throw InvalidArgument("eigenvalues: matrix has non-finite entries");
  const Eigen::Index n = m.rows();
  if (n == 0) return {};
  Eigen::MatrixXcd a = m;
  balance(a);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
  solver.setMaxIterations(30 * n);
  solver.compute(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigenvalues: QR iteration did not converge within " + std::to_string(30 * n) + " sweeps",
                           std::numeric_limits<double>::quiet_NaN());
  const auto& values = solver.eigenvalues();
  return ComplexVector(values.data(), values.data() + n);
}

SpectralData build_spectral(const CoeffState& state, double omega) {
  require_finite(omega, "omega");
  if (omega <= 0.0) throw InvalidArgument("omega must be > 0");
  if (state.c.size() != state.cdot.size()) throw InvalidArgument("coefficient state length mismatch");
  require_finite(state.c, "c");
  require_finite(state.cdot, "cdot");
  require_distinct(state.c, 'c', "build_spectral");

  const int n = static_cast<int>(state.c.size());
  SpectralData sd;
  sd.c0_diag = state.c;
  sd.omega = omega;
  sd.cdot0 = Eigen::MatrixXcd::Zero(n, n);
  const Complex i(0.0, 1.0);
  for (int m = 0; m < n; ++m) {
    sd.cdot0(m, m) = state.cdot[m];
    for (int l = 0; l < n; ++l) {
      if (l == m) continue;
      // i [M, C]_{ml} = i M_{ml} (c_l - c_m) with M_{ml} = (c_m - c_l)^{-2}.
      sd.cdot0(m, l) = -i / (state.c[m] - state.c[l]);
    }
  }
  return sd;
}

SpectralData build_spectral(const SystemConfig& config, MatrixReading reading) {
  validate(config);
  const CoeffState state = coeff_state_from_roots(config.z0, config.v0);
  SpectralData sd = build_spectral(state, config.omega);
  if (reading == MatrixReading::kPositionDifferences) {
    const int n = sd.size();
    const Complex i(0.0, 1.0);
    for (int m = 0; m < n; ++m)
      for (int l = 0; l < n; ++l) {
        if (l == m) continue;
        const Complex dz = config.z0[m] - config.z0[l];
        sd.cdot0(m, l) = i * (state.c[l] - state.c[m]) / (dz * dz);
      }
  }
  return sd;
}

Eigen::MatrixXcd coefficient_matrix_at(const SpectralData& sd, double t) {
  require_finite(t, "t");
  const double phase = sd.omega * t;
  Eigen::MatrixXcd c = sd.cdot0 * (std::sin(phase) / sd.omega);
  const double cosine = std::cos(phase);
  for (int m = 0; m < sd.size(); ++m) c(m, m) += sd.c0_diag[m] * cosine;
  return c;
}

ComplexVector coefficients_at(const SpectralData& sd, double t) { return eigenvalues(coefficient_matrix_at(sd, t)); }

Trajectory coefficient_trajectory(const SpectralData& sd, std::span<const double> times) {
  require_grid_from_zero(times);
  auto advance = [&](const ComplexVector& from, double t) {
    return relabel_continuously(from, coefficients_at(sd, t));
  };
  Trajectory out;
  out.times.assign(times.begin(), times.end());
  out.samples = detail::track_with_bisection(times, sd.c0_diag, advance);
  out.closure_permutation = closure_permutation(out, period(sd.omega));
  return out;
}

NewgoldSolution solve_newgold_full(const SystemConfig& config, std::span<const double> times, MatrixReading reading) {
  require_grid_from_zero(times);
  const SpectralData sd = build_spectral(config, reading);

  auto advance = [&](const JointState& from, double t) -> std::optional<JointState> {
    auto c = relabel_continuously(from.c, coefficients_at(sd, t));
    if (!c) return std::nullopt;
    auto z = relabel_continuously(from.z, roots_of_monic(MonicPolynomial(*c)));
    if (!z) return std::nullopt;
    return JointState{std::move(*c), std::move(*z)};
  };
  std::vector<JointState> states =
      detail::track_with_bisection(times, JointState{sd.c0_diag, config.z0}, advance);

  NewgoldSolution out;
  out.positions.times.assign(times.begin(), times.end());
  out.positions.samples.reserve(states.size());
  out.coefficients.reserve(states.size());
  for (JointState& s : states) {
    out.positions.samples.push_back(std::move(s.z));
    out.coefficients.push_back(std::move(s.c));
  }
  out.positions.closure_permutation = closure_permutation(out.positions, period(config.omega));
  return out;
}

Trajectory solve_newgold(const SystemConfig& config, std::span<const double> times, MatrixReading reading) {
  return solve_newgold_full(config, times, reading).positions;
}

}  // namespace goldfish
