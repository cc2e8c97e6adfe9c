#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "goldfish/config.hpp"
#include "goldfish/equilibria.hpp"
#include "goldfish/oracle.hpp"
#include "goldfish/roots.hpp"
#include "goldfish/spectral.hpp"
#include "goldfish/symmetry.hpp"
#include "support.hpp"

using namespace goldfish;

namespace {

SystemConfig at_rest(ComplexVector z0) {
  SystemConfig c;
  c.n = static_cast<int>(z0.size());
  c.z0 = std::move(z0);
  c.v0.assign(c.z0.size(), 0.0);
  return c;
}

ComplexVector labeled_like(const ComplexVector& reference, const ComplexVector& unordered) {
  const Permutation sigma = match_labels(reference, unordered);
  ComplexVector out(reference.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = unordered[sigma[k]];
  return out;
}

}  // namespace

TEST_CASE("build_spectral at the first N=2 equilibrium") {
  const SpectralData sd = build_spectral(at_rest(fixtures::published_equilibria_n2()[0]));
  CHECK(std::abs(sd.c0_diag[0] - Complex(-0.707107, 0.0)) < 1e-5);
  CHECK(std::abs(sd.c0_diag[1] - Complex(0.707107, 0.0)) < 1e-5);
  CHECK(sd.cdot0(0, 0) == Complex(0.0));
  CHECK(sd.cdot0(1, 1) == Complex(0.0));
  CHECK(std::abs(std::abs(sd.cdot0(0, 1)) - 1.0 / std::sqrt(2.0)) < 1e-5);
  // -i/(c_1 - c_2) and -i/(c_2 - c_1): opposite signs, purely imaginary for real c.
  CHECK(std::abs(sd.cdot0(0, 1) + sd.cdot0(1, 0)) < 1e-15);
  CHECK(std::abs(sd.cdot0(0, 1).real()) < 1e-6);
}

TEST_CASE("build_spectral rejects coincident coefficients") {
  // z = (2, -2/3): c_1 = -(z_1 + z_2) = -4/3 = z_1 z_2 = c_2.
  SystemConfig cfg = at_rest({2.0, -2.0 / 3.0});
  CHECK_THROWS_AS(build_spectral(cfg), CollisionError);
  CHECK_THROWS_AS(build_spectral(CoeffState{{1.0, 1.0}, {0.0, 0.0}}, 1.0), CollisionError);
  CHECK_THROWS_AS(build_spectral(CoeffState{{1.0, 2.0}, {0.0, 0.0}}, -1.0), InvalidArgument);
}

TEST_CASE("coefficients_at: t = 0, t = T and matrix periodicity") {
  std::mt19937_64 rng(21);
  for (double omega : {0.5, 1.0, 2.0}) {
    const SystemConfig cfg = fixtures::random_config(rng, 4, omega);
    const SpectralData sd = build_spectral(cfg);
    const Eigen::MatrixXcd c0 = coefficient_matrix_at(sd, 0.0);
    CHECK((c0 - Eigen::MatrixXcd(Eigen::VectorXcd::Map(sd.c0_diag.data(), 4).asDiagonal())).norm() == 0.0);
    const double period = kTwoPi / omega;
    CHECK(multiset_distance(coefficients_at(sd, period), sd.c0_diag) < 1e-12);
    for (double t : {0.3, 1.7, 4.0}) {
      const double drift = (coefficient_matrix_at(sd, t + period) - coefficient_matrix_at(sd, t)).cwiseAbs().maxCoeff();
      CHECK(drift < 1e-13 * (1.0 + coefficient_matrix_at(sd, t).cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("coefficients_at: Hermite equilibrium stays put") {
  for (int n : {2, 3, 4}) {
    for (const CoefficientEquilibrium& eq : calogero_equilibria(n, 1.0)) {
      const SystemConfig cfg = at_rest(roots_of_monic(MonicPolynomial(eq.values)));
      const SpectralData sd = build_spectral(cfg);
      CHECK(max_abs_difference(sd.c0_diag, eq.values) < 1e-12);
      for (double t : {0.5, 2.0, 5.0}) CHECK(multiset_distance(coefficients_at(sd, t), eq.values) < 1e-10);
    }
  }
}

TEST_CASE("eigenvalue flow satisfies the coefficient equations (second differences)") {
  // Truncation error is O(h^2) times fourth derivatives, which grow like the force near close
  // approaches of two coefficients; the tolerance is therefore relative to max(1, |rhs|).
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> when(0.2, 6.0);
  auto residual = [](const SpectralData& sd, double t, double h) {
    const ComplexVector mid = coefficients_at(sd, t);
    const ComplexVector lo = labeled_like(mid, coefficients_at(sd, t - h));
    const ComplexVector hi = labeled_like(mid, coefficients_at(sd, t + h));
    const ComplexVector rhs = rhs_calogero(mid, 1.0);
    double worst = 0.0, scale = 1.0;
    for (std::size_t m = 0; m < mid.size(); ++m) {
      worst = std::max(worst, std::abs((hi[m] - 2.0 * mid[m] + lo[m]) / (h * h) - rhs[m]));
      scale = std::max(scale, std::abs(rhs[m]));
    }
    return std::pair{worst, scale};
  };
  for (int seed = 0; seed < 5; ++seed) {
    const SystemConfig cfg = fixtures::random_config(rng, 3, 1.0);
    const SpectralData sd = build_spectral(cfg);
    for (int k = 0; k < 10; ++k) {
      const double t = when(rng);
      const auto [fine, scale] = residual(sd, t, 1e-4);
      CHECK(fine < 1e-4 * scale);
      const auto [coarse, unused] = residual(sd, t, 1e-3);
      // O(h^2): where truncation dominates roundoff (~eps/h^2), a 10x step gives ~100x error.
      if (coarse > 1e-4) CHECK(coarse / fine == doctest::Approx(100.0).epsilon(0.3));
    }
  }
}

TEST_CASE("eigenvalues: examples and trace/determinant oracle") {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = Complex(0.0, 2.0);
  d(2, 2) = -3.0;
  CHECK(fixtures::brute_multiset_distance(eigenvalues(d), {1.0, Complex(0.0, 2.0), -3.0}) < 1e-14);
  Eigen::MatrixXcd swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  CHECK(fixtures::brute_multiset_distance(eigenvalues(swap), {1.0, -1.0}) < 1e-14);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXcd m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = fixtures::in_disk(rng, 1.0);
    const ComplexVector lambda = eigenvalues(m);
    Complex sum = 0.0, product = 1.0;
    for (const Complex& l : lambda) {
      sum += l;
      product *= l;
    }
    const Complex det = m.partialPivLu().determinant();
    CHECK(std::abs(sum - m.trace()) <= 1e-9 * std::max(1.0, std::abs(m.trace())));
    CHECK(std::abs(product - det) <= 1e-9 * std::max(1.0, std::abs(det)));
    // Residual contract: m - lambda I is numerically singular.
    const double norm = m.norm();
    for (const Complex& l : lambda) {
      const Eigen::MatrixXcd shifted = m - l * Eigen::MatrixXcd::Identity(6, 6);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
      CHECK(svd.singularValues()(5) <= 1e-10 * norm);
    }
  }
  CHECK_THROWS_AS(eigenvalues(Eigen::MatrixXcd::Zero(2, 3)), InvalidArgument);
}

TEST_CASE("solve_newgold: identity at t = 0 and grid contract") {
  const SystemConfig cfg = fixtures::paper_config_n2('a');
  const std::vector<double> zero{0.0};
  CHECK(max_abs_difference(solve_newgold(cfg, zero).samples[0], cfg.z0) < 1e-10);
  const std::vector<double> late{0.5, 1.0};
  CHECK_THROWS_AS(solve_newgold(cfg, late), InvalidArgument);
  const std::vector<double> backwards{0.0, 1.0, 0.5};
  CHECK_THROWS_AS(solve_newgold(cfg, backwards), InvalidArgument);
}

TEST_CASE("solve_newgold: published initial conditions against the ODE oracle") {
  const std::vector<double> grid = uniform_times(kTwoPi, 1000);
  for (char set : {'a', 'b', 'c', 'd', 'e'}) {
    CAPTURE(set);
    const SystemConfig cfg = fixtures::paper_config_n2(set);
    const NewgoldSolution exact = solve_newgold_full(cfg, grid);
    const Trajectory ode = integrate(OdeSystem::kNewgold, cfg.z0, cfg.v0, 1.0, grid);
    double worst = 0.0, psi = 0.0;
    for (std::size_t s = 0; s < grid.size(); ++s) {
      worst = std::max(worst, max_abs_difference(exact.positions.samples[s], ode.samples[s]));
      const MonicPolynomial p(exact.coefficients[s]);
      for (const Complex& z : exact.positions.samples[s]) psi = std::max(psi, std::abs(eval_monic(p, z)) / p.scale());
    }
    CHECK(worst < 1e-6);
    CHECK(psi < 1e-8);
    // These runs close at T; the closure permutation is recorded with order 1 or 2.
    REQUIRE(exact.positions.closure_permutation);
    CHECK(permutation_order(*exact.positions.closure_permutation) <= 2);
    CHECK(multiset_distance(exact.positions.samples.back(), cfg.z0) < 1e-8);
  }
}

TEST_CASE("solve_newgold: coefficient relabeling delays the return to k_c * T") {
  // For complex data the eigenvalues of C(t) can come back permuted at T. The positions then
  // differ from z(0) at T and return only once the coefficients have.
  std::mt19937_64 rng(77);
  int braided = 0;
  for (int k = 0; k < 12; ++k) {
    const double omega = k % 3 == 0 ? 0.5 : (k % 3 == 1 ? 1.0 : 2.0);
    const SystemConfig cfg = fixtures::random_config(rng, 2 + k % 4, omega);
    const double period = kTwoPi / omega;
    const NewgoldSolution one = solve_newgold_full(cfg, uniform_times(period, 400));
    const int kc = permutation_order(match_labels(one.coefficients.back(), one.coefficients.front()));
    const double at_t = multiset_distance(one.positions.samples.back(), cfg.z0);
    if (kc == 1) {
      CHECK(at_t < 1e-8);
      CHECK(one.positions.closure_permutation);
      continue;
    }
    ++braided;
    CHECK(at_t > 1e-3);
    CHECK_FALSE(one.positions.closure_permutation);
    const Trajectory later = solve_newgold(cfg, uniform_times(kc * period, 400 * kc));
    CHECK(multiset_distance(later.samples.back(), cfg.z0) < 1e-8);
  }
  CHECK(braided > 0);
}

TEST_CASE("literal position-difference reading of M(0) does not reproduce the coefficient flow") {
  std::mt19937_64 rng(24);
  const SystemConfig cfg = fixtures::random_config(rng, 3, 1.0);
  const CoeffState state = coeff_state_from_roots(cfg.z0, cfg.v0);
  const std::vector<double> grid = uniform_times(2.0, 50);
  const Trajectory ode = integrate(OdeSystem::kCalogero, state.c, state.cdot, 1.0, grid);
  const SpectralData c_based = build_spectral(cfg);
  const SpectralData literal = build_spectral(cfg, MatrixReading::kPositionDifferences);
  double c_err = 0.0, literal_err = 0.0;
  for (std::size_t s = 0; s < grid.size(); ++s) {
    c_err = std::max(c_err, multiset_distance(coefficients_at(c_based, grid[s]), ode.samples[s]));
    literal_err = std::max(literal_err, multiset_distance(coefficients_at(literal, grid[s]), ode.samples[s]));
  }
  CHECK(c_err < 1e-8);
  CHECK(literal_err > 1e-3);
}
