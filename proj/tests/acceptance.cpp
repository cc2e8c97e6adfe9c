// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "goldfish/classic.hpp"
#include "goldfish/config.hpp"
#include "goldfish/equilibria.hpp"
#include "goldfish/oracle.hpp"
#include "goldfish/roots.hpp"
#include "goldfish/spectral.hpp"
#include "goldfish/symmetry.hpp"
#include "support.hpp"

using namespace goldfish;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// Largest relative residual of the tracked positions in the concurrent polynomial, over every
// trajectory the runner accepts (criterion 10).
double g_psi_worst = 0.0;
int g_psi_trajectories = 0;

void record_psi(const std::vector<ComplexVector>& coefficients, const Trajectory& positions) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const MonicPolynomial p(coefficients[i]);
    for (const Complex& z : positions.samples[i])
      g_psi_worst = std::max(g_psi_worst, std::abs(fixtures::horner(coefficients[i], z)) / p.scale());
  }
  ++g_psi_trajectories;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

Outcome equilibria_match(int n, const std::vector<ComplexVector>& published, bool exact_count) {
  const auto start = std::chrono::steady_clock::now();
  const EquilibriumCatalog catalog = newgold_equilibria(n);
  const double elapsed = seconds_since(start);
  double worst = 0.0;
  for (const ComplexVector& row : published) {
    double best = INFINITY;
    for (const EquilibriumEntry& e : catalog.entries)
      best = std::min(best, fixtures::brute_multiset_distance(row, e.configuration));
    worst = std::max(worst, best);
  }
  const bool count_ok = exact_count ? catalog.entries.size() == published.size()
                                    : catalog.entries.size() >= published.size();
  const bool pass = count_ok && worst <= 1e-5 && elapsed < 1.0;
  return {pass, fmt("%.0f configurations, worst distance to published %.2e, %.3f s",
                    static_cast<double>(catalog.entries.size()), worst, elapsed)};
}

Outcome criterion1() { return equilibria_match(2, fixtures::published_equilibria_n2(), true); }
Outcome criterion2() { return equilibria_match(3, fixtures::published_equilibria_n3(), false); }

Outcome criterion3() {
  const auto h2 = hermite_zeros(2);
  const auto h3 = hermite_zeros(3);
  const double r2 = 1.0 / std::sqrt(2.0), r3 = std::sqrt(1.5);
  double err = std::max(std::abs(h2[0] + r2), std::abs(h2[1] - r2));
  err = std::max({err, std::abs(h3[0] + r3), std::abs(h3[1]), std::abs(h3[2] - r3)});
  return {h2.size() == 2 && h3.size() == 3 && err <= 1e-12, fmt("max error %.2e", err)};
}

Outcome criterion4() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  const std::vector<ComplexVector> points = {{r, -r}, {-r, r}, {i * r, -i * r}, {-i * r, i * r}};
  double worst = 0.0;
  for (const ComplexVector& c : points)
    for (const Complex& f : rhs_calogero(c, 1.0)) worst = std::max(worst, std::abs(f));
  return {worst <= 1e-10, fmt("max |rhs| %.2e over 4 equilibria", worst)};
}

Outcome criterion5() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240501);
  const std::vector<double> grid = uniform_times(kTwoPi, 400);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const SystemConfig cfg = fixtures::random_config(rng, 2 + k % 4, 1.0);
    const CoeffState state = coeff_state_from_roots(cfg.z0, cfg.v0);
    const SpectralData sd = build_spectral(cfg);
    const Trajectory ode = integrate(OdeSystem::kCalogero, state.c, state.cdot, 1.0, grid);
    for (std::size_t s = 0; s < grid.size(); ++s)
      worst = std::max(worst, multiset_distance(coefficients_at(sd, grid[s]), ode.samples[s]));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-7 && elapsed < 30.0, fmt("50 configs, max deviation %.2e, %.2f s", worst, elapsed)};
}

Outcome criterion6() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SystemConfig> configs;
  for (char set : {'a', 'b', 'c', 'd', 'e'}) configs.push_back(fixtures::paper_config_n2(set));
  configs.push_back(fixtures::paper_config_n3());
  const std::vector<double> grid = uniform_times(kTwoPi, 1000);
  double worst = 0.0;
  for (const SystemConfig& cfg : configs) {
    const NewgoldSolution exact = solve_newgold_full(cfg, grid);
    record_psi(exact.coefficients, exact.positions);
    const Trajectory ode = integrate(OdeSystem::kNewgold, cfg.z0, cfg.v0, cfg.omega, grid);
    for (std::size_t s = 0; s < grid.size(); ++s)
      worst = std::max(worst, max_abs_difference(exact.positions.samples[s], ode.samples[s]));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-6 && elapsed < 30.0, fmt("6 initial-condition sets, max deviation %.2e, %.2f s", worst, elapsed)};
}

// Both clauses are checked as stated: {z(T)} = {z(0)}, and label-wise return at k*T with k the
// measured closure order (coefficient relabeling order times the position permutation order).
Outcome criterion7() {
  std::mt19937_64 rng(77);
  const double omegas[] = {0.5, 1.0, 2.0};
  double multiset_worst = 0.0, closure_worst = 0.0;
  int closed_at_t = 0, max_order = 1;
  for (int k = 0; k < 20; ++k) {
    const double omega = omegas[k % 3];
    const SystemConfig cfg = fixtures::random_config(rng, 2 + k % 4, omega);
    const double period = kTwoPi / omega;
    const NewgoldSolution one = solve_newgold_full(cfg, uniform_times(period, 500));
    record_psi(one.coefficients, one.positions);
    const double d = fixtures::brute_multiset_distance(one.positions.samples.back(), cfg.z0);
    multiset_worst = std::max(multiset_worst, d);
    if (d <= 1e-8) ++closed_at_t;

    const int kc = permutation_order(match_labels(one.coefficients.back(), one.coefficients.front()));
    const NewgoldSolution at_kc = solve_newgold_full(cfg, uniform_times(kc * period, 500 * kc));
    const int order = kc * permutation_order(match_labels(at_kc.positions.samples.back(), cfg.z0));
    max_order = std::max(max_order, order);
    const NewgoldSolution many = solve_newgold_full(cfg, uniform_times(order * period, 500 * order));
    record_psi(many.coefficients, many.positions);
    closure_worst = std::max(closure_worst, max_abs_difference(many.positions.samples.back(), cfg.z0));
  }
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "{z(T)} = {z(0)} for %d/20 configs (worst %.2e); label-wise error at k*T %.2e, largest k %d",
                closed_at_t, multiset_worst, closure_worst, max_order);
  return {multiset_worst <= 1e-8 && closure_worst <= 1e-8, detail};
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  double worst = 0.0;
  for (int n : {2, 3}) {
    for (int k = 0; k < 1000; ++k) {
      ComplexVector z, v;
      for (int j = 0; j < n; ++j) {
        z.push_back(fixtures::in_disk(rng, 2.0));
        v.push_back(fixtures::in_disk(rng, 1.0));
      }
      if (fixtures::min_separation(z) < 1e-3) continue;
      const ComplexVector generic = rhs_newgold(z, v, 1.0);
      const ComplexVector special = n == 2 ? rhs_newgold_n2(z, v) : rhs_newgold_n3(z, v);
      double scale = 1.0;
      for (const Complex& g : generic) scale = std::max(scale, std::abs(g));
      worst = std::max(worst, max_abs_difference(generic, special) / scale);
    }
  }
  return {worst <= 1e-12, fmt("2000 random inputs, max relative difference %.2e", worst)};
}

// d/dx of a scalar function by the 5-point central stencil.
template <class F>
Complex derivative5(F&& f, double h) {
  return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12.0 * h);
}

Outcome criterion9() {
  std::mt19937_64 rng(9);
  const double omegas[] = {0.5, 1.0, 2.0};
  double solve_worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double omega = omegas[k % 3];
    SystemConfig cfg = fixtures::random_config(rng, 2 + k % 4, omega);
    const std::vector<double> grid = uniform_times(kTwoPi / omega, 400);
    const Trajectory exact = solve_isogold_path(cfg, grid);
    const Trajectory ode = integrate(OdeSystem::kIsogold, cfg.z0, cfg.v0, omega, grid);
    std::vector<ComplexVector> coefficients;
    for (double t : grid) coefficients.push_back(isogold_coefficients(cfg, t));
    record_psi(coefficients, exact);
    for (std::size_t s = 0; s < grid.size(); ++s)
      solve_worst = std::max(solve_worst, max_abs_difference(exact.samples[s], ode.samples[s]));
  }

  // Canonical equations: zdot = dH/dzeta, zetadot = -dH/dz; differentiate zdot once more along the flow.
  double ham_worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double omega = omegas[k % 3];
    const SystemConfig cfg = fixtures::random_config(rng, 2 + k % 4, omega);
    const int n = cfg.n;
    const ComplexVector& z = cfg.z0;
    const ComplexVector& v = cfg.v0;
    ComplexVector zeta(n);
    for (int a = 0; a < n; ++a) {
      Complex product = 1.0;
      for (int b = 0; b < n; ++b)
        if (b != a) product *= z[a] - z[b];
      zeta[a] = std::log(v[a] * product);
    }
    auto shifted = [&](const ComplexVector& base, int index, double h) {
      ComplexVector out = base;
      out[index] += h;
      return out;
    };
    auto grad_zeta = [&](const ComplexVector& zz, const ComplexVector& ze, int a) {
      return derivative5([&](double h) { return hamiltonian_isogold(shifted(ze, a, h), zz, omega); }, 1e-3);
    };
    auto grad_z = [&](const ComplexVector& zz, const ComplexVector& ze, int a) {
      return derivative5([&](double h) { return hamiltonian_isogold(ze, shifted(zz, a, h), omega); }, 1e-3);
    };
    ComplexVector zdot(n), zetadot(n);
    for (int a = 0; a < n; ++a) {
      zdot[a] = grad_zeta(z, zeta, a);
      zetadot[a] = -grad_z(z, zeta, a);
    }
    const ComplexVector expected = rhs_isogold(z, v, omega);
    for (int a = 0; a < n; ++a) {
      auto along_flow = [&](double h) {
        ComplexVector zz = z, ze = zeta;
        for (int b = 0; b < n; ++b) {
          zz[b] += h * zdot[b];
          ze[b] += h * zetadot[b];
        }
        return grad_zeta(zz, ze, a);
      };
      const Complex zddot = derivative5(along_flow, 1e-3);
      ham_worst = std::max({ham_worst, std::abs(zdot[a] - v[a]), std::abs(zddot - expected[a])});
    }
  }
  return {solve_worst <= 1e-7 && ham_worst <= 1e-6,
          fmt("algebraic vs ODE %.2e, canonical equations vs rhs %.2e", solve_worst, ham_worst)};
}

Outcome criterion10() {
  return {g_psi_trajectories > 0 && g_psi_worst <= 1e-8,
          fmt("%.0f trajectories, max relative residual %.2e", g_psi_trajectories, g_psi_worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"equilibria N=2 match the published table", criterion1},
      {"equilibria N=3 match the published table", criterion2},
      {"Hermite zeros for N=2 and N=3", criterion3},
      {"coefficient-system rhs vanishes at the N=2 equilibria", criterion4},
      {"spectral coefficients agree with direct integration", criterion5},
      {"spectral positions agree with direct integration", criterion6},
      {"isochronicity and closure at k*T", criterion7},
      {"specialized N=2, N=3 right-hand sides equal the generic one", criterion8},
      {"classic goldfish solution and Hamiltonian", criterion9},
      {"positions are zeros of the concurrent polynomial", criterion10},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index++, name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
