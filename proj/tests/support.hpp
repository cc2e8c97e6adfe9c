// Shared fixtures for the unit tests and the acceptance runner.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "goldfish/symmetry.hpp"
#include "goldfish/types.hpp"

namespace fixtures {

using goldfish::Complex;
using goldfish::ComplexVector;

// Published 6-digit equilibrium tables (omega = 1), one row per configuration.
inline std::vector<ComplexVector> published_equilibria_n2() {
  return {
      {{0.353553, -0.762959}, {0.353553, 0.762959}},
      {{-0.54455, 1.00281}, {0.54455, -0.295704}},
      {{-0.54455, -1.00281}, {0.54455, 0.295704}},
      {{-1.26575, 0.0}, {0.558645, 0.0}},
  };
}

inline std::vector<ComplexVector> published_equilibria_n3() {
  return {
      {{0.720239, -0.575751}, {0.720239, 0.575751}, {-1.44048, 0.0}},
      {{0.397225, 1.07661}, {-1.12106, -0.854451}, {0.72384, -0.222154}},
      {{0.397225, -1.07661}, {0.72384, 0.222154}, {-1.12106, 0.854451}},
      {{0.709, 0.0}, {-0.3545, -1.2656}, {-0.3545, 1.2656}},
      {{-0.781352, 0.0}, {1.00305, -0.749241}, {1.00305, 0.749241}},
      {{0.0, 0.0}, {0.612372, -0.921816}, {0.612372, 0.921816}},
      {{-0.82853, -0.22063}, {0.82853, -0.22063}, {0.0, 1.666}},
      {{0.0, 0.0}, {-0.673004, 1.52228}, {0.673004, -0.297537}},
      {{0.82853, 0.22063}, {0.0, -1.666}, {-0.82853, 0.22063}},
      {{0.0, 0.0}, {-0.673004, -1.52228}, {0.673004, 0.297537}},
      {{-1.00305, 0.749241}, {-1.00305, -0.749241}, {0.781352, 0.0}},
      {{0.0, 0.0}, {-1.87718, 0.0}, {0.652438, 0.0}},
  };
}

// Initial-condition sets a..e for N = 2 and the N = 3 set, built from the tables above.
inline goldfish::SystemConfig paper_config_n2(char set) {
  const auto eq = published_equilibria_n2();
  goldfish::SystemConfig c;
  c.n = 2;
  c.omega = 1.0;
  c.t_end = goldfish::kTwoPi;
  const Complex shift(0.01, 0.01);
  switch (set) {
    case 'a':
      c.z0 = {eq[0][0] + 0.01, eq[0][1] + 0.01};
      c.v0 = {0.01, -0.01};
      break;
    case 'b': c.z0 = {eq[0][0] + shift, eq[0][1] + shift}; c.v0 = {-0.01, 0.01}; break;
    case 'c': c.z0 = {eq[1][0] + shift, eq[1][1] + shift}; c.v0 = {-0.01, 0.01}; break;
    case 'd': c.z0 = {eq[2][0] + shift, eq[2][1] + shift}; c.v0 = {-0.005, 0.005}; break;
    default: c.z0 = {eq[3][0] + shift, eq[3][1] + shift}; c.v0 = {-0.01, 0.01}; break;
  }
  return c;
}

inline goldfish::SystemConfig paper_config_n3() {
  const auto eq = published_equilibria_n3();
  goldfish::SystemConfig c;
  c.n = 3;
  c.omega = 1.0;
  c.t_end = goldfish::kTwoPi;
  for (const Complex& z : eq[2]) c.z0.push_back(z + 0.1);
  c.v0 = {0.1, 0.1, 0.1};
  return c;
}

inline double min_separation(const ComplexVector& v) {
  double d = INFINITY;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d = std::min(d, std::abs(v[i] - v[j]));
  return d;
}

inline Complex in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex z(u(rng), u(rng));
    if (std::norm(z) <= 1.0) return radius * z;
  }
}

// Positions in the unit disk, velocities of modulus <= vmax. Draws with crowded positions or
// crowded coefficients are rejected so that the spectral construction is well conditioned.
inline goldfish::SystemConfig random_config(std::mt19937_64& rng, int n, double omega, double vmax = 0.5) {
  goldfish::SystemConfig c;
  c.n = n;
  c.omega = omega;
  c.t_end = goldfish::kTwoPi / omega;
  for (;;) {
    c.z0.clear();
    c.v0.clear();
    for (int k = 0; k < n; ++k) {
      c.z0.push_back(in_disk(rng, 1.0));
      c.v0.push_back(in_disk(rng, vmax));
    }
    if (min_separation(c.z0) < 0.15) continue;
    if (min_separation(goldfish::coeffs_from_roots(c.z0)) < 0.05) continue;
    return c;
  }
}

// Best matching distance between two small multisets by brute force over all permutations.
inline double brute_multiset_distance(ComplexVector a, const ComplexVector& b) {
  std::vector<int> idx(a.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  double best = INFINITY;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[idx[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

// Horner evaluation of z^N + c_1 z^{N-1} + ... + c_N, written independently of the library.
inline Complex horner(const ComplexVector& c, Complex z) {
  Complex p = 1.0;
  for (const Complex& ck : c) p = p * z + ck;
  return p;
}

}  // namespace fixtures
