#include "goldfish/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "goldfish/symmetry.hpp"

namespace goldfish {

namespace {

void require_same_length(std::span<const Complex> a, std::span<const Complex> b, const char* what) {
  if (a.size() != b.size()) throw InvalidArgument(std::string(what) + ": position/velocity length mismatch");
}

void require_nonzero(Complex d, const std::string& what) {
  if (std::max(std::abs(d.real()), std::abs(d.imag())) < kCollisionTolerance)
    throw CollisionError('c', 0, 0, what + " denominator vanishes");
}

// sum_{l != n} 2 v_n v_l / (z_n - z_l)
Complex goldfish_force(std::span<const Complex> z, std::span<const Complex> v, std::size_t n) {
  Complex f = 0.0;
  for (std::size_t l = 0; l < z.size(); ++l)
    if (l != n) f += 2.0 * v[n] * v[l] / (z[n] - z[l]);
  return f;
}

}  // namespace

ComplexVector rhs_calogero(std::span<const Complex> c, double omega) {
  require_finite(c, "c");
  require_finite(omega, "omega");
  require_distinct(c, 'c', "rhs_calogero");
  const std::size_t n = c.size();
  ComplexVector a(n);
  for (std::size_t m = 0; m < n; ++m) {
    Complex s = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == m) continue;
      const Complex d = c[m] - c[l];
      s += 1.0 / (d * d * d);
    }
    a[m] = -omega * omega * c[m] + 2.0 * s;
  }
  return a;
}

ComplexVector rhs_newgold(std::span<const Complex> z, std::span<const Complex> v, double omega) {
  require_same_length(z, v, "rhs_newgold");
  require_finite(z, "z");
  require_finite(v, "v");
  require_finite(omega, "omega");
  require_distinct(z, 'z', "rhs_newgold");
  const ComplexVector c = coeffs_from_roots(z);
  // Bracket coefficients f_m = -w^2 c_m + 2 sum (c_m - c_l)^{-3}, i.e. the coefficient
  // accelerations; the bracket polynomial is sum_m f_m x^{N-m}.
  const ComplexVector f = rhs_calogero(c, omega);

  const std::size_t n = z.size();
  ComplexVector a(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex bracket = 0.0;
    for (const Complex& fm : f) bracket = bracket * z[k] + fm;
    Complex denominator = 1.0;
    for (std::size_t l = 0; l < n; ++l)
      if (l != k) denominator *= z[k] - z[l];
    a[k] = goldfish_force(z, v, k) - bracket / denominator;
  }
  return a;
}

ComplexVector rhs_newgold_n2(std::span<const Complex> z, std::span<const Complex> v) {
  if (z.size() != 2 || v.size() != 2) throw InvalidArgument("rhs_newgold_n2: expects exactly 2 bodies");
  require_finite(z, "z");
  require_finite(v, "v");
  require_distinct(z, 'z', "rhs_newgold_n2");
  const Complex z1 = z[0], z2 = z[1];
  const Complex d = z1 + z2 + z1 * z2;
  require_nonzero(d, "rhs_newgold_n2: z1 + z2 + z1 z2");
  const Complex d3 = d * d * d;
  const Complex pair = 2.0 * v[0] * v[1] / (z1 - z2);
  return {pair - (z1 * z1 - 2.0 * (z1 - 1.0) / d3) / (z1 - z2),
          -pair + (z2 * z2 - 2.0 * (z2 - 1.0) / d3) / (z1 - z2)};
}

ComplexVector rhs_newgold_n3(std::span<const Complex> z, std::span<const Complex> v) {
  if (z.size() != 3 || v.size() != 3) throw InvalidArgument("rhs_newgold_n3: expects exactly 3 bodies");
  require_finite(z, "z");
  require_finite(v, "v");
  require_distinct(z, 'z', "rhs_newgold_n3");
  const Complex z1 = z[0], z2 = z[1], z3 = z[2];
  const Complex s1 = z1 + z2 + z3;
  const Complex s2 = z1 * z2 + z1 * z3 + z2 * z3;
  const Complex s3 = z1 * z2 * z3;
  const Complex p = s1 - s3;
  const Complex q = s1 + s2;
  const Complex r = s2 + s3;
  require_nonzero(p, "rhs_newgold_n3: z1 + z2 + z3 - z1 z2 z3");
  require_nonzero(q, "rhs_newgold_n3: z1 + z2 + z3 + z1 z2 + z1 z3 + z2 z3");
  require_nonzero(r, "rhs_newgold_n3: z1 z2 + z1 z3 + z2 z3 + z1 z2 z3");
  const Complex p3 = p * p * p, q3 = q * q * q, r3 = r * r * r;

  const Complex f1 = s1 - 2.0 / p3 - 2.0 / q3;
  const Complex f2 = -s2 + 2.0 / q3 + 2.0 / r3;
  const Complex f3 = s3 + 2.0 / p3 - 2.0 / r3;
  auto bracket = [&](Complex x) { return x * x * f1 + x * f2 + f3; };

  const Complex v12 = 2.0 * v[0] * v[1] / (z1 - z2);
  const Complex v13 = 2.0 * v[0] * v[2] / (z1 - z3);
  const Complex v23 = 2.0 * v[1] * v[2] / (z2 - z3);
  return {v12 + v13 - bracket(z1) / ((z1 - z2) * (z1 - z3)),
          -v12 + v23 + bracket(z2) / ((z1 - z2) * (z2 - z3)),
          -v13 - v23 - bracket(z3) / ((z1 - z3) * (z2 - z3))};
}

ComplexVector rhs_isogold(std::span<const Complex> z, std::span<const Complex> v, double omega) {
  require_same_length(z, v, "rhs_isogold");
  require_finite(z, "z");
  require_finite(v, "v");
  require_finite(omega, "omega");
  require_distinct(z, 'z', "rhs_isogold");
  const Complex iw(0.0, omega);
  ComplexVector a(z.size());
  for (std::size_t n = 0; n < z.size(); ++n) a[n] = iw * v[n] + goldfish_force(z, v, n);
  return a;
}

Complex calogero_energy(std::span<const Complex> c, std::span<const Complex> cdot, double omega) {
  require_same_length(c, cdot, "calogero_energy");
  Complex e = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    e += 0.5 * (cdot[m] * cdot[m] + omega * omega * c[m] * c[m]);
    for (std::size_t l = m + 1; l < c.size(); ++l) {
      const Complex d = c[m] - c[l];
      e += 1.0 / (d * d);
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4).

namespace {

using State = std::vector<double>;

// Real-ified layout: [re x_1, im x_1, ..., re x_N, im x_N, re v_1, im v_1, ...].
State pack(std::span<const Complex> x, std::span<const Complex> v) {
  State y(4 * x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    y[2 * k] = x[k].real();
    y[2 * k + 1] = x[k].imag();
    y[2 * (x.size() + k)] = v[k].real();
    y[2 * (x.size() + k) + 1] = v[k].imag();
  }
  return y;
}

void unpack(const State& y, ComplexVector& x, ComplexVector& v) {
  const std::size_t n = y.size() / 4;
  x.resize(n);
  v.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = Complex(y[2 * k], y[2 * k + 1]);
    v[k] = Complex(y[2 * (n + k)], y[2 * (n + k) + 1]);
  }
}

class SecondOrderSystem {
 public:
  SecondOrderSystem(OdeSystem system, double omega) : system_(system), omega_(omega) {}

  void operator()(const State& y, State& dydt) {
    unpack(y, x_, v_);
    ComplexVector a;
    switch (system_) {
      case OdeSystem::kNewgold: a = rhs_newgold(x_, v_, omega_); break;
      case OdeSystem::kCalogero: a = rhs_calogero(x_, omega_); break;
      case OdeSystem::kIsogold: a = rhs_isogold(x_, v_, omega_); break;
    }
    dydt = pack(v_, a);
  }

 private:
  OdeSystem system_;
  double omega_;
  ComplexVector x_, v_;
};

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// Continuous extension (4th order) for output between step points.
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

class DormandPrince {
 public:
  DormandPrince(SecondOrderSystem rhs, const IntegratorOptions& options) : rhs_(std::move(rhs)), opt_(options) {}

  // Steps freely from times.front() to times.back() and reports the state at every
  // requested time, interpolating inside accepted steps.
  template <class Emit>
  void run(State y, std::span<const double> times, Emit&& emit) {
    double t = times.front();
    const double t_final = times.back();
    emit(y);
    std::size_t next = 1;
    if (next == times.size()) return;
    k1_.assign(y.size(), 0.0);
    evaluate(t, y, k1_);
    h_ = initial_step(y, t_final - t);
    State dense(y.size());
    while (next < times.size()) {
      const bool last = h_ >= t_final - t;
      const double h = last ? t_final - t : h_;
      if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
        throw IntegrationError("integrate: step size underflow at t=" + std::to_string(t), t);
      if (++steps_ > opt_.max_steps)
        throw IntegrationError("integrate: step budget exhausted at t=" + std::to_string(t), t);

      const double err = attempt(t, y, h);
      if (err > 1.0) {
        h_ = h * (std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.2);
        continue;
      }
      const double t_new = last ? t_final : t + h;
      for (; next < times.size() && times[next] < t_new; ++next) {
        interpolate(y, h, (times[next] - t) / h, dense);
        emit(dense);
      }
      if (next < times.size() && times[next] == t_new) {
        emit(y_new_);
        ++next;
      }
      t = t_new;
      y.swap(y_new_);
      k1_.swap(k7_);
      h_ = h * (err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2))));
    }
  }

 private:
  void evaluate(double t, const State& y, State& out) {
    try {
      rhs_(y, out);
    } catch (const CollisionError& e) {
      throw IntegrationError(std::string("integrate: ") + e.what() + " (last good time " + std::to_string(t) + ")", t);
    }
  }

  // State at t + theta h from the stages of the step just accepted (before k1_ is replaced).
  void interpolate(const State& y, double h, double theta, State& out) const {
    const double theta1 = 1.0 - theta;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double diff = y_new_[i] - y[i];
      const double bspl = h * k1_[i] - diff;
      const double r4 = diff - h * k7_[i] - bspl;
      const double r5 = h * (d1 * k1_[i] + d3 * k3_[i] + d4 * k4_[i] + d5 * k5_[i] + d6 * k6_[i] + d7 * k7_[i]);
      out[i] = y[i] + theta * (diff + theta1 * (bspl + theta * (r4 + theta1 * r5)));
    }
  }

  double initial_step(const State& y, double span) {
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double sk = opt_.atol + opt_.rtol * std::abs(y[i]);
      d0 += (y[i] / sk) * (y[i] / sk);
      d1 += (k1_[i] / sk) * (k1_[i] / sk);
    }
    d0 = std::sqrt(d0 / y.size());
    d1 = std::sqrt(d1 / y.size());
    double h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    return std::min(h, std::abs(span));
  }

  double attempt(double t, const State& y, double h) {
    const std::size_t dim = y.size();
    State tmp(dim);
    k2_.resize(dim);
    k3_.resize(dim);
    k4_.resize(dim);
    k5_.resize(dim);
    k6_.resize(dim);
    k7_.resize(dim);
    y_new_.resize(dim);
    auto stage = [&](State& out, double ct, auto&& combine) {
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * combine(i);
      evaluate(t + ct * h, tmp, out);
    };
    try {
      stage(k2_, c2, [&](std::size_t i) { return a21 * k1_[i]; });
      stage(k3_, c3, [&](std::size_t i) { return a31 * k1_[i] + a32 * k2_[i]; });
      stage(k4_, c4, [&](std::size_t i) { return a41 * k1_[i] + a42 * k2_[i] + a43 * k3_[i]; });
      stage(k5_, c5, [&](std::size_t i) { return a51 * k1_[i] + a52 * k2_[i] + a53 * k3_[i] + a54 * k4_[i]; });
      stage(k6_, 1.0, [&](std::size_t i) {
        return a61 * k1_[i] + a62 * k2_[i] + a63 * k3_[i] + a64 * k4_[i] + a65 * k5_[i];
      });
      for (std::size_t i = 0; i < dim; ++i)
        y_new_[i] = y[i] + h * (b1 * k1_[i] + b3 * k3_[i] + b4 * k4_[i] + b5 * k5_[i] + b6 * k6_[i]);
      evaluate(t + h, y_new_, k7_);
    } catch (const IntegrationError&) {
      // A trial stage that lands on a collision is treated as a rejected step; a genuine
      // collision shows up as step-size underflow.
      return std::numeric_limits<double>::infinity();
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double e =
          h * (e1 * k1_[i] + e3 * k3_[i] + e4 * k4_[i] + e5 * k5_[i] + e6 * k6_[i] + e7 * k7_[i]);
      const double sk = opt_.atol + opt_.rtol * std::max(std::abs(y[i]), std::abs(y_new_[i]));
      sum += (e / sk) * (e / sk);
    }
    const double err = std::sqrt(sum / dim);
    return std::isfinite(err) ? err : std::numeric_limits<double>::infinity();
  }

  SecondOrderSystem rhs_;
  IntegratorOptions opt_;
  State k1_, k2_, k3_, k4_, k5_, k6_, k7_, y_new_;
  double h_ = 0.0;
  long steps_ = 0;
};

}  // namespace

PhaseTrajectory integrate_phase(OdeSystem system, std::span<const Complex> x0, std::span<const Complex> v0,
                                double omega, std::span<const double> times, const IntegratorOptions& options) {
  require_same_length(x0, v0, "integrate");
  require_finite(x0, "x0");
  require_finite(v0, "v0");
  require_finite(omega, "omega");
  if (times.empty()) throw InvalidArgument("integrate: empty time grid");
  for (double t : times) require_finite(t, "times");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1])) throw InvalidArgument("integrate: times must be strictly increasing");
  if (!(options.rtol > 0.0) || !(options.atol > 0.0)) throw InvalidArgument("integrate: tolerances must be > 0");
  try {
    switch (system) {
      case OdeSystem::kNewgold: (void)rhs_newgold(x0, v0, omega); break;
      case OdeSystem::kCalogero: (void)rhs_calogero(x0, omega); break;
      case OdeSystem::kIsogold: (void)rhs_isogold(x0, v0, omega); break;
    }
  } catch (const CollisionError& e) {
    throw IntegrationError(std::string("integrate: invalid initial state: ") + e.what(), times.front());
  }

  DormandPrince stepper(SecondOrderSystem(system, omega), options);
  PhaseTrajectory out;
  out.positions.times.assign(times.begin(), times.end());
  out.positions.samples.reserve(times.size());
  out.velocities.reserve(times.size());
  ComplexVector x, v;
  stepper.run(pack(x0, v0), times, [&](const State& y) {
    unpack(y, x, v);
    out.positions.samples.push_back(x);
    out.velocities.push_back(v);
  });
  return out;
}

Trajectory integrate(OdeSystem system, std::span<const Complex> x0, std::span<const Complex> v0, double omega,
                     std::span<const double> times, const IntegratorOptions& options) {
  return integrate_phase(system, x0, v0, omega, times, options).positions;
}

Trajectory integrate(OdeSystem system, std::span<const Complex> x0, std::span<const Complex> v0, double omega,
                     double t_begin, double t_end, int samples, const IntegratorOptions& options) {
  require_finite(t_begin, "t_begin");
  require_finite(t_end, "t_end");
  if (samples < 1 || !(t_end > t_begin)) throw InvalidArgument("integrate: need samples >= 1 and t_end > t_begin");
  std::vector<double> times(static_cast<std::size_t>(samples) + 1);
  for (int k = 0; k <= samples; ++k) times[k] = t_begin + (t_end - t_begin) * static_cast<double>(k) / samples;
  times.back() = t_end;
  return integrate(system, x0, v0, omega, times, options);
}

}  // namespace goldfish
