#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldfish {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Label assignment: entry n is the index (0-based) of the item that carries label n.
using Permutation = std::vector<int>;

/// Pairwise differences smaller than this (max-norm over re/im) count as collisions,
/// both for particle positions and for polynomial coefficients.
inline constexpr double kCollisionTolerance = 1e-10;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// ---------------------------------------------------------------------------
// Errors. Everything thrown by the library derives from goldfish::Error.

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kValidation,
  kIo,
  kUnsupported,
  kCollision,
  kConvergence,
  kTracking,
  kIntegration,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  /// Numerical failures (as opposed to bad input or I/O).
  bool numerical() const noexcept {
    return kind_ == ErrorKind::kCollision || kind_ == ErrorKind::kConvergence ||
           kind_ == ErrorKind::kTracking || kind_ == ErrorKind::kIntegration;
  }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::kInvalidArgument, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::kParse, what) {}
};

/// Configuration failed validation; `field()` is the JSON path of the offending entry.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(ErrorKind::kValidation, field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorKind::kUnsupported, what) {}
};

/// Two positions (family 'z') or two coefficients (family 'c') coincide.
class CollisionError : public Error {
 public:
  CollisionError(char family, int first, int second, const std::string& context)
      : Error(ErrorKind::kCollision, context + ": " + family + "-collision between indices " +
                                         std::to_string(first) + " and " + std::to_string(second)),
        family_(family),
        first_(first),
        second_(second) {}
  char family() const noexcept { return family_; }
  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  char family_;
  int first_;
  int second_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(ErrorKind::kConvergence, what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class TrackingError : public Error {
 public:
  TrackingError(const std::string& what, double time) : Error(ErrorKind::kTracking, what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double last_good_time)
      : Error(ErrorKind::kIntegration, what), last_good_time_(last_good_time) {}
  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

// ---------------------------------------------------------------------------
// Domain values.

/// Problem definition for an N-body run. Immutable once validated by load_config or validate().
struct SystemConfig {
  int n = 0;
  double omega = 1.0;
  ComplexVector z0;  ///< initial positions
  ComplexVector v0;  ///< initial velocities
  double t_end = kTwoPi;
  int samples = 1000;  ///< number of intervals; a run emits samples + 1 rows
};

/// Polynomial coefficients c_1..c_N and their time derivatives.
struct CoeffState {
  ComplexVector c;
  ComplexVector cdot;
};

/// z^N + c_1 z^{N-1} + ... + c_N. The leading coefficient is implicit.
class MonicPolynomial {
 public:
  MonicPolynomial() = default;
  explicit MonicPolynomial(ComplexVector coeffs) : coeffs_(std::move(coeffs)) {}

  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
  const ComplexVector& coeffs() const noexcept { return coeffs_; }
  /// max(1, max_m |c_m|), the reference magnitude for residual bounds.
  double scale() const noexcept;

 private:
  ComplexVector coeffs_;
};

/// Labeled positions (or coefficients) on an increasing time grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexVector> samples;
  /// Set when the grid contains the period: entry n is the index of the t=0 label that
  /// label n occupies at t = T.
  std::optional<Permutation> closure_permutation;

  std::size_t size() const noexcept { return times.size(); }
  int bodies() const noexcept { return samples.empty() ? 0 : static_cast<int>(samples.front().size()); }
};

enum class EquilibriumFamily { kReal, kImaginary };

struct EquilibriumEntry {
  ComplexVector configuration;
  EquilibriumFamily family = EquilibriumFamily::kReal;
  int permutation_index = 0;
  double residual = 0.0;
};

struct EquilibriumCatalog {
  std::vector<EquilibriumEntry> entries;
};

// ---------------------------------------------------------------------------
// Shared numeric helpers.

/// Throws InvalidArgument naming `what` when any component is NaN or infinite.
void require_finite(std::span<const Complex> values, const std::string& what);
void require_finite(double value, const std::string& what);

/// max(|re|, |im|) of a - b.
inline double max_norm_difference(Complex a, Complex b) noexcept {
  const Complex d = a - b;
  return std::max(std::abs(d.real()), std::abs(d.imag()));
}

/// Throws CollisionError for the first pair closer than kCollisionTolerance.
void require_distinct(std::span<const Complex> values, char family, const std::string& context);

/// Largest |a_n - b_n| over labels; the spans must have equal length.
double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b);

/// Order of a permutation (lcm of its cycle lengths).
int permutation_order(const Permutation& perm);

}  // namespace goldfish
