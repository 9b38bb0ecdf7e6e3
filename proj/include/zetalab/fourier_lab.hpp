#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/test_functions.hpp"

namespace zetalab {

// Phi-hat(lambda) = integral of Phi(u) e^{-i lambda u} du, stored as
// value * exp(log_scale) so that tiny transforms stay representable.
struct FourierValue {
  double lambda = 0.0;
  double value = 0.0;
  double quad_err = 0.0;
  double trunc_err = 0.0;
  double log_scale = 0.0;
  double imag_residue = 0.0;
  double shift = 0.0;  // contour offset y (0 on the real axis)

  [[nodiscard]] double total_err() const { return quad_err + trunc_err; }
  [[nodiscard]] double scaled_value() const;
  [[nodiscard]] double scaled_err() const;
  // ln(|value| + total_err) + log_scale
  [[nodiscard]] double log_abs_upper() const;
};

// Real-axis quadrature with oscillation-resolving panels; quad_err + trunc_err <= tol.
FourierValue fourier_transform(const TestFunction& f, double lambda, double tol);

// Same transform integrated along Im z = -y. Relative accuracy is kept
// even when the transform is far below double range.
FourierValue fourier_transform_on_line(const TestFunction& f, double lambda, double y,
                                       double rel_tol = 1e-12);
double optimal_shift(const TestFunction& f, double lambda);
FourierValue fourier_transform_shifted(const TestFunction& f, double lambda, double rel_tol = 1e-12);

// Real axis when that resolves the value well, shifted contour otherwise.
FourierValue fourier_value(const TestFunction& f, double lambda);

// Read-mostly memo table of fourier_value results.
class FourierCache {
 public:
  FourierValue get(const TestFunction& f, double lambda);
  double value(const TestFunction& f, double lambda) { return get(f, lambda).scaled_value(); }
  [[nodiscard]] std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::string, double>, FourierValue> table_;
};

enum class EnvelopeKind { power_decay, rational_decay, log_decay };

// Upper bound |Phi-hat(lambda)| <= envelope(lambda) for lambda >= lambda0,
// with the rate F and its inverse phi used by the parameter equations.
class DecayEnvelope {
 public:
  static DecayEnvelope power(int m);
  static DecayEnvelope rational(int p, int q);
  static DecayEnvelope half(double delta);

  [[nodiscard]] const TestFunction& family() const { return family_; }
  [[nodiscard]] EnvelopeKind kind() const { return kind_; }
  [[nodiscard]] double delta() const { return delta_; }
  [[nodiscard]] double lambda0() const { return lambda0_; }
  void set_lambda0(double l0) { lambda0_ = l0; }
  // F and phi_inv are defined for arguments above domain_start
  [[nodiscard]] double domain_start() const;
  [[nodiscard]] double F(double u) const;
  [[nodiscard]] double phi_inv(double v) const;
  [[nodiscard]] double log_phi_inv(double v) const;
  [[nodiscard]] double log_bound(double lambda) const;
  [[nodiscard]] std::string name() const;

 private:
  DecayEnvelope(TestFunction f, EnvelopeKind k) : family_(f), kind_(k) {}
  TestFunction family_;
  EnvelopeKind kind_;
  double delta_ = 0.0;
  double lambda0_ = 0.0;
};

DecayEnvelope default_envelope(const TestFunction& f);

enum class DecayStatus { pass, fail, skipped };
std::string to_string(DecayStatus s);

struct DecayPoint {
  double lambda = 0.0;
  double log_transform_abs = 0.0;  // ln(|Phi-hat| + error)
  double log_envelope = 0.0;
  double ratio = 0.0;  // (|Phi-hat| + error) / envelope
  DecayStatus status = DecayStatus::skipped;
};

struct DecayReport {
  std::vector<DecayPoint> points;
  int failures = 0;
  int skipped = 0;
};

DecayReport verify_decay(const TestFunction& f, const DecayEnvelope& env, const std::vector<double>& grid);

// Smallest grid point of [start, lambda_max] (spacing step) from which the
// envelope holds at every later grid point.
double calibrate_onset(const TestFunction& f, const DecayEnvelope& env, double lambda_max, double step);

struct RootResult {
  double root = 0.0;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  double value = 0.0;      // Phi-hat at root
  double value_err = 0.0;  // error bound on value
  int evaluations = 0;
};

RootResult least_positive_root(const TestFunction& f, std::pair<double, double> bracket_hint);

struct Derivative {
  double value = 0.0;
  double err = 0.0;  // |D(h) - D(h/2)| with Richardson extrapolation applied
};
Derivative transform_derivative(const TestFunction& f, double lambda, double step = 1e-5);

// Chebyshev interpolant of Phi-hat on [0, lambda_max] with an error bound.
class TransformInterpolant {
 public:
  TransformInterpolant(const TestFunction& f, double lambda_max, double tol);
  [[nodiscard]] double operator()(double lambda) const;
  [[nodiscard]] double error_bound() const { return err_; }
  [[nodiscard]] double lambda_max() const { return lmax_; }
  [[nodiscard]] int degree() const { return static_cast<int>(coef_.size()) - 1; }

 private:
  double lmax_;
  double err_ = 0.0;
  std::vector<double> coef_;
};

}  // namespace zetalab
