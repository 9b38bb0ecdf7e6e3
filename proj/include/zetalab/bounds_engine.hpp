#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetalab/fourier_lab.hpp"
#include "zetalab/test_functions.hpp"

namespace zetalab {

// ln ln H; the heights of interest overflow a double.
struct LogLogHeight {
  double value = 0.0;
  [[nodiscard]] double log_height() const;  // ln H
};

enum class BoundMode { full, half };
std::string to_string(BoundMode m);

struct TauSolution {
  double tau = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// Root of c alpha tau + ln phi(tau/2 + 1) = ln ln H with c = 1 (full) or 1/2 (half).
TauSolution solve_tau(const DecayEnvelope& env, double alpha, LogLogHeight h, BoundMode mode);
double tau_equation_lhs(const DecayEnvelope& env, double alpha, double tau, BoundMode mode);

struct SideConditions {
  bool phi_increasing = true;
  bool lower = true;  // ln v <= ln phi(v)
  bool upper = true;  // ln phi(v) <= e^{alpha v / 2}
  bool half = true;   // ln phi(v) <= v/2, half mode only
  double v_min = 0.0;
  double v_max = 0.0;
  [[nodiscard]] bool all() const { return phi_increasing && lower && upper && half; }
};
SideConditions check_side_conditions(const DecayEnvelope& env, double alpha, double tau, BoundMode mode);

struct BoundParams {
  std::string family;
  std::string envelope;
  BoundMode mode = BoundMode::full;
  double alpha = 0.0;
  double kappa = 0.0;
  std::string kappa_rule;
  double tau = 0.0;
  double tau_residual = 0.0;
  double log_X = 0.0;  // ln X = tau phi(tau/2 + 1)
  double X = 0.0;      // inf when ln X exceeds double range
  double k_real = 0.0;
  long long k = 0;
  bool k_at_least_7 = false;
  double transform_alpha = 0.0;
  double transform_zero = 0.0;
  double M = 0.0;
  double mu = 0.0;
  double log_mu = 0.0;
  LogLogHeight H;
  SideConditions side;
  bool power_condition = false;  // X^{3k} <= H^{0.75}
  bool valid = false;
  std::string reason;
};

BoundParams theorem_a_bound(const DecayEnvelope& env, double alpha, LogLogHeight h, BoundMode mode,
                            FourierCache& cache);

enum class CorollaryPreset { corollary, proof_end };
std::string to_string(CorollaryPreset p);

struct CorollaryParams {
  std::string family;
  BoundMode mode = BoundMode::full;
  CorollaryPreset preset = CorollaryPreset::corollary;
  double rho = 0.0;
  double derivative_at_rho = 0.0;
  double derivative_err = 0.0;
  double transform_zero = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  double tau_residual = 0.0;
  double alpha_effective = 0.0;  // rho - 2/tau in full mode
  double mu = 0.0;
  double log_mu = 0.0;
  LogLogHeight H;
  bool valid = false;
  std::string reason;
};

CorollaryParams corollary_bound(const DecayEnvelope& env, double rho, LogLogHeight h, BoundMode mode,
                                CorollaryPreset preset, FourierCache& cache);

struct TheoremInputs {
  int m = 1;             // power-family index
  double epsilon = 0.05;
  double c = 1.0;        // unspecified positive constant
  double rho = 0.0;      // least positive root, used for gamma
};

struct TheoremBound {
  int theorem = 1;
  double log_value = 0.0;  // ln of the lower bound for F(T;H)
  double value = 0.0;      // exp(log_value), inf on overflow
  bool conditional = true;
  std::string condition;
};

TheoremBound theorem_bound(int theorem, const TheoremInputs& in, LogLogHeight h);

double gamma_from_rho(double rho);

// Alpha maximising ln mu over a grid; nullopt when no grid point is valid.
std::optional<BoundParams> best_alpha(const DecayEnvelope& env, const std::vector<double>& alphas, LogLogHeight h,
                                      BoundMode mode, FourierCache& cache);

}  // namespace zetalab
