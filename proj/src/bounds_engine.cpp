#include "zetalab/bounds_engine.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zetalab/error.hpp"

namespace zetalab {

namespace {
constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;

double mode_factor(BoundMode mode) { return mode == BoundMode::full ? 1.0 : 0.5; }
}  // namespace

double LogLogHeight::log_height() const { return std::exp(value); }

std::string to_string(BoundMode m) { return m == BoundMode::full ? "full" : "half"; }

std::string to_string(CorollaryPreset p) { return p == CorollaryPreset::corollary ? "corollary" : "proof_end"; }

double tau_equation_lhs(const DecayEnvelope& env, double alpha, double tau, BoundMode mode) {
  return mode_factor(mode) * alpha * tau + env.log_phi_inv(0.5 * tau + 1.0);
}

TauSolution solve_tau(const DecayEnvelope& env, double alpha, LogLogHeight h, BoundMode mode) {
  if (!(alpha > 0.0)) throw DomainError("solve_tau requires alpha > 0");
  const double target = h.value;
  auto F = [&](double tau) { return tau_equation_lhs(env, alpha, tau, mode) - target; };
  if (!(F(0.0) < 0.0)) throw DomainError("H below solvability threshold");
  double lo = 0.0;
  double hi = 2.0 * target / alpha;
  while (F(hi) < 0.0) hi *= 2.0;
  TauSolution sol;
  while (hi - lo > 1e-13 * (1.0 + hi) && sol.iterations < 400) {
    const double mid = 0.5 * (lo + hi);
    (F(mid) < 0.0 ? lo : hi) = mid;
    ++sol.iterations;
  }
  double tau = 0.5 * (lo + hi);
  for (int it = 0; it < 5; ++it) {
    const double d = 1e-6 * (1.0 + tau);
    const double slope = (F(tau + d) - F(tau - d)) / (2.0 * d);
    if (!(slope > 0.0)) break;
    const double next = tau - F(tau) / slope;
    if (next < lo || next > hi || std::abs(F(next)) >= std::abs(F(tau))) break;
    tau = next;
    ++sol.iterations;
  }
  sol.tau = tau;
  sol.residual = std::abs(F(tau));
  return sol;
}

SideConditions check_side_conditions(const DecayEnvelope& env, double alpha, double tau, BoundMode mode) {
  SideConditions sc;
  sc.v_min = 0.5 * tau + 1.0;
  sc.v_max = 4.0 * sc.v_min;
  constexpr int samples = 200;
  double prev = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    const double v = sc.v_min + (sc.v_max - sc.v_min) * i / samples;
    const double lp = env.log_phi_inv(v);
    if (!(lp > prev)) sc.phi_increasing = false;
    prev = lp;
    if (!(std::log(v) <= lp)) sc.lower = false;
    // compare logs: ln ln phi(v) <= alpha v / 2 when ln phi > 0
    if (lp > 0.0 && !(std::log(lp) <= 0.5 * alpha * v)) sc.upper = false;
    if (mode == BoundMode::half && !(lp <= 0.5 * v)) sc.half = false;
  }
  return sc;
}

BoundParams theorem_a_bound(const DecayEnvelope& env, double alpha, LogLogHeight h, BoundMode mode,
                            FourierCache& cache) {
  BoundParams bp;
  bp.family = env.family().to_string();
  bp.envelope = env.name();
  bp.mode = mode;
  bp.alpha = alpha;
  bp.H = h;
  if (mode == BoundMode::full) {
    bp.kappa = std::max(61.0, 4.0 / alpha);
    bp.kappa_rule = "kappa = max(61, 4/alpha)";
  } else {
    bp.kappa = std::max(0.5, 4.0 / alpha);
    bp.kappa_rule = "kappa = max(0.5, 4/alpha)";
  }
  TauSolution sol;
  try {
    sol = solve_tau(env, alpha, h, mode);
  } catch (const DomainError& e) {
    bp.reason = e.what();
    return bp;
  }
  bp.tau = sol.tau;
  bp.tau_residual = sol.residual;
  const double tau = bp.tau;
  bp.log_X = tau * env.phi_inv(0.5 * tau + 1.0);
  bp.X = std::exp(bp.log_X);
  const double c = mode_factor(mode);
  bp.k_real = std::exp(c * alpha * tau) / (alpha * bp.kappa * tau);
  bp.k = static_cast<long long>(std::floor(std::min(bp.k_real, 9e18)));
  bp.k_at_least_7 = bp.k >= 7;
  bp.side = check_side_conditions(env, alpha, tau, mode);
  bp.power_condition = 3.0 * static_cast<double>(bp.k) * bp.log_X <= 0.75 * h.log_height() * (1.0 + 1e-12);

  const FourierValue fa = cache.get(env.family(), alpha);
  const FourierValue f0 = cache.get(env.family(), 0.0);
  bp.transform_alpha = fa.scaled_value();
  bp.transform_zero = f0.scaled_value();
  if (!(fa.value > fa.total_err())) {
    bp.reason = "alpha at or beyond root";
    return bp;
  }
  const double ratio = bp.transform_alpha / bp.transform_zero;
  if (mode == BoundMode::full) {
    bp.M = 0.5 * bp.transform_alpha *
           std::sqrt(static_cast<double>(bp.k) * std::log(bp.kappa) / (kE * alpha * tau));
    bp.log_mu = std::log(ratio / (10.0 * alpha) * std::sqrt(std::log(bp.kappa) / bp.kappa)) +
                0.5 * alpha * tau - std::log(tau);
  } else {
    bp.M = bp.transform_alpha * std::sqrt(2.0 * static_cast<double>(bp.k) / (3.0 * kE));
    bp.log_mu = std::log(ratio / (6.0 * std::sqrt(alpha * bp.kappa))) + 0.25 * alpha * tau - 0.5 * std::log(tau);
  }
  bp.mu = std::exp(bp.log_mu);
  if (!bp.side.all()) {
    bp.reason = "side conditions on phi fail on the sampled range";
    return bp;
  }
  bp.valid = true;
  return bp;
}

CorollaryParams corollary_bound(const DecayEnvelope& env, double rho, LogLogHeight h, BoundMode mode,
                                CorollaryPreset preset, FourierCache& cache) {
  if (!(rho > 0.0)) throw DomainError("corollary requires rho > 0");
  CorollaryParams cp;
  cp.family = env.family().to_string();
  cp.mode = mode;
  cp.preset = preset;
  cp.rho = rho;
  cp.H = h;
  if (mode == BoundMode::full) {
    cp.kappa = preset == CorollaryPreset::corollary ? std::max(32.0, 5.0 / rho) : std::max(62.0, 5.0 / rho);
  } else {
    cp.kappa = std::max(4.0, 0.5 * rho);
  }
  TauSolution sol;
  try {
    sol = solve_tau(env, rho, h, mode);
  } catch (const DomainError& e) {
    cp.reason = e.what();
    return cp;
  }
  cp.tau = sol.tau;
  cp.tau_residual = sol.residual;
  cp.alpha_effective = rho - 2.0 / cp.tau;
  const Derivative d = transform_derivative(env.family(), rho);
  cp.derivative_at_rho = d.value;
  cp.derivative_err = d.err;
  cp.transform_zero = cache.value(env.family(), 0.0);
  const double ratio = std::abs(d.value) / cp.transform_zero;
  const double tau = cp.tau;
  if (mode == BoundMode::full) {
    cp.log_mu = std::log(ratio / (5.0 * kE * rho) * std::sqrt(std::log(cp.kappa) / cp.kappa)) + 0.5 * rho * tau -
                2.0 * std::log(tau);
  } else {
    cp.log_mu = std::log(ratio / (5.0 * std::sqrt(kE * cp.kappa))) + 0.25 * rho * tau - 1.5 * std::log(tau);
  }
  cp.mu = std::exp(cp.log_mu);
  cp.valid = cp.alpha_effective > 0.0 && std::isfinite(cp.log_mu);
  if (!cp.valid) cp.reason = "tau too small for the corollary shift rho - 2/tau";
  return cp;
}

TheoremBound theorem_bound(int theorem, const TheoremInputs& in, LogLogHeight h) {
  const double L = h.value;
  if (!(L >= 1.0)) throw DomainError("theorem bounds require ln ln H >= 1");
  auto check_eps = [&] {
    if (!(in.epsilon > 0.0 && in.epsilon <= 0.1)) throw DomainError("epsilon must lie in (0, 0.1]");
  };
  TheoremBound b;
  b.theorem = theorem;
  b.condition = "conditional on RH and T >= T0 (non-effective)";
  switch (theorem) {
    case 1: {
      if (in.m < 1) throw DomainError("bound 1 requires m >= 1");
      const double m = in.m;
      b.log_value = 0.05 * std::exp(0.5 * L) / std::pow(2.0 * m * L, m);
      break;
    }
    case 2:
      check_eps();
      if (!(in.c > 0.0)) throw DomainError("bound 2 requires c > 0");
      b.log_value = std::exp(0.5 * L - in.c * std::pow(L, 1.0 - 0.5 * in.epsilon));
      break;
    case 3: {
      check_eps();
      const double gamma = gamma_from_rho(in.rho);
      b.log_value = std::exp((gamma - in.epsilon) * L);
      break;
    }
    case 4:
      check_eps();
      b.log_value = 0.5 * std::exp(std::pow(L, 0.5 * in.epsilon));
      break;
    default:
      throw DomainError("theorem must be 1, 2, 3 or 4");
  }
  b.value = std::exp(b.log_value);
  return b;
}

double gamma_from_rho(double rho) {
  if (!(rho > 0.0)) throw DomainError("gamma_from_rho requires rho > 0");
  return 1.0 / (2.0 + 1.0 / (kPi * rho));
}

std::optional<BoundParams> best_alpha(const DecayEnvelope& env, const std::vector<double>& alphas, LogLogHeight h,
                                      BoundMode mode, FourierCache& cache) {
  std::optional<BoundParams> best;
  for (double a : alphas) {
    BoundParams bp = theorem_a_bound(env, a, h, mode, cache);
    if (bp.valid && (!best || bp.log_mu > best->log_mu)) best = bp;
  }
  return best;
}

}  // namespace zetalab
