#include "zetalab/selberg_moments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "zetalab/error.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta_eval.hpp"

namespace zetalab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxMoment = 8;

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

// ---- Dirichlet polynomial ----

DirichletPolynomial::DirichletPolynomial(const PrimeTable& table, const TestFunction& f, double tau, double X,
                                         FourierCache& cache) {
  if (!(tau > 0.0)) throw DomainError("dirichlet polynomial requires tau > 0");
  if (X > static_cast<double>(table.limit())) throw DomainError("X exceeds the sieve limit");
  const std::size_t n = table.count_upto(X);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = table.primes()[i];
    const double lp = std::log(p);
    log_p_.push_back(lp);
    coef_.push_back(cache.value(f, lp / tau) / std::sqrt(p));
  }
}

double DirichletPolynomial::operator()(double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < coef_.size(); ++i) s += coef_[i] * std::cos(t * log_p_[i]);
  return s;
}

std::vector<double> DirichletPolynomial::squared_weights() const {
  std::vector<double> w;
  w.reserve(coef_.size());
  for (double c : coef_) w.push_back(c * c);
  return w;
}

double DirichletPolynomial::abs_bound() const {
  double s = 0.0;
  for (double c : coef_) s += std::abs(c);
  return s;
}

double dirichlet_poly(const PrimeTable& table, const TestFunction& f, double tau, double X, double t,
                      FourierCache& cache) {
  return DirichletPolynomial(table, f, tau, X, cache)(t);
}

// ---- moments ----

MomentIntegrals moment_integrals(const std::function<double(double)>& W, double T, double H, int k, double cell) {
  if (k < 1 || k > kMaxMoment) throw DomainError("moment order k must lie in [1, 8]");
  if (!(H > 0.0) || !(cell > 0.0)) throw DomainError("moment window and cell must be positive");
  const quad::GaussLegendre gl = quad::gauss_legendre(2 * k + 8);
  const long cells = static_cast<long>(std::ceil(H / cell - 1e-12));
  const double h = H / static_cast<double>(cells);
  long double even = 0.0L;
  long double odd = 0.0L;
  for (long c = 0; c < cells; ++c) {
    const double mid = T + (static_cast<double>(c) + 0.5) * h;
    for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
      const double w = W(mid + 0.5 * h * gl.nodes[j]);
      const double w2k = std::pow(w, 2 * k);
      even += 0.5 * h * gl.weights[j] * w2k;
      odd += 0.5 * h * gl.weights[j] * w2k * w;
    }
  }
  return {static_cast<double>(even), static_cast<double>(odd)};
}

double diagonal_sum(const std::vector<double>& w, int k) {
  if (k < 1 || k > kMaxMoment) throw DomainError("diagonal sum order must lie in [1, 8]");
  std::vector<double> inv_fact_sq(k + 1);
  for (int e = 0; e <= k; ++e) inv_fact_sq[e] = 1.0 / (factorial(e) * factorial(e));
  std::vector<double> c(k + 1, 0.0);
  c[0] = 1.0;
  std::vector<double> next(k + 1);
  for (double wp : w) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int d = 0; d <= k; ++d) {
      double we = 1.0;
      for (int e = 0; e <= d; ++e) {
        next[d] += c[d - e] * we * inv_fact_sq[e];
        we *= wp;
      }
    }
    c.swap(next);
  }
  return factorial(k) * factorial(k) * c[k];
}

double diagonal_sum_enumerated(const std::vector<double>& w, int k) {
  const std::size_t n = w.size();
  double s = 0.0;
  if (k == 1) {
    for (double x : w) s += x;
    return s;
  }
  if (k == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      s += w[i] * w[i];
      for (std::size_t j = i + 1; j < n; ++j) s += 4.0 * w[i] * w[j];
    }
    return s;
  }
  if (k == 3) {
    // (3!/prod e!)^2: 36 for three distinct, 9 for a pair plus one, 1 for a triple
    for (std::size_t i = 0; i < n; ++i) {
      s += w[i] * w[i] * w[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) s += 9.0 * w[i] * w[i] * w[j];
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) s += 36.0 * w[i] * w[j] * w[l];
      }
    }
    return s;
  }
  throw DomainError("multiset enumeration is provided for k <= 3");
}

double distinct_lower_bound(const std::vector<double>& w, int k) {
  if (k < 1 || k > kMaxMoment) throw DomainError("diagonal sum order must lie in [1, 8]");
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (double x : w) {
    for (int d = k; d >= 1; --d) e[d] += e[d - 1] * x;
  }
  return factorial(k) * factorial(k) * e[k];
}

double default_detection_level(double I_k, double H, int k) {
  return (1.0 - 1e-6) * std::pow(std::max(I_k, 0.0) / H, 1.0 / (2.0 * k));
}

std::string to_string(DetectionStatus s) {
  switch (s) {
    case DetectionStatus::detected:
      return "detected";
    case DetectionStatus::conditions_not_satisfied:
      return "conditions not satisfied";
    case DetectionStatus::not_found:
      return "not found";
  }
  return "";
}

DetectionResult tsang_detect(const MomentReport& report, const std::vector<Sample>& samples) {
  DetectionResult r;
  const double H = report.H;
  const int k = report.k;
  const double M = report.M;
  const bool even_ok = report.I_k > H * std::pow(M, 2 * k);
  const bool odd_ok = std::abs(report.J_k) <= 0.5 * H * std::pow(M, 2 * k + 1);
  if (!(M > 0.0) || !even_ok || !odd_ok) {
    r.status = DetectionStatus::conditions_not_satisfied;
    return r;
  }
  const Sample* best = nullptr;
  for (const Sample& s : samples) {
    if (s.t < report.T || s.t > report.T + H) continue;
    if (best == nullptr || s.value > best->value) best = &s;
  }
  if (best != nullptr && best->value > 0.5 * M) {
    r.status = DetectionStatus::detected;
    r.t = best->t;
    r.value = best->value;
  } else {
    r.status = DetectionStatus::not_found;
    if (best != nullptr) r.value = best->value;
  }
  return r;
}

MomentReport moments(const PrimeTable& table, const TestFunction& f, double tau, double X, double T, double H,
                     int k, double grid_step, FourierCache& cache, std::optional<double> M) {
  if (k < 1 || k > kMaxMoment) throw DomainError("moments: k must lie in [1, 8]");
  if (!(X >= 2.0)) throw DomainError("moments: X must be at least 2");
  if (!(H > 0.0)) throw DomainError("moments: H must be positive");
  if (!(grid_step > 0.0) || grid_step > kPi / (2.0 * std::log(X)) * (1.0 + 1e-12)) {
    throw DomainError("moments: grid_step must not exceed pi/(2 ln X)");
  }
  const DirichletPolynomial A0(table, f, tau, X, cache);
  MomentReport rep;
  rep.k = k;
  rep.X = X;
  rep.T = T;
  rep.H = H;
  const MomentIntegrals mi = moment_integrals(A0, T, H, k, grid_step);
  rep.I_k = mi.even;
  rep.J_k = mi.odd;
  const std::vector<double> w = A0.squared_weights();
  rep.diagonal_sum = diagonal_sum(w, k);
  rep.distinct_bound = distinct_lower_bound(w, k);
  rep.diag = std::pow(2.0, -2.0 * k) * binomial(2 * k, k) * H * rep.diagonal_sum;
  rep.M = M.value_or(default_detection_level(rep.I_k, H, k));
  const long n = static_cast<long>(std::floor(H / grid_step + 1e-12));
  for (long j = 0; j <= n; ++j) {
    const double t = T + static_cast<double>(j) * grid_step;
    rep.samples.push_back({t, A0(t)});
  }
  if (T + static_cast<double>(n) * grid_step < T + H) rep.samples.push_back({T + H, A0(T + H)});
  const DetectionResult d = tsang_detect(rep, rep.samples);
  rep.detection = d.status;
  rep.detected_t = d.t;
  rep.detected_value = d.value;
  return rep;
}

// ---- convolution identity ----

double ConvolutionBudget::total() const {
  return lhs_quadrature + lhs_zeta + lhs_tail + prime_tail + prime_interp + b_quadrature + rounding;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::inconclusive:
      return "inconclusive";
  }
  return "";
}

BTerm b_term(const TestFunction& f, double tau, double t) {
  auto integrand = [&](double u) {
    const std::complex<double> z{-t * tau, -u * tau};
    const std::complex<double> G = log_weight(f, z);
    if (-G.real() < -745.0) return 0.0;
    return std::exp(-G).real();
  };
  const auto est = quad::adaptive_gk15<double>(integrand, 0.0, 0.5, 1e-15, 200);
  return {2.0 * kPi * est.value, 2.0 * kPi * (est.err + 8.0 * kEps * est.abs_integral)};
}

namespace {

struct Zero {
  double u;
  double slope;
};

// Sign changes of Z(t+u) on [-U, U], refined by bisection.
std::vector<Zero> zeros_in(double t, double U) {
  std::vector<Zero> out;
  const double step = std::min(0.02, 0.2 * scan_grid_step(t + U));
  const long n = static_cast<long>(std::ceil(2.0 * U / step));
  const double h = 2.0 * U / static_cast<double>(n);
  double prev_u = -U;
  double prev = hardy_z(t + prev_u).z_value;
  for (long i = 1; i <= n; ++i) {
    const double u = -U + static_cast<double>(i) * h;
    const double cur = hardy_z(t + u).z_value;
    if ((prev < 0.0) != (cur < 0.0)) {
      double a = prev_u;
      double b = u;
      double fa = prev;
      for (int it = 0; it < 200 && b - a > 4.0 * kEps * (t + std::abs(u)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = hardy_z(t + m).z_value;
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      const double z0 = 0.5 * (a + b);
      const double d = 1e-6;
      const double slope = std::abs(hardy_z(t + z0 + d).z_value - hardy_z(t + z0 - d).z_value) / (2.0 * d);
      out.push_back({z0, slope});
    }
    prev_u = u;
    prev = cur;
  }
  return out;
}

// Smallest L = ln N with (1/tau) int_L^inf e^{v/2} envelope(v/tau) dv <= target.
double prime_tail(const DecayEnvelope& env, double tau, double L) {
  auto integrand = [&](double v) { return std::exp(0.5 * v + env.log_bound(v / tau)); };
  double hi = L + 1.0;
  while (0.5 * hi + env.log_bound(hi / tau) > 0.5 * L + env.log_bound(L / tau) - 60.0 && hi < L + 1e4) {
    hi = L + 2.0 * (hi - L);
  }
  const auto est = quad::adaptive_gk15<double>(integrand, L, hi, 1e-3 * integrand(L) + 1e-300, 400);
  return (est.value + est.err) / tau;
}

}  // namespace

ConvolutionCheck convolution_check(const TestFunction& f, double tau, double t, double window, double tol) {
  if (!(tau >= 1.0)) throw DomainError("convolution_check requires tau >= 1");
  if (!(window >= 0.0)) throw DomainError("convolution_check requires window >= 0");
  if (!(t >= window + 10.0)) throw DomainError("convolution_check requires t >= window + 10");
  if (!(tol > 0.0)) throw DomainError("convolution_check requires tol > 0");
  ConvolutionCheck cc;
  cc.t = t;
  cc.tau = tau;
  cc.window = window;

  // left side: integral of Phi(tau u) ln|zeta(1/2 + i(t+u))|
  const GrowthPair pair = growth_pair(f);
  const double u_cut = pair.g(std::log(1.0 / tol) + 60.0) / tau;
  const double U = std::min(window, u_cut);
  if (U > 0.0) {
    const std::vector<Zero> zeros = zeros_in(t, U);
    cc.zeros_in_window = static_cast<int>(zeros.size());
    std::vector<double> cuts{-U};
    for (const Zero& z : zeros) cuts.push_back(z.u);
    cuts.push_back(U);
    const double seg_tol = tol / (16.0 * static_cast<double>(cuts.size()));
    auto lnz = [&](double u) {
      const double v = hardy_z(t + u).abs_zeta;
      return std::log(std::max(v, 1e-300));
    };
    auto value = [&](double u) { return phi_real(f, tau * u) * lnz(u); };
    auto perturbation = [&](double u) {
      const ZetaSample s = hardy_z(t + u);
      double d = 0.0;
      if (s.abs_zeta > 2.0 * s.err) {
        d = s.err / (s.abs_zeta - s.err);
      } else {
        d = std::abs(std::log(std::max(s.abs_zeta, 1e-300))) + std::abs(std::log(s.err)) + 2.0;
      }
      return phi_real(f, tau * u) * d;
    };
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const auto est = quad::tanh_sinh(value, cuts[i], cuts[i + 1], seg_tol, 9);
      cc.lhs += est.value;
      cc.parts.lhs_quadrature += est.err;
      cc.parts.rounding += 16.0 * kEps * est.abs_integral;
      const auto pert = quad::tanh_sinh(perturbation, cuts[i], cuts[i + 1], 0.1 * seg_tol, 6);
      cc.parts.lhs_zeta += pert.value + pert.err;
    }
  }
  const double tu = tau * U;
  if (tu >= pair.u0() && tu >= pair.convex_from() && pair.dG(tu) > 0.0) {
    cc.parts.lhs_tail = 8.0 * std::log(t + U + 3.0) * std::exp(-pair.G(tu)) / (tau * pair.dG(tu));
  } else {
    cc.parts.lhs_tail = std::numeric_limits<double>::infinity();
  }

  // prime-power sum, truncated where the envelope tail drops below tol/4
  const DecayEnvelope env = default_envelope(f);
  double L_lo = std::max({tau * std::max(env.lambda0(), env.domain_start() + 1e-9), std::log(2.0)});
  double L_hi = L_lo;
  while (prime_tail(env, tau, L_hi) > 0.25 * tol) {
    L_hi = L_lo + 2.0 * (L_hi - L_lo) + 1.0;
    if (L_hi > std::log(static_cast<double>(kMaxSieveLimit))) break;
  }
  if (prime_tail(env, tau, L_lo) > 0.25 * tol) {
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (L_lo + L_hi);
      if (prime_tail(env, tau, mid) > 0.25 * tol) {
        L_lo = mid;
      } else {
        L_hi = mid;
      }
    }
  } else {
    L_hi = L_lo;
  }
  const double L = std::min(L_hi, std::log(static_cast<double>(kMaxSieveLimit)));
  const auto N = static_cast<std::uint64_t>(std::max(2.0, std::ceil(std::exp(L))));
  cc.truncation_N = N;
  cc.parts.prime_tail = prime_tail(env, tau, std::log(static_cast<double>(N)));

  const double sqrtN = std::sqrt(static_cast<double>(N));
  const double interp_tol = std::max(1e-13, 0.125 * tol * tau / (2.0 * sqrtN));
  const TransformInterpolant phat(f, std::log(static_cast<double>(N)) / tau, interp_tol);
  const PrimeTable primes = PrimeTable::sieve(N);
  long double sum = 0.0L;
  long double abs_sum = 0.0L;
  long double weight_sum = 0.0L;
  for (const std::uint32_t p : primes.primes()) {
    const double lp = std::log(static_cast<double>(p));
    std::uint64_t pk = p;
    for (int k = 1;; ++k) {
      const double lpk = k * lp;
      const double w = std::exp(-0.5 * lpk) / k;
      const double term = w * phat(lpk / tau) * std::cos(t * lpk);
      sum += term;
      abs_sum += std::abs(term);
      weight_sum += w;
      if (pk > N / p) break;
      pk *= p;
    }
  }
  cc.rhs_A = static_cast<double>(sum) / tau;
  cc.parts.prime_interp = phat.error_bound() * static_cast<double>(weight_sum) / tau;
  cc.parts.rounding += 64.0 * kEps * static_cast<double>(abs_sum) / tau;

  const BTerm b = b_term(f, tau, t);
  cc.rhs_B = b.value;
  cc.parts.b_quadrature = b.err;

  cc.residual = std::abs(cc.lhs - (cc.rhs_A - cc.rhs_B));
  cc.budget = cc.parts.total();
  if (!(cc.budget <= 0.5 * std::abs(cc.lhs))) {
    cc.status = CheckStatus::inconclusive;
  } else {
    cc.status = cc.residual <= cc.budget ? CheckStatus::pass : CheckStatus::fail;
  }
  return cc;
}

}  // namespace zetalab
