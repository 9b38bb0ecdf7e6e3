#include "zetalab/zeta_eval.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "zetalab/error.hpp"

namespace zetalab {

namespace {

using ld = long double;
constexpr ld kPiL = 3.141592653589793238462643383279502884L;
constexpr double kMaxHeight = 1e12;
constexpr double kRiemannSiegelFrom = 30.0;

// |B_2n| for n = 1..7
constexpr std::array<ld, 7> kBernoulliAbs = {1.0L / 6,  1.0L / 30, 1.0L / 42, 1.0L / 30,
                                             5.0L / 66, 691.0L / 2730, 7.0L / 6};

// B_{2k}/(2k)! for k = 1..kMaxEm from 2(-1)^{k+1} zeta(2k)/(2 pi)^{2k}.
constexpr int kMaxEm = 60;
const std::array<double, kMaxEm + 1>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kMaxEm + 1> b{};
    for (int k = 1; k <= kMaxEm; ++k) {
      ld z = 0.0L;
      if (k == 1) {
        z = kPiL * kPiL / 6.0L;
      } else {
        for (int n = 200; n >= 1; --n) z += std::pow(static_cast<ld>(n), -2.0L * k);
        z += std::pow(200.5L, 1.0L - 2.0L * k) / (2.0L * k - 1.0L);
      }
      const ld mag = 2.0L * z / std::pow(2.0L * kPiL, 2.0L * k);
      b[k] = static_cast<double>(k % 2 == 1 ? mag : -mag);
    }
    return b;
  }();
  return table;
}

// Taylor coefficients of Psi(z) = -cos(pi z^2/2 - 5 pi/8)/cos(pi z) around 0,
// from a discrete Cauchy integral on |z| = 1.3.
constexpr int kPsiTerms = 70;
const std::array<double, kPsiTerms>& psi_coefficients() {
  static const auto table = [] {
    constexpr int K = 256;
    constexpr double r = 1.3;
    const double pi = std::numbers::pi;
    std::vector<std::complex<double>> vals(K);
    for (int j = 0; j < K; ++j) {
      const std::complex<double> z = std::polar(r, 2.0 * pi * j / K);
      vals[j] = -std::cos(pi * z * z / 2.0 - 5.0 * pi / 8.0) / std::cos(pi * z);
    }
    std::array<double, kPsiTerms> a{};
    for (int n = 0; n < kPsiTerms; ++n) {
      std::complex<long double> s = 0.0L;
      for (int j = 0; j < K; ++j) {
        const long double ang = -2.0L * kPiL * static_cast<long double>((static_cast<long>(n) * j) % K) / K;
        s += std::complex<long double>(vals[j].real(), vals[j].imag()) *
             std::complex<long double>(std::cos(ang), std::sin(ang));
      }
      a[n] = static_cast<double>(s.real() / K / std::pow(static_cast<long double>(r), n));
    }
    return a;
  }();
  return table;
}

// d^j/dp^j Psi(2p - 1)
double psi_derivative(int j, double p) {
  const auto& a = psi_coefficients();
  const double z = 2.0 * p - 1.0;
  double s = 0.0;
  for (int n = kPsiTerms - 1; n >= j; --n) {
    double falling = 1.0;
    for (int i = 0; i < j; ++i) falling *= n - i;
    s = s * z + a[n] * falling;
  }
  return std::ldexp(s, j);
}

double rs_remainder(double t, long n_terms, double p, int corrections) {
  const double pi = std::numbers::pi;
  const double pi2 = pi * pi;
  const double a = std::sqrt(t / (2.0 * pi));
  std::array<double, 4> c{};
  c[0] = psi_derivative(0, p);
  c[1] = -psi_derivative(3, p) / (96.0 * pi2);
  c[2] = psi_derivative(2, p) / (64.0 * pi2) + psi_derivative(6, p) / (18432.0 * pi2 * pi2);
  c[3] = -psi_derivative(1, p) / (64.0 * pi2) - psi_derivative(5, p) / (3840.0 * pi2 * pi2) -
         psi_derivative(9, p) / (5308416.0 * pi2 * pi2 * pi2);
  double r = 0.0;
  double scale = 1.0;
  for (int k = 0; k < corrections; ++k) {
    r += c[k] * scale;
    scale /= a;
  }
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return sign * r / std::sqrt(a);
}

double theta_series_tail(double t) {
  // first omitted term of the asymptotic series
  const ld tl = t;
  return static_cast<double>((1.0L - std::pow(2.0L, -13.0L)) * kBernoulliAbs[6] /
                             (4.0L * 7 * 13 * std::pow(tl, 13.0L)));
}

ld theta_extended(ld tl) {
  ld th = tl / 2.0L * std::log(tl / (2.0L * kPiL)) - tl / 2.0L - kPiL / 8.0L;
  ld tpow = tl;
  const ld t2 = tl * tl;
  for (int n = 1; n <= 6; ++n) {
    const ld factor = 1.0L - std::pow(2.0L, 1.0L - 2.0L * n);
    th += factor * kBernoulliAbs[n - 1] / (4.0L * n * (2.0L * n - 1.0L) * tpow);
    tpow *= t2;
  }
  return th;
}

}  // namespace

double rs_theta(double t) {
  if (!(t >= 10.0)) {
    throw DomainError("rs_theta requires t >= 10; use theta_lgamma / Euler-Maclaurin below");
  }
  return static_cast<double>(theta_extended(t));
}

double theta_lgamma(double t) {
  using cld = std::complex<ld>;
  const cld z(0.25L, static_cast<ld>(t) / 2.0L);
  constexpr int shift = 12;
  ld im_log_sum = 0.0L;
  for (int k = 0; k < shift; ++k) im_log_sum += std::arg(z + static_cast<ld>(k));
  const cld w = z + static_cast<ld>(shift);
  cld lg = (w - 0.5L) * std::log(w) - w + 0.5L * std::log(2.0L * kPiL);
  cld wpow = w;
  const cld w2 = w * w;
  for (int n = 1; n <= 7; ++n) {
    const ld sign = (n % 2 == 1) ? 1.0L : -1.0L;
    lg += sign * kBernoulliAbs[n - 1] / (2.0L * n * (2.0L * n - 1.0L)) / wpow;
    wpow *= w2;
  }
  return static_cast<double>(lg.imag() - im_log_sum - static_cast<ld>(t) / 2.0L * std::log(kPiL));
}

ZetaValue zeta_euler_maclaurin(std::complex<double> s) {
  using cd = std::complex<double>;
  if (std::abs(s - 1.0) < 1e-12) throw DomainError("zeta has a pole at s = 1");
  const auto& b = bernoulli_over_factorial();
  const double t = std::abs(s.imag());
  const int N = 20 + static_cast<int>(std::ceil(t / 4.0));
  cd sum = 0.0;
  double abs_sum = 0.0;
  for (int n = N - 1; n >= 1; --n) {
    const cd term = std::exp(-s * std::log(static_cast<double>(n)));
    sum += term;
    abs_sum += std::abs(term);
  }
  const double lnN = std::log(static_cast<double>(N));
  const cd n_pow = std::exp(-s * lnN);  // N^{-s}
  sum += n_pow * static_cast<double>(N) / (s - 1.0) + 0.5 * n_pow;
  cd poch = s;                                 // s(s+1)...(s+2k-2)
  cd npow_k = n_pow / static_cast<double>(N);  // N^{-s-2k+1}
  double err = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  const double sigma = s.real();
  for (int k = 1; k < kMaxEm; ++k) {
    const cd term = b[k] * poch * npow_k;
    const double mag = std::abs(term);
    if (mag > prev_mag) {
      err = prev_mag;  // series started to diverge; stop at the smallest term
      break;
    }
    sum += term;
    abs_sum += mag;
    prev_mag = mag;
    poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    npow_k /= static_cast<double>(N) * N;
    const cd next = b[k + 1] * poch * npow_k;
    const double bound = std::abs(next) * std::abs(s + (2.0 * k + 1.0)) / (sigma + 2.0 * k + 1.0);
    err = bound;
    if (bound < 1e-18 * std::abs(sum)) break;
  }
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * (abs_sum + std::abs(sum));
  return {sum, err + rounding};
}

ZetaSample hardy_z(double t_in) {
  if (!std::isfinite(t_in) || std::abs(t_in) > kMaxHeight) {
    throw DomainError("hardy_z: |t| > 1e12, precision not guaranteed");
  }
  const double t = std::abs(t_in);  // Z is even
  ZetaSample out;
  out.t = t_in;
  const double eps = std::numeric_limits<double>::epsilon();
  if (t < kRiemannSiegelFrom) {
    const ZetaValue zv = zeta_euler_maclaurin({0.5, t});
    const double th = t >= 10.0 ? rs_theta(t) : theta_lgamma(t);
    const std::complex<double> rot = std::polar(1.0, th) * zv.value;
    out.z_value = rot.real();
    out.err = zv.err + std::abs(rot.imag()) + 4.0 * eps * std::abs(zv.value) + 1e-300;
  } else {
    const ld tl = t;
    const ld a = std::sqrt(tl / (2.0L * kPiL));
    const long n_terms = static_cast<long>(std::floor(a));
    const double p = static_cast<double>(a - n_terms);
    const ld th_ext = theta_extended(tl);
    ld sum = 0.0L;
    for (long n = 1; n <= n_terms; ++n) {
      ld phase = th_ext - tl * std::log(static_cast<ld>(n));
      phase = std::remainder(phase, 2.0L * kPiL);
      sum += std::cos(phase) / std::sqrt(static_cast<ld>(n));
    }
    const double main = static_cast<double>(2.0L * sum);
    out.z_value = main + rs_remainder(t, n_terms, p, 4);
    const double truncation = 3.0 * 0.031 * std::pow(t, -2.25);
    const double root_n = std::sqrt(static_cast<double>(n_terms));
    const double ld_eps = static_cast<double>(std::numeric_limits<ld>::epsilon());
    const double phase_err = theta_series_tail(t) + 8.0 * ld_eps * t * std::log(t);
    const double rounding = 16.0 * eps * (2.0 * root_n + 1.0) + 2.0 * phase_err * 2.0 * root_n;
    out.err = truncation + rounding;
  }
  out.abs_zeta = std::abs(out.z_value);
  return out;
}

double scan_grid_step(double t_end) {
  const double cap = 0.05;
  if (t_end <= std::exp(1.0)) return cap;
  return std::min(cap, 2.0 * std::numbers::pi / std::log(t_end));
}

ScanResult scan_max(double T, double H, double target_err) {
  if (!(H > 0.0)) throw DomainError("scan_max: H must be positive");
  if (!(T >= 0.0)) throw DomainError("scan_max: T must be non-negative");
  if (!(target_err > 0.0)) throw DomainError("scan_max: target_err must be positive");
  if (T + H > kMaxHeight) throw DomainError("scan_max: T+H > 1e12, precision not guaranteed");
  ScanResult r;
  r.T = T;
  r.H = H;
  r.grid_step = scan_grid_step(T + H);
  const double h = r.grid_step;
  const long n = static_cast<long>(std::floor(H / h + 1e-12));
  double best_t = T;
  double best = -1.0;
  auto visit = [&](double t) {
    const double v = hardy_z(t).abs_zeta;
    if (v > best) {
      best = v;
      best_t = t;
    }
  };
  for (long j = 0; j <= n; ++j) visit(T + static_cast<double>(j) * h);
  visit(T + H);

  // golden-section refinement of |Z| around the best grid point
  double lo = std::max(T, best_t - h);
  double hi = std::min(T + H, best_t + h);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = hardy_z(x1).abs_zeta;
  double f2 = hardy_z(x2).abs_zeta;
  int iters = 0;
  while (hi - lo > target_err && iters < 200) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = hardy_z(x1).abs_zeta;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = hardy_z(x2).abs_zeta;
    }
    ++iters;
  }
  const double cand_t = f1 > f2 ? x1 : x2;
  const double cand = std::max(f1, f2);
  if (cand > best) {
    best = cand;
    best_t = cand_t;
  }
  r.argmax_t = best_t;
  r.max_abs_zeta = best;
  r.refined = true;
  return r;
}

}  // namespace zetalab
