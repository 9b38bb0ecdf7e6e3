#include "zetalab/fourier_lab.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "zetalab/error.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

namespace {

using cd = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

const GrowthPair& cached_pair(const TestFunction& f) {
  static std::mutex mutex;
  static std::map<std::string, GrowthPair> cache;
  std::lock_guard lock(mutex);
  const std::string key = f.to_string();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, GrowthPair(f)).first;
  return it->second;
}

// Largest x-step that still resolves the shape of exp(-G) along a line.
double shape_step(const TestFunction& f, cd z) {
  if (f.is_power()) return 0.25;
  const double r = f.rational_exponent();
  return 0.25 * std::max(1.0, std::pow(std::abs(z), 1.0 - r));
}

// Extent beyond which Re G(x - iy) is known to grow for the family.
double line_extent(const TestFunction& f, double y) {
  if (f.is_power()) {
    const int m = f.power_family().m;
    return 1.2 * y / std::tan(kPi / (4.0 * m)) + 1.0;
  }
  const double r = f.rational_exponent();
  return 1.1 * std::pow(3.0 * std::sqrt(2.0) * y / kPi, 1.0 / (1.0 - r)) + 1.0;
}

struct LinePeak {
  double c = -std::numeric_limits<double>::infinity();  // max of -Re G on the line
  double x_end = 0.0;
};

LinePeak line_peak(const TestFunction& f, double y, double margin) {
  LinePeak lp;
  const double x_min = line_extent(f, y);
  double x = 0.0;
  for (long it = 0; it < 4000000; ++it) {
    const cd z{x, -y};
    const cd G = log_weight(f, z);
    double v = -G.real();
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    lp.c = std::max(lp.c, v);
    const cd dG = log_weight_derivative(f, z);
    const double gap = lp.c - v;
    if (x >= x_min && gap > margin && dG.real() > 0.0) {
      lp.x_end = x;
      return lp;
    }
    const double d = std::abs(dG);
    double h = shape_step(f, z);
    if (d > 0.0) h = std::min(h, std::max(0.5, 0.5 * gap) / d);
    x += std::max(h, 1e-6 * (1.0 + x));
  }
  lp.x_end = x;
  return lp;
}

double margin_for(double rel_tol) { return 40.0 + std::log(1.0 / rel_tol); }

FourierValue integrate_line(const TestFunction& f, double lam, double y, const LinePeak& lp, double rel_tol) {
  FourierValue out;
  out.lambda = lam;
  out.shift = y;
  const double c = lp.c;
  auto integrand = [&](double x) {
    const cd z{x, -y};
    return std::exp(-log_weight(f, z) - c - cd{0.0, lam * x});
  };
  cd sum = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  double x = 0.0;
  const double X = lp.x_end;
  while (x < X) {
    const cd z{x, -y};
    double w = shape_step(f, z);
    if (-log_weight(f, z).real() - c > -margin_for(rel_tol)) {
      const double speed = lam + std::abs(log_weight_derivative(f, z));
      w = std::min(w, kPi / (2.0 * speed + 1.0));
    }
    w = std::max(w, 1e-7 * (1.0 + x));
    const double b = std::min(X, x + w);
    const auto est = quad::adaptive_gk15<cd>(integrand, x, b, 0.25 * rel_tol * (b - x) / X, 64);
    sum += est.value;
    err += est.err;
    l1 += est.abs_integral;
    x = b;
  }
  const cd zX{X, -y};
  const double mag = std::exp(-log_weight(f, zX).real() - c);
  const double slope = log_weight_derivative(f, zX).real();
  out.value = 2.0 * sum.real();
  out.quad_err = 2.0 * err + 2.0 * 64.0 * kEps * l1;
  out.trunc_err = slope > 0.0 ? 2.0 * mag / slope : std::numeric_limits<double>::infinity();
  out.log_scale = c - lam * y;
  return out;
}

// ln of e^{-lam y} * 2 * int_0^X |Phi(x - iy)| dx plus tail: an upper bound for |Phi-hat(lam)|
// that needs no resolution of the lam-oscillation.
double log_magnitude_bound(const TestFunction& f, double lam, double y, const LinePeak& lp) {
  const double c = lp.c;
  auto mag = [&](double x) { return std::exp(-log_weight(f, cd{x, -y}).real() - c); };
  double sum = 0.0;
  double err = 0.0;
  double x = 0.0;
  const double X = lp.x_end;
  while (x < X) {
    const cd z{x, -y};
    double w = shape_step(f, z);
    const double gap = c + log_weight(f, z).real();
    const double d = std::abs(log_weight_derivative(f, z));
    if (d > 0.0) w = std::min(w, std::max(0.5, 0.5 * gap) / d);
    w = std::max(w, 1e-7 * (1.0 + x));
    const double b = std::min(X, x + w);
    const auto est = quad::adaptive_gk15<double>(mag, x, b, 1e-3 * (b - x) / X, 64);
    sum += est.value;
    err += est.err;
    x = b;
  }
  const cd zX{X, -y};
  const double slope = log_weight_derivative(f, zX).real();
  const double tail = slope > 0.0 ? mag(X) / slope : std::numeric_limits<double>::infinity();
  return std::log(2.0 * (sum + err + tail)) + c - lam * y;
}

}  // namespace

double FourierValue::scaled_value() const { return value * std::exp(log_scale); }
double FourierValue::scaled_err() const { return total_err() * std::exp(log_scale); }
double FourierValue::log_abs_upper() const { return std::log(std::abs(value) + total_err()) + log_scale; }

FourierValue fourier_transform(const TestFunction& f, double lambda, double tol) {
  if (!(tol >= 1e-14)) throw DomainError("fourier_transform: tol below 1e-14 is beyond double precision");
  FourierValue out;
  out.lambda = lambda;
  const double lam = std::abs(lambda);
  const DecayEnvelope env = default_envelope(f);
  if (lam >= env.lambda0() && lam > env.domain_start() && env.log_bound(lam) < std::log(1e-300)) {
    out.trunc_err = std::exp(env.log_bound(lam));
    return out;
  }
  const GrowthPair& pair = cached_pair(f);
  const double U =
      std::max({pair.g(std::log(2.0 / tol) + 2.0), pair.u0(), pair.convex_from(), 1.0});
  const double width = kPi / (2.0 * lam + 1.0);
  const int panels = static_cast<int>(std::ceil(U / width));
  const double h = U / panels;
  auto integrand = [&](double u) { return phi_real(f, u) * std::polar(1.0, -lam * u); };
  cd sum = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  const double panel_tol = 0.25 * tol / (2.0 * panels);
  for (int side = -1; side <= 1; side += 2) {
    for (int i = 0; i < panels; ++i) {
      const double a = side * i * h;
      const double b = side * (i + 1) * h;
      const auto est = quad::adaptive_gk15<cd>(integrand, std::min(a, b), std::max(a, b), panel_tol, 200);
      sum += est.value;
      err += est.err;
      l1 += est.abs_integral;
    }
  }
  out.value = sum.real();
  out.imag_residue = std::abs(sum.imag());
  out.quad_err = err + 16.0 * kEps * l1 * std::sqrt(static_cast<double>(panels));
  out.trunc_err = 2.0 * std::exp(-pair.G(U)) / pair.dG(U);
  return out;
}

FourierValue fourier_transform_on_line(const TestFunction& f, double lambda, double y, double rel_tol) {
  const double lam = std::abs(lambda);
  if (y < 0.0) throw DomainError("contour offset must be non-negative");
  if (lam == 0.0) y = 0.0;
  const LinePeak lp = line_peak(f, y, margin_for(rel_tol));
  FourierValue out = integrate_line(f, lam, y, lp, rel_tol);
  out.lambda = lambda;
  return out;
}

double optimal_shift(const TestFunction& f, double lambda) {
  const double lam = std::abs(lambda);
  if (lam == 0.0) return 0.0;
  const double margin = 20.0;  // the peak only needs to be located, not integrated
  auto cost = [&](double y) { return line_peak(f, y, margin).c - lam * y; };
  std::vector<double> ys{0.0};
  std::vector<double> ms{cost(0.0)};
  double best = ms[0];
  std::size_t ib = 0;
  for (double y = 0.05; y < 5000.0; y *= 1.3) {
    const double m = cost(y);
    ys.push_back(y);
    ms.push_back(m);
    if (m < best) {
      best = m;
      ib = ys.size() - 1;
    }
    if (m > best + 40.0 && y > 1.5 * ys[ib]) break;
  }
  double lo = ib == 0 ? 0.0 : ys[ib - 1];
  double hi = ib + 1 < ys.size() ? ys[ib + 1] : ys[ib];
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = cost(x1);
  double f2 = cost(x2);
  for (int it = 0; it < 40 && hi - lo > 0.05 * (1.0 + hi); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = cost(x2);
    }
  }
  const double yg = f1 < f2 ? x1 : x2;
  return std::min(f1, f2) < best ? yg : ys[ib];
}

FourierValue fourier_transform_shifted(const TestFunction& f, double lambda, double rel_tol) {
  return fourier_transform_on_line(f, lambda, optimal_shift(f, lambda), rel_tol);
}

FourierValue fourier_value(const TestFunction& f, double lambda) {
  if (std::abs(lambda) <= 60.0) {
    FourierValue fv = fourier_transform(f, lambda, 1e-13);
    if (std::abs(fv.value) > 1e3 * fv.total_err()) return fv;
  }
  return fourier_transform_shifted(f, lambda, 1e-12);
}

FourierValue FourierCache::get(const TestFunction& f, double lambda) {
  const auto key = std::make_pair(f.to_string(), lambda);
  {
    std::shared_lock lock(mutex_);
    const auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  FourierValue fv = fourier_value(f, lambda);
  std::unique_lock lock(mutex_);
  return table_.emplace(key, fv).first->second;
}

std::size_t FourierCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

// ---- decay envelopes ----

DecayEnvelope DecayEnvelope::power(int m) {
  DecayEnvelope e(TestFunction::power(m), EnvelopeKind::power_decay);
  return e;
}

DecayEnvelope DecayEnvelope::rational(int p, int q) {
  DecayEnvelope e(TestFunction::rational(p, q), EnvelopeKind::rational_decay);
  return e;
}

DecayEnvelope DecayEnvelope::half(double delta) {
  if (!(delta > 0.0)) throw DomainError("log-decay envelope requires delta > 0");
  DecayEnvelope e(half_family(), EnvelopeKind::log_decay);
  e.delta_ = delta;
  return e;
}

double DecayEnvelope::domain_start() const {
  switch (kind_) {
    case EnvelopeKind::power_decay:
      return 0.0;
    case EnvelopeKind::rational_decay:
      return family_.rational_family().q;
    case EnvelopeKind::log_decay:
      return 1.0;
  }
  return 0.0;
}

namespace {
// sin(pi kappa)/(1+2 kappa) with kappa = 1/(2(2m-1))
double power_rate_constant(int m) {
  const double kappa = 1.0 / (2.0 * (2.0 * m - 1.0));
  return std::sin(kPi * kappa) / (1.0 + 2.0 * kappa);
}
}  // namespace

double DecayEnvelope::F(double u) const {
  switch (kind_) {
    case EnvelopeKind::power_decay: {
      const int m = family_.power_family().m;
      return power_rate_constant(m) * std::pow(u, 1.0 / (2.0 * m - 1.0));
    }
    case EnvelopeKind::rational_decay: {
      const auto& r = family_.rational_family();
      return 0.6 * std::pow(std::log(u / r.q), static_cast<double>(r.q) / r.p - 1.0);
    }
    case EnvelopeKind::log_decay:
      return kPi / (1.0 + delta_) * std::log(u);
  }
  return 0.0;
}

double DecayEnvelope::log_phi_inv(double v) const {
  switch (kind_) {
    case EnvelopeKind::power_decay: {
      const int m = family_.power_family().m;
      return (2.0 * m - 1.0) * std::log(v / power_rate_constant(m));
    }
    case EnvelopeKind::rational_decay: {
      const auto& r = family_.rational_family();
      return std::log(static_cast<double>(r.q)) +
             std::pow(5.0 * v / 3.0, static_cast<double>(r.p) / (r.q - r.p));
    }
    case EnvelopeKind::log_decay:
      return (1.0 + delta_) * v / kPi;
  }
  return 0.0;
}

double DecayEnvelope::phi_inv(double v) const { return std::exp(log_phi_inv(v)); }

double DecayEnvelope::log_bound(double lambda) const {
  const double lam = std::abs(lambda);
  switch (kind_) {
    case EnvelopeKind::power_decay: {
      const int m = family_.power_family().m;
      const double alpha = 2.0 * m / (2.0 * m - 1.0);
      const double beta = (m - 1.0) / (2.0 * m - 1.0);
      const double kappa = 1.0 / (2.0 * (2.0 * m - 1.0));
      return std::log(5.0 / std::sqrt(static_cast<double>(m))) - beta * std::log(lam) -
             std::pow(lam, alpha) / alpha * std::sin(kPi * kappa);
    }
    case EnvelopeKind::rational_decay:
    case EnvelopeKind::log_decay:
      return -lam * F(lam);
  }
  return 0.0;
}

std::string DecayEnvelope::name() const {
  switch (kind_) {
    case EnvelopeKind::power_decay:
      return "power-decay";
    case EnvelopeKind::rational_decay:
      return "rational-decay";
    case EnvelopeKind::log_decay:
      return "log-decay";
  }
  return "";
}

// Onsets: first integer grid point inside the envelope domain; a step-0.5 sweep to 100 found no failure
// anywhere in the domain.
DecayEnvelope default_envelope(const TestFunction& f) {
  if (f.is_power()) {
    DecayEnvelope e = DecayEnvelope::power(f.power_family().m);
    e.set_lambda0(1.0);
    return e;
  }
  const auto& r = f.rational_family();
  if (r.p == 1 && r.q == 2) {
    DecayEnvelope e = DecayEnvelope::half(0.1);
    e.set_lambda0(2.0);
    return e;
  }
  DecayEnvelope e = DecayEnvelope::rational(r.p, r.q);
  e.set_lambda0(r.q + 1.0);
  return e;
}

std::string to_string(DecayStatus s) {
  switch (s) {
    case DecayStatus::pass:
      return "pass";
    case DecayStatus::fail:
      return "fail";
    case DecayStatus::skipped:
      return "skipped";
  }
  return "";
}

namespace {
DecayPoint check_point(const TestFunction& f, const DecayEnvelope& env, double lambda) {
  DecayPoint pt;
  pt.lambda = lambda;
  const double lam = std::abs(lambda);
  if (lam < env.lambda0() || lam <= env.domain_start()) {
    pt.status = DecayStatus::skipped;
    return pt;
  }
  pt.log_envelope = env.log_bound(lam);
  const double y = optimal_shift(f, lam);
  pt.log_transform_abs = log_magnitude_bound(f, lam, y, line_peak(f, y, margin_for(1e-6)));
  if (pt.log_transform_abs > pt.log_envelope) {
    pt.log_transform_abs = fourier_transform_on_line(f, lam, y, 1e-10).log_abs_upper();
  }
  pt.ratio = std::exp(pt.log_transform_abs - pt.log_envelope);
  pt.status = pt.log_transform_abs <= pt.log_envelope ? DecayStatus::pass : DecayStatus::fail;
  return pt;
}
}  // namespace

DecayReport verify_decay(const TestFunction& f, const DecayEnvelope& env, const std::vector<double>& grid) {
  if (!(f == env.family())) throw DomainError("envelope belongs to a different test function");
  DecayReport rep;
  for (double lam : grid) {
    rep.points.push_back(check_point(f, env, lam));
    if (rep.points.back().status == DecayStatus::fail) ++rep.failures;
    if (rep.points.back().status == DecayStatus::skipped) ++rep.skipped;
  }
  return rep;
}

double calibrate_onset(const TestFunction& f, const DecayEnvelope& env, double lambda_max, double step) {
  DecayEnvelope probe = env;
  probe.set_lambda0(0.0);
  std::vector<double> grid;
  for (double lam = step; lam <= lambda_max + 1e-9; lam += step) {
    if (lam > env.domain_start()) grid.push_back(lam);
  }
  double onset = grid.empty() ? lambda_max : grid.front();
  for (double lam : grid) {
    if (check_point(f, probe, lam).status == DecayStatus::fail) onset = lam + step;
  }
  return onset;
}

// ---- root of the transform ----

RootResult least_positive_root(const TestFunction& f, std::pair<double, double> bracket_hint) {
  auto [lo, hi] = bracket_hint;
  if (!(lo > 0.0 && hi > lo)) throw DomainError("bracket invalid: need 0 < low < high");
  RootResult res;
  const FourierValue flo = fourier_value(f, lo);
  const FourierValue fhi = fourier_value(f, hi);
  res.evaluations += 2;
  const bool lo_pos = flo.value > flo.total_err();
  const bool lo_neg = flo.value < -flo.total_err();
  const bool hi_pos = fhi.value > fhi.total_err();
  const bool hi_neg = fhi.value < -fhi.total_err();
  if (!((lo_pos && hi_neg) || (lo_neg && hi_pos))) throw NumericalError("bracket invalid: no sign change");

  // no earlier sign change on [0, lo]
  const bool start_pos = fourier_value(f, 0.0).value > 0.0;
  for (double lam = 0.01; lam < lo; lam += 0.01) {
    FourierValue fv = fourier_transform(f, lam, 1e-13);
    if (std::abs(fv.value) <= 10.0 * fv.total_err()) fv = fourier_transform_shifted(f, lam, 1e-12);
    ++res.evaluations;
    const bool pos = fv.value > fv.total_err();
    const bool neg = fv.value < -fv.total_err();
    if ((start_pos && !pos) || (!start_pos && !neg)) {
      throw NumericalError("not least root: sign change before " + std::to_string(lo));
    }
  }

  const double y = optimal_shift(f, 0.5 * (lo + hi));
  auto eval = [&](double lam) {
    ++res.evaluations;
    return fourier_transform_on_line(f, lam, y, 1e-13);
  };
  FourierValue a = eval(lo);
  FourierValue b = eval(hi);
  const double sa = a.value > 0 ? 1.0 : -1.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    const FourierValue m = eval(mid);
    if (std::abs(m.value) <= m.total_err()) {
      lo = hi = mid;
      a = b = m;
      break;
    }
    if ((m.value > 0 ? 1.0 : -1.0) == sa) {
      lo = mid;
      a = m;
    } else {
      hi = mid;
      b = m;
    }
  }
  double root = 0.5 * (lo + hi);
  if (hi > lo) {
    // secant step inside the final bracket; both values share the same scale
    const double fa = a.value * std::exp(a.log_scale - b.log_scale);
    const double s = lo - fa * (hi - lo) / (b.value - fa);
    if (s > lo && s < hi) root = s;
  }
  const FourierValue at = eval(root);
  res.root = root;
  res.bracket_low = lo;
  res.bracket_high = hi;
  res.value = at.scaled_value();
  res.value_err = at.scaled_err();
  return res;
}

Derivative transform_derivative(const TestFunction& f, double lambda, double step) {
  const double y = optimal_shift(f, lambda);
  auto T = [&](double lam) { return fourier_transform_on_line(f, lam, y, 1e-13).scaled_value(); };
  const double d1 = (T(lambda + step) - T(lambda - step)) / (2.0 * step);
  const double h2 = 0.5 * step;
  const double d2 = (T(lambda + h2) - T(lambda - h2)) / (2.0 * h2);
  return {(4.0 * d2 - d1) / 3.0, std::abs(d1 - d2)};
}

// ---- Chebyshev interpolant ----

TransformInterpolant::TransformInterpolant(const TestFunction& f, double lambda_max, double tol)
    : lmax_(lambda_max) {
  if (!(lambda_max > 0.0)) throw DomainError("interpolant range must be positive");
  for (int n = 32; n <= 1024; n *= 2) {
    std::vector<double> vals(n);
    double node_err = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = std::cos(kPi * (j + 0.5) / n);
      const FourierValue fv = fourier_transform(f, 0.5 * lmax_ * (x + 1.0), std::max(1e-14, 0.01 * tol));
      vals[j] = fv.value;
      node_err = std::max(node_err, fv.total_err());
    }
    coef_.assign(n, 0.0);
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += vals[j] * std::cos(kPi * k * (j + 0.5) / n);
      coef_[k] = (k == 0 ? 1.0 : 2.0) * s / n;
    }
    double tail = 0.0;
    for (int k = n - 4; k < n; ++k) tail += std::abs(coef_[k]);
    const double lebesgue = 2.0 / kPi * std::log(static_cast<double>(n)) + 1.0;
    err_ = 4.0 * tail + lebesgue * node_err + 1e-15;
    if (err_ <= tol) return;
  }
  throw NumericalError("transform interpolant did not reach the requested tolerance");
}

double TransformInterpolant::operator()(double lambda) const {
  const double lam = std::abs(lambda);
  if (lam > lmax_ * (1.0 + 1e-12)) throw DomainError("interpolant evaluated outside its range");
  const double x = 2.0 * lam / lmax_ - 1.0;
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = static_cast<int>(coef_.size()) - 1; k >= 1; --k) {
    const double b0 = coef_[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coef_[0] + x * b1 - b2;
}

}  // namespace zetalab
