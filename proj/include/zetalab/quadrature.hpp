#pragma once

#include <cmath>
#include <complex>
#include <algorithm>
#include <functional>
#include <vector>

namespace zetalab::quad {

template <class V>
struct Estimate {
  V value{};
  double err = 0.0;       // |Kronrod - Gauss| style estimate
  double abs_integral = 0.0;  // integral of |f|, used for rounding budgets
};

namespace detail {
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
}  // namespace detail

// One 15-point Gauss-Kronrod panel on [a, b].
template <class V, class F>
Estimate<V> gauss_kronrod15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const V fc = f(c);
  V kron = fc * detail::kWgk[7];
  V gauss = fc * detail::kWg[3];
  double absk = detail::magnitude(fc) * detail::kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * detail::kXgk[j];
    const V f1 = f(c - dx);
    const V f2 = f(c + dx);
    kron += (f1 + f2) * detail::kWgk[j];
    absk += (detail::magnitude(f1) + detail::magnitude(f2)) * detail::kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * detail::kWg[j / 2];
  }
  Estimate<V> e;
  e.value = kron * h;
  e.err = detail::magnitude((kron - gauss) * h);
  e.abs_integral = absk * std::abs(h);
  return e;
}

// Adaptive bisection with 15-point Gauss-Kronrod panels until the summed
// error estimate is below abs_tol (or max_panels is hit).
template <class V, class F>
Estimate<V> adaptive_gk15(F&& f, double a, double b, double abs_tol, int max_panels = 4000) {
  struct Panel {
    double a, b;
    Estimate<V> est;
  };
  std::vector<Panel> done;
  std::vector<Panel> todo{{a, b, gauss_kronrod15<V>(f, a, b)}};
  int panels = 1;
  Estimate<V> total;
  while (!todo.empty()) {
    Panel p = todo.back();
    todo.pop_back();
    const double local_tol = abs_tol * std::abs(p.b - p.a) / std::abs(b - a);
    const double rounding_floor = 50.0 * 2.220446049250313e-16 * p.est.abs_integral;
    if (p.est.err <= std::max(local_tol, rounding_floor) || panels >= max_panels ||
        std::abs(p.b - p.a) < 1e-13 * (1.0 + std::abs(p.a))) {
      total.value += p.est.value;
      total.err += p.est.err;
      total.abs_integral += p.est.abs_integral;
      continue;
    }
    const double m = 0.5 * (p.a + p.b);
    todo.push_back({p.a, m, gauss_kronrod15<V>(f, p.a, m)});
    todo.push_back({m, p.b, gauss_kronrod15<V>(f, m, p.b)});
    ++panels;
  }
  return total;
}

// Tanh-sinh rule on [a, b]; tolerant of integrable endpoint singularities.
// f receives the abscissa. Error is the difference of the last two levels.
Estimate<double> tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                           int max_level = 8);

// n-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

}  // namespace zetalab::quad
