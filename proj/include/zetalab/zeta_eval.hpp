#pragma once

#include <complex>

namespace zetalab {

struct ZetaSample {
  double t = 0.0;
  double z_value = 0.0;   // Hardy Z(t)
  double abs_zeta = 0.0;  // |Z(t)| = |zeta(1/2 + it)|
  double err = 0.0;       // absolute bound on the error of z_value
};

struct ScanResult {
  double T = 0.0;
  double H = 0.0;
  double argmax_t = 0.0;
  double max_abs_zeta = 0.0;
  double grid_step = 0.0;
  bool refined = false;
};

// Riemann-Siegel phase via its asymptotic series; requires t >= 10.
double rs_theta(double t);

// Phase via the complex log-gamma function; valid for any real t.
double theta_lgamma(double t);

// zeta(s) by Euler-Maclaurin summation, with an error bound on the result.
struct ZetaValue {
  std::complex<double> value;
  double err = 0.0;
};
ZetaValue zeta_euler_maclaurin(std::complex<double> s);

// Hardy Z(t). Riemann-Siegel for |t| >= 30, Euler-Maclaurin below.
ZetaSample hardy_z(double t);

// Largest |zeta(1/2+it)| on [T, T+H].
ScanResult scan_max(double T, double H, double target_err);

// Grid step used by scan_max for a window ending at t_end.
double scan_grid_step(double t_end);

}  // namespace zetalab
