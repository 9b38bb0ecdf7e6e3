#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace zetalab {

struct PowerFamily {
  int m = 1;  // Phi(u) = exp(-u^{2m}/(2m))
  friend bool operator==(const PowerFamily&, const PowerFamily&) = default;
};

struct RationalFamily {
  int p = 1;  // Phi(u) = exp(-G_r(u)), G_r(z) = q sum_n z^{2np}/(2nq)!
  int q = 2;
  friend bool operator==(const RationalFamily&, const RationalFamily&) = default;
};

class TestFunction {
 public:
  static TestFunction power(int m);
  static TestFunction rational(int p, int q);
  // "power:m=2", "rational:p=1,q=2"; aliases "gaussian" and "half".
  static TestFunction parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] bool is_power() const { return std::holds_alternative<PowerFamily>(kind_); }
  [[nodiscard]] const PowerFamily& power_family() const { return std::get<PowerFamily>(kind_); }
  [[nodiscard]] const RationalFamily& rational_family() const { return std::get<RationalFamily>(kind_); }
  // p/q for the rational family
  [[nodiscard]] double rational_exponent() const;

  friend bool operator==(const TestFunction&, const TestFunction&) = default;

 private:
  explicit TestFunction(PowerFamily f) : kind_(std::in_place_type<PowerFamily>, f) {}
  explicit TestFunction(RationalFamily f) : kind_(std::in_place_type<RationalFamily>, f) {}
  std::variant<PowerFamily, RationalFamily> kind_;
};

TestFunction gaussian();
TestFunction half_family();  // exp(-(cosh sqrt u + cos sqrt u))

double phi_real(const TestFunction& f, double u);
std::complex<double> phi_complex(const TestFunction& f, std::complex<double> z);

// Exponent G with Phi = exp(-G).
double log_weight(const TestFunction& f, double u);
std::complex<double> log_weight(const TestFunction& f, std::complex<double> z);
std::complex<double> log_weight_derivative(const TestFunction& f, std::complex<double> z);

// The two representations of G_r, exposed for cross-checking.
double rational_series(int p, int q, double u);
std::complex<double> rational_series(int p, int q, std::complex<double> z);
std::complex<double> rational_cosh_sum(int p, int q, std::complex<double> z);

// Lower envelope exponent G with |Phi(u)| <= exp(-G(|u|)) for |u| >= u0,
// and its inverse g.
class GrowthPair {
 public:
  explicit GrowthPair(TestFunction f);

  [[nodiscard]] const TestFunction& family() const { return family_; }
  [[nodiscard]] double G(double u) const;
  [[nodiscard]] double dG(double u) const;
  [[nodiscard]] double g(double v) const;
  [[nodiscard]] double u0() const { return u0_; }
  // G' is nondecreasing on [convex_from, inf)
  [[nodiscard]] double convex_from() const { return convex_from_; }
  [[nodiscard]] std::string formula() const;

 private:
  TestFunction family_;
  double u0_ = 0.0;
  double convex_from_ = 0.0;
  double scale_ = 0.5;   // rational family: G = scale e^{u^r} - shift
  double shift_ = 1.0;
};

GrowthPair growth_pair(const TestFunction& f);

// Smallest grid point on [0, u_end] from which log_weight(f,u) >= pair.G(u)
// holds at every later grid point.
double envelope_onset(const TestFunction& f, const GrowthPair& pair, double u_end, int points);

}  // namespace zetalab
