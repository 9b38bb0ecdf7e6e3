#include "zetalab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "zetalab/bounds_engine.hpp"
#include "zetalab/error.hpp"
#include "zetalab/fourier_lab.hpp"
#include "zetalab/prime_tools.hpp"
#include "zetalab/selberg_moments.hpp"
#include "zetalab/test_functions.hpp"
#include "zetalab/zeta_eval.hpp"

namespace zetalab::cli {

namespace {

using nlohmann::json;

constexpr double kReferenceRootLow = 2.37689234;
constexpr double kReferenceRootHigh = 2.37689235;

enum class Format { csv, json };

struct Artifact {
  std::string text;
  int status = kExitOk;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string fixed9(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(9) << v;
  return os.str();
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i];
    s += "\n";
  }
  return s;
}

// Flat JSON object rendered as a one-row CSV.
std::string json_to_csv(const json& j) {
  std::vector<std::string> header;
  std::vector<std::string> row;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() || value.is_array()) continue;
    header.push_back(key);
    row.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return csv(header, {row});
}

std::string render(const json& j, Format f) { return f == Format::json ? j.dump(2) + "\n" : json_to_csv(j); }

PrimeTable load_primes(std::uint64_t limit) {
  const char* dir = std::getenv("ZETALAB_SIEVE_CACHE");
  if (dir != nullptr && *dir != '\0') {
    if (auto t = load_prime_table(dir, limit)) return std::move(*t);
    PrimeTable t = PrimeTable::sieve(limit);
    save_prime_table(dir, t);
    return t;
  }
  return PrimeTable::sieve(limit);
}

DecayEnvelope envelope_for(const TestFunction& f, double delta) {
  if (!f.is_power() && f.rational_family().p == 1 && f.rational_family().q == 2) {
    DecayEnvelope e = DecayEnvelope::half(delta);
    e.set_lambda0(default_envelope(f).lambda0());
    return e;
  }
  return default_envelope(f);
}

json side_json(const SideConditions& s) {
  return {{"phi_increasing", s.phi_increasing}, {"lower", s.lower}, {"upper", s.upper},
          {"half", s.half}, {"v_min", s.v_min}, {"v_max", s.v_max}};
}

json bound_json(const BoundParams& b) {
  return {{"family", b.family},
          {"envelope", b.envelope},
          {"mode", to_string(b.mode)},
          {"alpha", b.alpha},
          {"kappa", b.kappa},
          {"kappa_rule", b.kappa_rule},
          {"tau", b.tau},
          {"tau_residual", b.tau_residual},
          {"log_X", b.log_X},
          {"X", b.X},
          {"k", b.k},
          {"k_real", b.k_real},
          {"k_at_least_7", b.k_at_least_7},
          {"transform_alpha", b.transform_alpha},
          {"transform_zero", b.transform_zero},
          {"M", b.M},
          {"mu", b.mu},
          {"log_mu", b.log_mu},
          {"loglogH", b.H.value},
          {"side_conditions", side_json(b.side)},
          {"power_condition", b.power_condition},
          {"valid", b.valid},
          {"reason", b.reason},
          {"mu_tau_power", b.mode == BoundMode::full ? 1.0 : 0.5}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"zetalab: large values of zeta on the critical line, numerically"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  std::string format_name;
  app.add_option("-o,--output", output, "write the artifact to this file");
  app.add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::function<Artifact()> action;
  Format default_format = Format::json;

  // rho
  auto* rho_cmd = app.add_subcommand("rho", "least positive root of the transform of the half family");
  double rho_low = 2.3;
  double rho_high = 2.5;
  rho_cmd->add_option("--low", rho_low, "bracket low end")->capture_default_str();
  rho_cmd->add_option("--high", rho_high, "bracket high end")->capture_default_str();
  rho_cmd->callback([&] {
    action = [&] {
      const RootResult r = least_positive_root(half_family(), {rho_low, rho_high});
      const bool inside = r.root > kReferenceRootLow && r.root < kReferenceRootHigh;
      json j{{"command", "rho"},
             {"paper_ref", "least positive root of h(lambda) = int_0^inf exp(-(cosh sqrt u + cos sqrt u)) cos(lambda u) du"},
             {"family", half_family().to_string()},
             {"rho", r.root},
             {"rho_9", fixed9(r.root)},
             {"bracket_low", r.bracket_low},
             {"bracket_high", r.bracket_high},
             {"bracket_width", r.bracket_high - r.bracket_low},
             {"transform_at_root", r.value},
             {"transform_err", r.value_err},
             {"evaluations", r.evaluations},
             {"reference_bracket", {kReferenceRootLow, kReferenceRootHigh}},
             {"inside_reference_bracket", inside},
             {"defaults", {{"low", rho_low}, {"high", rho_high}}}};
      return Artifact{render(j, Format::json), inside ? kExitOk : kExitError};
    };
  });

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "exponent 1/(2 + 1/(pi rho))");
  double gamma_rho = 0.0;
  gamma_cmd->add_option("--rho", gamma_rho, "root; computed when omitted");
  gamma_cmd->callback([&] {
    action = [&] {
      const double rho = gamma_rho > 0.0 ? gamma_rho : least_positive_root(half_family(), {2.3, 2.5}).root;
      json j{{"command", "gamma"},
             {"paper_ref", "exponent gamma = 1/(2 + (pi rho)^-1) of the half-family bound"},
             {"rho", rho},
             {"gamma", gamma_from_rho(rho)}};
      return Artifact{render(j, default_format), kExitOk};
    };
  });

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "closed-form lower bounds for F(T;H)");
  int theorem = 1;
  double loglogH = 0.0;
  double lnH = 0.0;
  TheoremInputs tin;
  bound_cmd->add_option("--theorem", theorem, "1, 2, 3 or 4")->required();
  bound_cmd->add_option("--loglogH", loglogH, "ln ln H");
  bound_cmd->add_option("--lnH", lnH, "ln H (alternative to --loglogH)");
  bound_cmd->add_option("--m", tin.m, "power-family index")->capture_default_str();
  bound_cmd->add_option("--epsilon", tin.epsilon, "epsilon in (0, 0.1]")->capture_default_str();
  bound_cmd->add_option("--c", tin.c, "positive constant of the second bound")->capture_default_str();
  bound_cmd->add_option("--rho", tin.rho, "root for the third bound; computed when omitted");
  bound_cmd->callback([&] {
    action = [&] {
      LogLogHeight h{loglogH};
      if (lnH > 0.0) h.value = std::log(lnH);
      if (theorem == 3 && !(tin.rho > 0.0)) tin.rho = least_positive_root(half_family(), {2.3, 2.5}).root;
      const TheoremBound b = theorem_bound(theorem, tin, h);
      static const char* refs[] = {"", "power-family bound exp(0.05 sqrt(ln H)/(2m lnln H)^m)",
                                   "rational-family bound exp(sqrt(ln H) exp(-c (lnln H)^(1-eps/2)))",
                                   "half-family bound exp((ln H)^(gamma-eps))",
                                   "double-exponential bound exp(0.5 exp((lnln H)^(eps/2)))"};
      json j{{"command", "bound"},
             {"paper_ref", refs[theorem]},
             {"theorem", theorem},
             {"loglogH", h.value},
             {"m", tin.m},
             {"epsilon", tin.epsilon},
             {"c", tin.c},
             {"rho", tin.rho},
             {"log_value", b.log_value},
             {"value", b.value},
             {"conditional", b.conditional},
             {"condition", b.condition}};
      return Artifact{render(j, default_format), kExitOk};
    };
  });

  // theorem-a
  auto* ta_cmd = app.add_subcommand("theorem-a", "solve the parameter equations and evaluate mu");
  std::string ta_family = "gaussian";
  double ta_alpha = 1.0;
  double ta_loglogH = 10.0;
  std::string ta_mode = "full";
  double ta_delta = 0.1;
  std::string ta_corollary;
  ta_cmd->add_option("--family", ta_family, "test function")->capture_default_str();
  ta_cmd->add_option("--alpha", ta_alpha, "alpha > 0")->capture_default_str();
  ta_cmd->add_option("--loglogH", ta_loglogH, "ln ln H")->capture_default_str();
  ta_cmd->add_option("--mode", ta_mode, "full or half")->check(CLI::IsMember({"full", "half"}))->capture_default_str();
  ta_cmd->add_option("--delta", ta_delta, "log-decay envelope parameter")->capture_default_str();
  ta_cmd->add_option("--corollary", ta_corollary, "corollary or proof_end: use the root-based variant")
      ->check(CLI::IsMember({"corollary", "proof_end"}));
  ta_cmd->callback([&] {
    action = [&] {
      const TestFunction f = TestFunction::parse(ta_family);
      const DecayEnvelope env = envelope_for(f, ta_delta);
      const BoundMode mode = ta_mode == "full" ? BoundMode::full : BoundMode::half;
      FourierCache cache;
      json j;
      if (!ta_corollary.empty()) {
        const double rho = least_positive_root(f, {2.3, 2.5}).root;
        const CorollaryPreset preset =
            ta_corollary == "corollary" ? CorollaryPreset::corollary : CorollaryPreset::proof_end;
        const CorollaryParams c = corollary_bound(env, rho, LogLogHeight{ta_loglogH}, mode, preset, cache);
        j = {{"command", "theorem-a"},
             {"paper_ref", "root-based variant of the general large-value bound"},
             {"family", c.family},
             {"mode", to_string(c.mode)},
             {"preset", to_string(c.preset)},
             {"rho", c.rho},
             {"derivative_at_rho", c.derivative_at_rho},
             {"derivative_err", c.derivative_err},
             {"transform_zero", c.transform_zero},
             {"kappa", c.kappa},
             {"tau", c.tau},
             {"tau_residual", c.tau_residual},
             {"alpha_effective", c.alpha_effective},
             {"mu", c.mu},
             {"log_mu", c.log_mu},
             {"loglogH", c.H.value},
             {"valid", c.valid},
             {"reason", c.reason},
             {"mu_tau_power", mode == BoundMode::full ? 2.0 : 1.5}};
      } else {
        j = bound_json(theorem_a_bound(env, ta_alpha, LogLogHeight{ta_loglogH}, mode, cache));
        j["command"] = "theorem-a";
        j["paper_ref"] = "general large-value bound from a test function with decaying transform";
      }
      j["defaults"] = {{"delta", ta_delta}, {"kappa_reading", "4/alpha in place of the self-referential 4/kappa"}};
      return Artifact{render(j, default_format), kExitOk};
    };
  });

  // verify-decay
  auto* vd_cmd = app.add_subcommand("verify-decay", "check transform values against a decay envelope");
  std::string vd_family = "power:m=2";
  double vd_delta = 0.1;
  double vd_min = -1.0;
  double vd_max = 100.0;
  double vd_step = 1.0;
  vd_cmd->add_option("--family", vd_family, "test function")->capture_default_str();
  vd_cmd->add_option("--delta", vd_delta, "log-decay envelope parameter")->capture_default_str();
  vd_cmd->add_option("--lambda-min", vd_min, "first grid point; default the recorded onset");
  vd_cmd->add_option("--lambda-max", vd_max, "last grid point")->capture_default_str();
  vd_cmd->add_option("--step", vd_step, "grid spacing")->capture_default_str();
  vd_cmd->callback([&] {
    default_format = Format::csv;
    action = [&] {
      const TestFunction f = TestFunction::parse(vd_family);
      const DecayEnvelope env = envelope_for(f, vd_delta);
      if (!(vd_step > 0.0)) throw DomainError("--step must be positive");
      const double start = vd_min >= 0.0 ? vd_min : env.lambda0();
      std::vector<double> grid;
      for (double l = start; l <= vd_max + 1e-9; l += vd_step) grid.push_back(l);
      const DecayReport rep = verify_decay(f, env, grid);
      std::vector<std::vector<std::string>> rows;
      json points = json::array();
      for (const auto& p : rep.points) {
        const double t_abs = std::exp(p.log_transform_abs);
        const double e = std::exp(p.log_envelope);
        rows.push_back({fmt(p.lambda), fmt(t_abs), fmt(e), fmt(p.ratio), to_string(p.status),
                        fmt(p.log_transform_abs), fmt(p.log_envelope)});
        points.push_back({{"lambda", p.lambda}, {"transform_abs", t_abs}, {"envelope", e}, {"ratio", p.ratio},
                          {"status", to_string(p.status)}, {"log_transform_abs", p.log_transform_abs},
                          {"log_envelope", p.log_envelope}});
      }
      const int status = rep.failures > 0 ? kExitError : kExitOk;
      if (format_name == "json") {
        json j{{"command", "verify-decay"},
               {"paper_ref", "decay envelopes of the transforms of the power, rational and half families"},
               {"family", f.to_string()},
               {"envelope", env.name()},
               {"lambda0", env.lambda0()},
               {"failures", rep.failures},
               {"skipped", rep.skipped},
               {"points", points}};
        return Artifact{j.dump(2) + "\n", status};
      }
      return Artifact{csv({"lambda", "transform_abs", "envelope", "ratio", "status", "log_transform_abs",
                           "log_envelope"},
                          rows),
                      status};
    };
  });

  // mertens
  auto* me_cmd = app.add_subcommand("mertens", "normalised error of the prime reciprocal sum");
  double me_x = 0.0;
  double me_min = 10.0;
  double me_max = 1e6;
  int me_points = 20;
  me_cmd->add_option("--x", me_x, "single point");
  me_cmd->add_option("--x-min", me_min, "geometric grid start")->capture_default_str();
  me_cmd->add_option("--x-max", me_max, "geometric grid end")->capture_default_str();
  me_cmd->add_option("--points", me_points, "grid points")->capture_default_str();
  me_cmd->callback([&] {
    default_format = Format::csv;
    action = [&] {
      std::vector<double> xs;
      if (me_x > 0.0) {
        xs.push_back(me_x);
      } else {
        if (me_points < 2 || !(me_min >= 2.0) || !(me_max > me_min)) throw DomainError("need 2 <= x-min < x-max and points >= 2");
        for (int i = 0; i < me_points; ++i) xs.push_back(me_min * std::pow(me_max / me_min, i / (me_points - 1.0)));
      }
      double top = 0.0;
      for (double x : xs) top = std::max(top, x);
      if (!(top >= 2.0)) throw DomainError("mertens requires x >= 2");
      const PrimeTable table = load_primes(static_cast<std::uint64_t>(std::ceil(top)));
      std::vector<std::vector<std::string>> rows;
      json arr = json::array();
      bool all_inside = true;
      for (double x : xs) {
        const double th = mertens_theta(table, x);
        const bool inside = th > -0.5 && th < 1.0;
        all_inside = all_inside && inside;
        const double sum = static_cast<double>(table.reciprocal_sum(x));
        rows.push_back({fmt(x), fmt(sum), fmt(th), inside ? "true" : "false"});
        arr.push_back({{"x", x}, {"sum", sum}, {"theta", th}, {"inside_band", inside}});
      }
      if (format_name == "json") {
        json j{{"command", "mertens"},
               {"paper_ref", "sum_{p<=x} 1/p = lnln x + Mertens constant + theta/ln^2 x with -0.5 < theta < 1"},
               {"mertens_constant", static_cast<double>(kMertensConstant)},
               {"rows", arr},
               {"all_inside_band", all_inside}};
        return Artifact{j.dump(2) + "\n", kExitOk};
      }
      return Artifact{csv({"x", "sum", "theta", "inside_band"}, rows), kExitOk};
    };
  });

  // prime-upper
  auto* pu_cmd = app.add_subcommand("prime-upper", "n-th prime upper bound n(ln n + lnln n)");
  std::uint64_t pu_n = 0;
  std::uint64_t pu_nmax = 0;
  pu_cmd->add_option("--n", pu_n, "single index");
  pu_cmd->add_option("--n-max", pu_nmax, "check every 6 <= n <= n-max");
  pu_cmd->callback([&] {
    action = [&] {
      const std::uint64_t top = std::max(pu_n, pu_nmax);
      if (top < 6) throw DomainError("prime-upper requires n >= 6");
      const double lt = std::log(static_cast<double>(top));
      const auto limit = static_cast<std::uint64_t>(top * (lt + std::log(lt))) + 10;
      if (limit > kMaxSieveLimit) throw DomainError("n-th prime beyond the sieve limit 1e9");
      const PrimeTable table = load_primes(limit);
      json j{{"command", "prime-upper"}, {"paper_ref", "n-th prime < n(ln n + lnln n) for n >= 6"}};
      bool ok = true;
      if (pu_nmax > 0) {
        std::uint64_t failures = 0;
        double worst = 0.0;
        for (std::uint64_t n = 6; n <= pu_nmax; ++n) {
          const PrimeUpperReport r = check_prime_upper(table, n);
          if (!r.pass) ++failures;
          worst = std::max(worst, static_cast<double>(r.nth_prime) / r.bound);
        }
        ok = failures == 0;
        j["n_max"] = pu_nmax;
        j["failures"] = failures;
        j["worst_ratio"] = worst;
      } else {
        const PrimeUpperReport r = check_prime_upper(table, pu_n);
        ok = r.pass;
        j["n"] = r.n;
        j["nth_prime"] = r.nth_prime;
        j["bound"] = r.bound;
      }
      j["pass"] = ok;
      return Artifact{render(j, default_format), ok ? kExitOk : kExitError};
    };
  });

  // scan-max
  auto* sm_cmd = app.add_subcommand("scan-max", "maximum of |zeta(1/2+it)| on [T, T+H]");
  double sm_T = 0.0;
  double sm_H = 0.0;
  double sm_err = 1e-6;
  sm_cmd->add_option("--T", sm_T, "window start")->required();
  sm_cmd->add_option("--H", sm_H, "window length")->required();
  sm_cmd->add_option("--target-err", sm_err, "refinement tolerance in t")->capture_default_str();
  sm_cmd->callback([&] {
    action = [&] {
      const ScanResult r = scan_max(sm_T, sm_H, sm_err);
      json j{{"command", "scan-max"},
             {"paper_ref", "F(T;H) = max |zeta(1/2+it)| over the window [T, T+H]"},
             {"T", r.T},
             {"H", r.H},
             {"argmax_t", r.argmax_t},
             {"max_abs_zeta", r.max_abs_zeta},
             {"grid_step", r.grid_step},
             {"refined", r.refined},
             {"defaults", {{"target_err", sm_err}}}};
      return Artifact{render(j, default_format), kExitOk};
    };
  });

  // convolution
  auto* cv_cmd = app.add_subcommand("convolution", "windowed log|zeta| integral against its prime-power sum");
  std::string cv_family = "gaussian";
  double cv_tau = 2.0;
  double cv_t = 500.0;
  double cv_window = 30.0;
  double cv_tol = 1e-3;
  cv_cmd->add_option("--family", cv_family, "test function")->capture_default_str();
  cv_cmd->add_option("--tau", cv_tau, "tau >= 1")->capture_default_str();
  cv_cmd->add_option("--t", cv_t, "height")->capture_default_str();
  cv_cmd->add_option("--window", cv_window, "half-width of the integration window")->capture_default_str();
  cv_cmd->add_option("--tol", cv_tol, "tolerance driving the error budget")->capture_default_str();
  cv_cmd->callback([&] {
    action = [&] {
      const ConvolutionCheck c = convolution_check(TestFunction::parse(cv_family), cv_tau, cv_t, cv_window, cv_tol);
      json j{{"command", "convolution"},
             {"paper_ref", "convolution identity I(t) = A(t) - B(t) for ln|zeta| under RH"},
             {"family", cv_family},
             {"t", c.t},
             {"tau", c.tau},
             {"window", c.window},
             {"lhs", c.lhs},
             {"rhs_A", c.rhs_A},
             {"rhs_B", c.rhs_B},
             {"residual", c.residual},
             {"budget", c.budget},
             {"budget_parts",
              {{"lhs_quadrature", c.parts.lhs_quadrature},
               {"lhs_zeta", c.parts.lhs_zeta},
               {"lhs_tail", c.parts.lhs_tail},
               {"prime_tail", c.parts.prime_tail},
               {"prime_interp", c.parts.prime_interp},
               {"b_quadrature", c.parts.b_quadrature},
               {"rounding", c.parts.rounding}}},
             {"truncation_N", c.truncation_N},
             {"zeros_in_window", c.zeros_in_window},
             {"status", to_string(c.status)},
             {"defaults", {{"tol", cv_tol}}}};
      const int st = c.status == CheckStatus::pass ? kExitOk
                     : c.status == CheckStatus::inconclusive ? kExitInconclusive
                                                             : kExitError;
      return Artifact{render(j, default_format), st};
    };
  });

  // moments
  auto* mo_cmd = app.add_subcommand("moments", "moments of the prime Dirichlet polynomial and detection");
  std::string mo_family = "gaussian";
  double mo_tau = 2.0;
  double mo_X = 50.0;
  double mo_T = 10000.0;
  double mo_H = 200.0;
  int mo_k = 1;
  double mo_step = 0.0;
  double mo_M = 0.0;
  mo_cmd->add_option("--family", mo_family, "test function")->capture_default_str();
  mo_cmd->add_option("--tau", mo_tau, "tau > 0")->capture_default_str();
  mo_cmd->add_option("--X", mo_X, "prime cutoff")->capture_default_str();
  mo_cmd->add_option("--T", mo_T, "window start")->capture_default_str();
  mo_cmd->add_option("--H", mo_H, "window length")->capture_default_str();
  mo_cmd->add_option("--k", mo_k, "moment order 1..8")->capture_default_str();
  mo_cmd->add_option("--grid-step", mo_step, "sampling step; default pi/(2 ln X)");
  mo_cmd->add_option("--M", mo_M, "detection level; default just below (I/H)^(1/2k)");
  mo_cmd->callback([&] {
    action = [&] {
      if (!(mo_X >= 2.0)) throw DomainError("--X must be at least 2");
      const double step = mo_step > 0.0 ? mo_step : std::acos(-1.0) / (2.0 * std::log(mo_X));
      const PrimeTable table = load_primes(static_cast<std::uint64_t>(std::ceil(mo_X)));
      FourierCache cache;
      const MomentReport r = moments(table, TestFunction::parse(mo_family), mo_tau, mo_X, mo_T, mo_H, mo_k, step,
                                     cache, mo_M > 0.0 ? std::optional<double>(mo_M) : std::nullopt);
      json j{{"command", "moments"},
             {"paper_ref", "moment method: even and odd moments of the prime Dirichlet polynomial and detection"},
             {"family", mo_family},
             {"tau", mo_tau},
             {"k", r.k},
             {"X", r.X},
             {"T", r.T},
             {"H", r.H},
             {"I_k", r.I_k},
             {"J_k", r.J_k},
             {"diagonal_sum", r.diagonal_sum},
             {"distinct_bound", r.distinct_bound},
             {"diag", r.diag},
             {"M", r.M},
             {"detection", to_string(r.detection)},
             {"detected_value", r.detected_value},
             {"grid_step", step}};
      j["detected_t"] = r.detected_t ? json(*r.detected_t) : json(nullptr);
      return Artifact{render(j, default_format), kExitOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  if (!format_name.empty()) default_format = format_name == "csv" ? Format::csv : Format::json;

  try {
    const Artifact a = action();
    if (output.empty()) {
      out << a.text;
    } else {
      std::ofstream f(output);
      if (!f) throw std::runtime_error("cannot open output file " + output);
      f << a.text;
    }
    return a.status;
  } catch (const DomainError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace zetalab::cli
