#include "goldielab/beurling.hpp"

#include <cmath>
#include <vector>

#include "goldielab/reduction.hpp"

#include "bigfloat.hpp"

namespace goldielab {

namespace {

void validate_schedule(const GrowthSchedule& s) {
  if (!(s.x0 > 0.0) || !(s.factor > 1.0) || s.steps < 3 || !(s.tol > 0.0))
    throw std::invalid_argument(
        "GrowthSchedule requires x0 > 0, factor > 1, steps >= 3, tol > 0");
}

// Drives a scalar sequence q(x_j) along the schedule until the last three
// values agree pairwise within schedule.tol.
template <typename Step>
LimitEstimate run_limit(double t, const GrowthSchedule& schedule, Step step,
                        long& evaluations) {
  validate_schedule(schedule);
  LimitEstimate est;
  est.t = t;
  double x = schedule.x0;
  double prev = 0.0, prev2 = 0.0;
  int have = 0;
  for (int j = 0; j < schedule.steps; ++j, x *= schedule.factor) {
    const double q = step(x);
    if (!std::isfinite(q))
      throw std::invalid_argument("limit sequence left the finite range");
    est.value = Complex{q, 0.0};
    if (have >= 1) est.error_bound = std::abs(q - prev);
    if (have >= 2 && std::abs(q - prev) <= schedule.tol &&
        std::abs(prev - prev2) <= schedule.tol) {
      est.converged = true;
      break;
    }
    prev2 = prev;
    prev = q;
    have = std::min(have + 1, 2);
  }
  est.evaluations = evaluations;
  return est;
}

double parse_tail_value(const std::string& name, std::size_t colon,
                        double fallback, bool required) {
  if (colon == std::string::npos) {
    if (required)
      throw std::invalid_argument("function '" + name + "' needs a parameter");
    return fallback;
  }
  const std::string tail = name.substr(colon + 1);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tail, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad parameter in function name '" + name + "'");
  }
  if (used != tail.size() || !std::isfinite(v))
    throw std::invalid_argument("bad parameter in function name '" + name + "'");
  return v;
}

}  // namespace

Complex eta_rho(const Complex& rho, double t) {
  if (!is_finite(rho) || !is_finite(t))
    throw std::invalid_argument("eta_rho requires finite arguments");
  return 1.0 + rho * t;
}

Complex bfe_residual(const Complex& rho, double u, double v) {
  if (!is_finite(rho) || !is_finite(u) || !is_finite(v))
    throw std::invalid_argument("bfe_residual requires finite arguments");
  using namespace detail;
  const BigComplex r = to_big(rho);
  const BigComplex eu = BigReal(1) + r * BigReal(u);
  const BigComplex arg = BigReal(u) + BigReal(v) * eu;
  const BigComplex lhs = BigReal(1) + r * arg;
  const BigComplex rhs = eu * (BigReal(1) + r * BigReal(v));
  return to_double(lhs - rhs);
}

Complex circle_op(const CircleRho& g, const Complex& a, const Complex& b) {
  if (!is_finite(a) || !is_finite(b))
    throw std::invalid_argument("circle_op requires finite arguments");
  if (1.0 + g.rho * a == Complex{0.0, 0.0} ||
      1.0 + g.rho * b == Complex{0.0, 0.0})
    throw std::domain_error("circle_op: argument outside the carrier C_rho");
  return a + b + g.rho * a * b;
}

Complex circle_inverse(const CircleRho& g, const Complex& a) {
  if (!is_finite(a))
    throw std::invalid_argument("circle_inverse requires a finite argument");
  const Complex denom = 1.0 + g.rho * a;
  if (denom == Complex{0.0, 0.0})
    throw std::domain_error("circle_inverse: argument outside the carrier C_rho");
  return -a / denom;
}

Complex homomorphism_residual(const StableParams& p, double s, double t) {
  if (!(s > 0.0) || !(t > 0.0))
    throw std::invalid_argument("homomorphism_residual requires s, t > 0");
  const ReducedSystem r = reduce(p);
  using namespace detail;
  const BigComplex g(BigReal(r.gamma));
  const BigComplex kc = to_big(r.k_const);
  const BigReal bs(s), bt(t);
  const BigComplex Kst = kc * pow_ratio_big(g, bs * bt);
  const BigComplex Ks = kc * pow_ratio_big(g, bs);
  const BigComplex Kt = kc * pow_ratio_big(g, bt);
  if (r.gamma == 0.0 || is_zero(kc)) {
    // K maps logarithmically into (C, +); the circle structure degenerates.
    return to_double(Kst - Ks - Kt);
  }
  const BigComplex rho = g / kc;
  return to_double(Kst - (Ks + Kt + rho * Ks * Kt));
}

LimitEstimate estimate_eta(const RealFn& phi, double t,
                           const GrowthSchedule& schedule) {
  long evals = 0;
  auto step = [&](double x) {
    const double px = phi(x);
    ++evals;
    if (!(px > 0.0) || !std::isfinite(px))
      throw std::invalid_argument("estimate_eta: phi must be positive on the schedule");
    const double shifted = phi(x + t * px);
    ++evals;
    if (!(shifted > 0.0) || !std::isfinite(shifted))
      throw std::invalid_argument("estimate_eta: phi must be positive on the schedule");
    return shifted / px;
  };
  return run_limit(t, schedule, step, evals);
}

LimitEstimate beurling_kernel(const RealFn& F, const RealFn& phi, double t,
                              const GrowthSchedule& schedule) {
  long evals = 0;
  auto step = [&](double x) {
    const double px = phi(x);
    ++evals;
    if (!std::isfinite(px))
      throw std::invalid_argument("beurling_kernel: phi left the finite range");
    const double fa = F(x + t * px);
    const double fb = F(x);
    evals += 2;
    return fa - fb;
  };
  return run_limit(t, schedule, step, evals);
}

bool is_self_neglecting(const RealFn& phi, std::span<const double> t_grid,
                        double tol, const GrowthSchedule& schedule) {
  validate_schedule(schedule);
  if (t_grid.empty())
    throw std::invalid_argument("is_self_neglecting requires a non-empty grid");
  for (double t : t_grid) {
    const LimitEstimate e = estimate_eta(phi, t, schedule);
    if (std::abs(e.value - Complex{1.0, 0.0}) > tol + e.error_bound)
      return false;
  }
  // o(x) surrogate: phi(x)/x strictly decreasing over the schedule tail and
  // at least halved overall.
  std::vector<double> ratio;
  ratio.reserve(schedule.steps);
  double x = schedule.x0;
  for (int j = 0; j < schedule.steps; ++j, x *= schedule.factor) {
    const double px = phi(x);
    if (!(px > 0.0) || !std::isfinite(px))
      throw std::invalid_argument("is_self_neglecting: phi must be positive");
    ratio.push_back(px / x);
  }
  const std::size_t window = std::min<std::size_t>(5, ratio.size() - 1);
  for (std::size_t i = ratio.size() - window; i < ratio.size(); ++i)
    if (!(ratio[i] < ratio[i - 1])) return false;
  return ratio.back() <= 0.5 * ratio.front();
}

KernelFit fit_kernel(std::span<const LimitEstimate> estimates, double fit_tol) {
  if (estimates.size() < 3)
    throw std::invalid_argument("fit_kernel requires at least 3 estimates");
  std::vector<GoldieSample> samples;
  samples.reserve(estimates.size());
  for (const LimitEstimate& e : estimates) {
    if (!e.converged)
      throw std::invalid_argument("fit_kernel: unconverged estimate rejected");
    samples.push_back(GoldieSample{e.t, e.value});
  }
  const GoldieFit fit = fit_goldie(samples, fit_tol);

  KernelFit out;
  out.params = fit.params;
  out.max_residual = fit.max_residual;
  out.trivial = fit.trivial;
  out.consistent = true;
  for (const LimitEstimate& e : estimates) {
    const double res = std::abs(kappa_eval(fit.params, e.t) - e.value);
    const double allowance = e.error_bound + 1e-10 * (1.0 + std::abs(e.value));
    if (res > allowance) out.consistent = false;
  }
  return out;
}

RealFn make_base_function(const std::string& name) {
  const std::size_t colon = name.find(':');
  const std::string head = name.substr(0, colon);
  if (head == "linear") {
    const double c = parse_tail_value(name, colon, 1.0, false);
    return [c](double x) { return c * x; };
  }
  if (head == "log") return [](double x) { return std::log(x); };
  if (head == "power") {
    const double p = parse_tail_value(name, colon, 1.0, true);
    return [p](double x) { return std::pow(x, p); };
  }
  throw std::invalid_argument("unknown base function '" + name +
                              "' (expected linear:c, log, power:p)");
}

RealFn make_aux_function(const std::string& name) {
  const std::size_t colon = name.find(':');
  const std::string head = name.substr(0, colon);
  if (head == "const") {
    const double c = parse_tail_value(name, colon, 1.0, false);
    return [c](double) { return c; };
  }
  if (head == "identity") return [](double x) { return x; };
  if (head == "sqrt") return [](double x) { return std::sqrt(x); };
  if (head == "reciprocal") return [](double x) { return 1.0 / x; };
  if (head == "x-over-log") return [](double x) { return x / std::log(x); };
  throw std::invalid_argument(
      "unknown auxiliary function '" + name +
      "' (expected const:c, identity, sqrt, reciprocal, x-over-log)");
}

}  // namespace goldielab
