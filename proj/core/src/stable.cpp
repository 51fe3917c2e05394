#include "goldielab/stable.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bigfloat.hpp"

namespace goldielab {

namespace {

constexpr Complex kI{0.0, 1.0};

// (t^g - 1)/g for real g and t > 0, continued to log t at g = 0.
// expm1 keeps the quotient stable uniformly in g.
double pow_ratio(double g, double log_t) {
  if (g == 0.0) return log_t;
  return std::expm1(g * log_t) / g;
}

void validate(const StableParams& p) {
  if (!is_finite(p.f1) || !is_finite(p.kappa) || !is_finite(p.gamma))
    throw std::invalid_argument("StableParams must be finite");
  if (!(p.gamma > -1.0))
    throw std::invalid_argument("StableParams requires gamma > -1 (alpha > 0)");
}

// Real scale factor (n - n^k)/gamma, continued to n log n at gamma = 0.
// b_n = lambda * this, so Im(b_n) vanishes exactly when Im(lambda) does.
double location_factor(const StableParams& p, int n) {
  if (n == 1) return 0.0;
  const double g = p.gamma;
  const double log_n = std::log(static_cast<double>(n));
  if (std::abs(g) >= kEpsSwitch) {
    const double a_n = std::pow(static_cast<double>(n), p.norming_exponent());
    return (static_cast<double>(n) - a_n) / g;
  }
  // n - n^k = -n expm1(u), u = (k-1) log n = -g log n / (1+g).
  const double u = -g * log_n / (1.0 + g);
  const double ratio = (u == 0.0) ? 1.0 : std::expm1(u) / u;
  return static_cast<double>(n) * log_n * ratio / (1.0 + g);
}

detail::BigComplex log_cf_big(const detail::BigComplex& f1,
                              const detail::BigComplex& kappa,
                              const detail::BigReal& gamma,
                              const detail::BigReal& t) {
  using namespace detail;
  const BigComplex g(gamma);
  return f1 * t * (BigReal(1) + kappa * pow_ratio_big(g, t));
}

}  // namespace

StableParams from_pitman(const PitmanParams& q) {
  if (!(q.c > 0.0)) throw std::invalid_argument("PitmanParams requires c > 0");
  if (!(q.alpha > 0.0))
    throw std::invalid_argument("PitmanParams requires alpha > 0");
  if (!is_finite(q.y) || !is_finite(q.lambda) || !is_finite(q.c) ||
      !is_finite(q.alpha))
    throw std::invalid_argument("PitmanParams must be finite");
  StableParams p;
  p.f1 = Complex{-q.c, q.y};
  p.gamma = q.alpha - 1.0;
  p.kappa = Complex{p.gamma, 0.0} + (-kI * q.lambda) / p.f1;
  return p;
}

PitmanParams to_pitman(const StableParams& p, double tol) {
  validate(p);
  if (!(p.f1.real() < 0.0))
    throw std::domain_error("to_pitman: Re f(1) must be negative (c > 0)");
  const Complex lam = p.lambda();
  if (std::abs(lam.imag()) > tol)
    throw std::domain_error(
        "to_pitman: inadmissible parameters (lambda is not real)");
  return PitmanParams{-p.f1.real(), p.f1.imag(), lam.real(), p.alpha()};
}

Complex log_cf(const StableParams& p, double t) {
  validate(p);
  if (!(t > 0.0)) throw std::invalid_argument("log_cf requires t > 0 (use cf)");
  return p.f1 * t * (1.0 + p.kappa * pow_ratio(p.gamma, std::log(t)));
}

Complex cf(const StableParams& p, double t) {
  if (!is_finite(t)) throw std::invalid_argument("cf requires finite t");
  if (t == 0.0) return {1.0, 0.0};
  if (t < 0.0) return std::conj(cf(p, -t));
  return std::exp(log_cf(p, t));
}

NormingConstants norming(const StableParams& p, int n) {
  validate(p);
  if (n < 1) throw std::invalid_argument("norming requires n >= 1");
  NormingConstants c;
  c.n = n;
  c.a_n = std::pow(static_cast<double>(n), p.norming_exponent());
  c.b_n = p.lambda() * location_factor(p, n);
  return c;
}

Complex gamma_pitman(const StableParams& p, int n) {
  return norming(p, n).b_n / static_cast<double>(n);
}

Complex chfe_residual(const StableParams& p, int n, double t) {
  validate(p);
  if (n < 1) throw std::invalid_argument("chfe_residual requires n >= 1");
  if (!(t > 0.0)) throw std::invalid_argument("chfe_residual requires t > 0");
  using namespace detail;
  const BigComplex f1 = to_big(p.f1);
  const BigComplex kappa = to_big(p.kappa);
  const BigReal gamma(p.gamma);
  const BigReal bn(n), bt(t);

  const BigReal k = BigReal(1) / (gamma + 1);
  const BigReal a_n = exp(k * log(bn));
  BigComplex b_n;
  const BigComplex lambda = BigComplex(0, 1) * f1 * (kappa - BigComplex(gamma));
  if (p.gamma == 0.0) {
    b_n = lambda * bn * log(bn);
  } else {
    b_n = lambda * ((bn - a_n) / gamma);
  }
  const BigComplex res = bn * log_cf_big(f1, kappa, gamma, bt) -
                         log_cf_big(f1, kappa, gamma, a_n * bt) -
                         BigComplex(0, 1) * b_n * bt;
  return to_double(res);
}

Complex chfe_residual_exp(const StableParams& p, int n, double t) {
  if (n < 1) throw std::invalid_argument("chfe_residual_exp requires n >= 1");
  if (!(t > 0.0))
    throw std::invalid_argument("chfe_residual_exp requires t > 0");
  // phi(t)^n by binary exponentiation: multiplicative, so no logarithms and
  // no branch choices enter.
  Complex pow_n{1.0, 0.0};
  Complex base = cf(p, t);
  for (int m = n; m > 0; m >>= 1) {
    if (m & 1) pow_n *= base;
    base *= base;
  }
  const NormingConstants c = norming(p, n);
  return pow_n - cf(p, c.a_n * t) * std::exp(kI * c.b_n * t);
}

ExponentIdentification identify_exponent(std::span<const double> a,
                                         double mult_tol, double k_tol) {
  const std::size_t N = a.size();
  if (N < 3) throw std::invalid_argument("identify_exponent requires N >= 3");
  for (double v : a)
    if (!is_finite(v) || !(v > 0.0))
      throw std::invalid_argument("norming sequence entries must be positive");
  if (std::abs(a[0] - 1.0) > mult_tol)
    throw std::invalid_argument("norming sequence must have a_1 = 1");

  double worst = 0.0;
  for (std::size_t m = 2; m * 2 <= N; ++m)
    for (std::size_t n = m; m * n <= N; ++n)
      worst = std::max(worst, std::abs(a[m * n - 1] - a[m - 1] * a[n - 1]) /
                                  a[m * n - 1]);
  if (worst > mult_tol)
    throw NotANormingSequenceError(
        "sequence violates a_mn = a_m a_n (worst relative deviation " +
        std::to_string(worst) + ")");

  // log a_n = k log n has no intercept (a_1 = 1), so least squares through
  // the origin.
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t n = 2; n <= N; ++n) {
    const double x = std::log(static_cast<double>(n));
    sxy += x * std::log(a[n - 1]);
    sxx += x * x;
  }
  const double k = sxy / sxx;
  if (std::abs(k) < k_tol)
    throw DegenerateSolutionError(
        "degenerate norming sequence (k = 0; phi would be trivial)");
  return ExponentIdentification{k, worst};
}

bool modulus_scale_invariance(const StableParams& p, double c,
                              std::span<const double> grid, double tol) {
  if (!(c > 0.0))
    throw std::invalid_argument("modulus_scale_invariance requires c > 0");
  if (grid.empty())
    throw std::invalid_argument("modulus_scale_invariance requires a non-empty grid");
  double worst = 0.0;
  for (double t : grid)
    worst = std::max(worst, std::abs(std::abs(cf(p, c * t)) - std::abs(cf(p, t))));
  return worst <= tol;
}

Triviality classify_triviality(const StableParams& p) {
  validate(p);
  double max_mod = 0.0, max_dev = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double m = std::abs(cf(p, 0.1 * j));
    max_mod = std::max(max_mod, m);
    max_dev = std::max(max_dev, std::abs(m - 1.0));
  }
  if (max_mod <= 1e-15) return Triviality::trivial_zero;
  if (max_dev <= 1e-12) return Triviality::trivial_unimodular;
  return Triviality::nontrivial;
}

}  // namespace goldielab
