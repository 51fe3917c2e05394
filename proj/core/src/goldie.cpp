#include "goldielab/goldie.hpp"

#include <algorithm>
#include <cmath>

#include "bigfloat.hpp"

namespace goldielab {

namespace {

// e^z - 1 without cancellation for small |z|:
// Re = expm1(a) cos b - 2 sin^2(b/2), Im = e^a sin b.
Complex expm1c(const Complex& z) {
  const double a = z.real();
  const double b = z.imag();
  const double sh = std::sin(0.5 * b);
  return Complex{std::expm1(a) * std::cos(b) - 2.0 * sh * sh,
                 std::exp(a) * std::sin(b)};
}

void require_finite(double x, const char* what) {
  if (!is_finite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

Complex h_gamma(const Complex& gamma0, double x) {
  require_finite(x, "x");
  if (!is_finite(gamma0)) throw std::invalid_argument("gamma0 must be finite");
  if (std::abs(gamma0) < kEpsSwitch) {
    // x + g x^2/2 + g^2 x^3/6; truncation stays below the cancellation
    // error of the closed form at the switch point.
    const Complex gx = gamma0 * x;
    return x * (1.0 + gx / 2.0 * (1.0 + gx / 3.0));
  }
  return expm1c(gamma0 * x) / gamma0;
}

Complex kappa_eval(const GoldieParams& p, double x) {
  if (p.kappa0 == Complex{0.0, 0.0}) return {0.0, 0.0};
  return p.kappa0 * h_gamma(p.gamma0, x);
}

Complex gamma_aux_eval(const GoldieParams& p, double x) {
  require_finite(x, "x");
  return std::exp(p.gamma0 * x);
}

Complex gfe_residual(const GoldieParams& p, double x, double y) {
  require_finite(x, "x");
  require_finite(y, "y");
  using namespace detail;
  const BigComplex k0 = to_big(p.kappa0);
  const BigComplex g0 = to_big(p.gamma0);
  const BigReal bx(x), by(y);
  const BigComplex lhs = k0 * h_gamma_big(g0, bx + by);
  const BigComplex rhs =
      k0 * h_gamma_big(g0, bx) + exp(g0 * bx) * (k0 * h_gamma_big(g0, by));
  return to_double(lhs - rhs);
}

Complex gfe_mult_residual(const GoldieParams& p, double s, double t) {
  if (!(s > 0.0) || !(t > 0.0))
    throw std::invalid_argument("gfe_mult_residual requires s > 0 and t > 0");
  using namespace detail;
  const BigComplex k0 = to_big(p.kappa0);
  const BigComplex g0 = to_big(p.gamma0);
  const BigReal bs(s), bt(t);
  const BigComplex lhs = k0 * pow_ratio_big(g0, bs * bt);
  const BigComplex rhs =
      k0 * pow_ratio_big(g0, bs) + pow_big(bs, g0) * (k0 * pow_ratio_big(g0, bt));
  return to_double(lhs - rhs);
}

GoldieFit fit_goldie(std::span<const GoldieSample> samples, double fit_tol) {
  if (samples.size() < 3)
    throw std::invalid_argument("fit_goldie requires at least 3 samples");
  const double h = samples[0].x;
  if (!(h > 0.0)) throw std::invalid_argument("sample grid must start at h > 0");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!is_finite(samples[i].x) || !is_finite(samples[i].value))
      throw std::invalid_argument("samples must be finite");
    const double expected = static_cast<double>(i + 1) * h;
    if (std::abs(samples[i].x - expected) > 1e-9 * std::max(1.0, expected))
      throw std::invalid_argument("samples must lie on the uniform grid h, 2h, 3h, ...");
  }

  const bool all_zero = std::all_of(
      samples.begin(), samples.end(),
      [](const GoldieSample& s) { return s.value == Complex{0.0, 0.0}; });
  if (all_zero) return GoldieFit{GoldieParams{}, 0.0, true};

  const Complex k_h = samples[0].value;
  const Complex k_2h = samples[1].value;
  if (k_h == Complex{0.0, 0.0})
    throw std::invalid_argument("ill-posed samples: kappa(h) = 0 with nonzero data");

  GoldieParams fit;
  const Complex ratio = k_2h / k_h;  // = e^{gamma0 h} + 1
  if (std::abs(ratio - 2.0) < fit_tol) {
    fit.gamma0 = {0.0, 0.0};
    fit.kappa0 = k_h / h;
  } else {
    const Complex growth = ratio - 1.0;
    if (growth == Complex{0.0, 0.0})
      throw std::invalid_argument("ill-posed samples: kappa(2h)/kappa(h) = 1");
    fit.gamma0 = std::log(growth) / h;  // principal branch; |Im gamma0| h < pi
    fit.kappa0 = k_h / h_gamma(fit.gamma0, h);
  }

  double max_res = 0.0;
  for (const GoldieSample& s : samples)
    max_res = std::max(max_res, std::abs(kappa_eval(fit, s.x) - s.value));
  return GoldieFit{fit, max_res, false};
}

}  // namespace goldielab
