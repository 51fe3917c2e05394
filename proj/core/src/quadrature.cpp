#include "goldielab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace goldielab {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Gamma via fixed Lanczos coefficients (g = 7, n = 9). Relative error is
// below 1e-13 on (0, 2), the range the Appendix formulas need.
// ---------------------------------------------------------------------------

constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_positive(double x) {
  // valid for x >= 0.5
  x -= 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i);
  const double t = x + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

// ---------------------------------------------------------------------------
// Fixed-order Gauss-Legendre with adaptive bisection. Acceptance compares a
// panel against the sum of its halves; the budget splits proportionally to
// panel length so the accumulated error stays below the requested tolerance.
// ---------------------------------------------------------------------------

constexpr double kGl15Nodes[15] = {
    -0.98799251802048542849, -0.93727339240070590431, -0.8482065834104272162,
    -0.72441773136017004742, -0.57097217260853884754, -0.3941513470775633699,
    -0.2011940939974345223,  0.0,                     0.2011940939974345223,
    0.3941513470775633699,   0.57097217260853884754,  0.72441773136017004742,
    0.8482065834104272162,   0.93727339240070590431,  0.98799251802048542849};

constexpr double kGl15Weights[15] = {
    0.030753241996117268355, 0.070366047488108124709, 0.10715922046717193501,
    0.13957067792615431445,  0.16626920581699393355,  0.18616100001556221103,
    0.19843148532711157646,  0.20257824192556127288,  0.19843148532711157646,
    0.18616100001556221103,  0.16626920581699393355,  0.13957067792615431445,
    0.10715922046717193501,  0.070366047488108124709, 0.030753241996117268355};

using Integrand = std::function<double(double)>;

double gl15(const Integrand& f, double a, double b, long& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 15; ++i)
    acc += kGl15Weights[i] * f(mid + half * kGl15Nodes[i]);
  evals += 15;
  return acc * half;
}

struct PanelEstimate {
  double value = 0.0;
  double abs_err = 0.0;
};

PanelEstimate integrate_adaptive(const Integrand& f, double a, double b,
                                 double tol, long& evals) {
  struct Segment {
    double a, b, coarse;
  };
  const double total = b - a;
  const double min_len = total * 0x1p-42;
  PanelEstimate out;
  std::vector<Segment> stack{{a, b, gl15(f, a, b, evals)}};
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (seg.a + seg.b);
    const double left = gl15(f, seg.a, mid, evals);
    const double right = gl15(f, mid, seg.b, evals);
    const double fine = left + right;
    const double err = std::abs(fine - seg.coarse);
    const double budget = tol * (seg.b - seg.a) / total;
    if (err <= budget || err <= 1e-16 * std::abs(fine) ||
        seg.b - seg.a <= min_len) {
      out.value += fine;
      out.abs_err += err;
    } else {
      stack.push_back({seg.a, mid, left});
      stack.push_back({mid, seg.b, right});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Iterated Aitken delta-squared on a sequence of partial sums. Returns the
// accelerated limit and the change at the final iteration as error estimate.
// ---------------------------------------------------------------------------

std::pair<double, double> aitken_limit(const std::vector<double>& sums,
                                       int max_depth) {
  std::vector<double> cur = sums;
  double estimate = cur.back();
  double change = std::numeric_limits<double>::infinity();
  for (int depth = 0; depth < max_depth && cur.size() >= 3; ++depth) {
    std::vector<double> next(cur.size() - 2);
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      const double d1 = cur[i + 1] - cur[i];
      const double d2 = (cur[i + 2] - cur[i + 1]) - d1;
      if (std::abs(d2) <= 1e-300 ||
          std::abs(d2) <= 1e-16 * std::abs(cur[i + 2])) {
        next[i] = cur[i + 2];
      } else {
        const double top = cur[i + 2] - cur[i + 1];
        next[i] = cur[i + 2] - top * top / d2;
      }
    }
    change = std::abs(next.back() - estimate);
    estimate = next.back();
    cur = std::move(next);
  }
  return {estimate, change};
}

// One oscillatory integral int_0^inf x^{-k} e^{-dx} trig(x) dx.
QuadratureResult oscillatory_integral(double k, double delta, double tol,
                                      bool cosine) {
  long evals = 0;
  const auto trig = [cosine](double x) {
    return cosine ? std::cos(x) : std::sin(x);
  };

  // Head [0, pi]: substitute x = u^{1/(1-k)}; the x^{-k} dx factor reduces
  // to du/(1-k) exactly and the integrand is bounded on [0, pi^{1-k}].
  const double p = 1.0 - k;
  const double inv_p = 1.0 / p;
  const Integrand head_fn = [&](double u) {
    const double x = std::pow(u, inv_p);
    return trig(x) * std::exp(-delta * x);
  };
  const PanelEstimate head =
      integrate_adaptive(head_fn, 0.0, std::pow(kPi, p), tol / 8.0, evals);

  QuadratureResult out;
  out.abs_err = head.abs_err / p;

  // Tail: half-period integrals alternate in sign with decreasing modulus;
  // the partial sums are accelerated by iterated Aitken.
  const Integrand tail_fn = [&](double x) {
    return trig(x) * std::exp(-delta * x) * std::pow(x, -k);
  };
  const double term_tol = std::min(tol / 64.0, 1e-12);
  const int max_terms = 140;
  const int max_depth = 12;

  std::vector<double> sums;
  sums.reserve(max_terms + 1);
  double running = head.value / p;
  sums.push_back(running);

  double accel = running;
  double accel_err = std::numeric_limits<double>::infinity();
  double prev_accel = running;
  int stable = 0;
  bool done = false;
  for (int m = 1; m <= max_terms; ++m) {
    const PanelEstimate term =
        integrate_adaptive(tail_fn, m * kPi, (m + 1) * kPi, term_tol, evals);
    out.abs_err += term.abs_err;
    running += term.value;
    sums.push_back(running);

    if (std::abs(term.value) <= tol / 16.0 && m >= 3) {
      // Plain truncation is already inside budget.
      accel = running;
      accel_err = std::abs(term.value);
      done = true;
      break;
    }
    if (m >= 8) {
      const auto [est, change] = aitken_limit(sums, max_depth);
      accel_err = std::abs(est - prev_accel);
      prev_accel = est;
      accel = est;
      stable = (accel_err <= tol / 4.0 && change <= tol) ? stable + 1 : 0;
      if (stable >= 2) {
        done = true;
        break;
      }
    }
  }
  out.value = Complex{accel, 0.0};
  out.abs_err += std::isfinite(accel_err) ? accel_err : 1.0;
  out.evaluations = evals;
  if (!done)
    throw QuadratureBudgetError(
        "oscillatory tail failed to stabilise within the evaluation budget",
        out);
  return out;
}

// Polynomial (Neville) extrapolation to 0; returns the tableau entry with
// the smallest successive-difference estimate.
std::pair<double, double> neville_at_zero(const std::vector<double>& xs,
                                          const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  std::vector<double> t = ys;
  double best = t[0];
  double best_err = std::numeric_limits<double>::infinity();
  double prev_diag = t[0];
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i + j < n; ++i)
      t[i] = (xs[i + j] * t[i] - xs[i] * t[i + 1]) / (xs[i + j] - xs[i]);
    const double err = std::abs(t[0] - prev_diag);
    if (err < best_err) {
      best_err = err;
      best = t[0];
    }
    prev_diag = t[0];
  }
  return {best, best_err};
}

}  // namespace

double gamma_real(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::invalid_argument("gamma_real requires x > 0");
  if (x < 0.5)
    return kPi / (std::sin(kPi * x) * lanczos_positive(1.0 - x));
  return lanczos_positive(x);
}

Complex abel_integral_closed(double k, double delta) {
  if (!(k > 0.0 && k < 1.0))
    throw std::invalid_argument("abel_integral_closed requires 0 < k < 1");
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("abel_integral_closed requires delta >= 0");
  const double theta = std::atan2(1.0, delta);  // pi/2 at delta = 0
  const double modulus =
      gamma_real(1.0 - k) * std::pow(1.0 + delta * delta, -(1.0 - k) / 2.0);
  const double phase = (1.0 - k) * theta;
  return Complex{modulus * std::cos(phase), -modulus * std::sin(phase)};
}

OscillatoryParts abel_integral_quad(double k, double delta, double tol) {
  if (!(k > 0.0 && k < 1.0))
    throw std::invalid_argument("abel_integral_quad requires 0 < k < 1");
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("abel_integral_quad requires delta >= 0");
  if (!(tol >= 1e-10))
    throw std::invalid_argument("abel_integral_quad requires tol >= 1e-10");
  return OscillatoryParts{oscillatory_integral(k, delta, tol, true),
                          oscillatory_integral(k, delta, tol, false)};
}

AbelRatioResult abel_ratio(double k, RatioMethod method) {
  if (!(k > 0.0 && k < 1.0))
    throw std::invalid_argument("abel_ratio requires 0 < k < 1");
  AbelRatioResult out;
  out.k = k;
  out.reference = std::tan(kPi * k / 2.0);
  switch (method) {
    case RatioMethod::closed: {
      const Complex v = abel_integral_closed(k, 0.0);
      out.ratio = v.real() / -v.imag();
      break;
    }
    case RatioMethod::quad: {
      const OscillatoryParts parts = abel_integral_quad(k, 0.0, 1e-9);
      out.ratio = parts.cosine.value.real() / parts.sine.value.real();
      break;
    }
    case RatioMethod::extrapolated: {
      std::vector<double> deltas, ratios;
      for (int j = 2; j <= 12; ++j) {
        const double d = std::ldexp(1.0, -j);
        const OscillatoryParts parts = abel_integral_quad(k, d, 1e-9);
        deltas.push_back(d);
        ratios.push_back(parts.cosine.value.real() / parts.sine.value.real());
      }
      out.ratio = neville_at_zero(deltas, ratios).first;
      break;
    }
  }
  out.rel_err = std::abs(out.ratio - out.reference) / std::abs(out.reference);
  return out;
}

double tail_parts_identity_check(double k, double delta, double T) {
  if (!(k > 0.0)) throw std::invalid_argument("tail_parts_identity_check requires k > 0");
  if (!(delta > 0.0))
    throw std::invalid_argument("tail_parts_identity_check requires delta > 0");
  if (!(T > 1.0)) throw std::invalid_argument("tail_parts_identity_check requires T > 1");

  // Panels split at multiples of pi so every panel holds at most one
  // half-oscillation.
  std::vector<double> nodes{1.0};
  for (int m = 1; m * kPi < T; ++m)
    if (m * kPi > 1.0) nodes.push_back(m * kPi);
  nodes.push_back(T);

  long evals = 0;
  const double panel_tol = 1e-12;
  const Integrand lhs_fn = [&](double x) {
    return std::pow(x, -k) * std::exp(-delta * x) * std::sin(x);
  };
  const double denom = 1.0 + delta * delta;
  const Integrand rem_fn = [&](double x) {
    return std::exp(-delta * x) * (delta * std::sin(x) + std::cos(x)) /
           (std::pow(x, k + 1.0) * denom);
  };

  double lhs = 0.0, remainder = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double frac = (nodes[i + 1] - nodes[i]) / (T - 1.0);
    lhs += integrate_adaptive(lhs_fn, nodes[i], nodes[i + 1],
                              panel_tol * frac, evals)
               .value;
    remainder += integrate_adaptive(rem_fn, nodes[i], nodes[i + 1],
                                    panel_tol * frac, evals)
                     .value;
  }

  const double boundary_1 =
      std::exp(-delta) * (delta * std::sin(1.0) + std::cos(1.0)) / denom;
  const double boundary_T = std::exp(-delta * T) *
                            (delta * std::sin(T) + std::cos(T)) /
                            (std::pow(T, k) * denom);
  const double rhs = boundary_1 - boundary_T - k * remainder;
  return std::abs(lhs - rhs);
}

}  // namespace goldielab
