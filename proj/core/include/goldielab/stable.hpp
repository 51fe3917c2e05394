#ifndef GOLDIELAB_STABLE_HPP
#define GOLDIELAB_STABLE_HPP

#include <span>

#include "goldielab/types.hpp"

namespace goldielab {

// Canonical parametrization of a continuous solution of the characteristic
// functional equation phi(t)^n = phi(a_n t) exp(i b_n t):
//
//   f(t) = log phi(t) = f1 (A t^{gamma+1} + B t)        (gamma != 0)
//        = f1 (t + kappa t log t)                        (gamma == 0)
//
// with A = kappa/gamma, B = 1 - A, alpha = gamma + 1 the characteristic
// exponent, k = 1/alpha the norming exponent. kappa is the constant of the
// multiplicative Goldie kernel K(t) = kappa (t^gamma - 1)/gamma; the constant
// of the eliminated auxiliary H~ is kappa - gamma, so the location parameter
// is lambda = i f1 (kappa - gamma), real exactly when the law is admissible.
// f1 == 0 is the representable-but-degenerate Case 1 (phi == 1).
struct StableParams {
  Complex f1{-1.0, 0.0};
  Complex kappa{0.0, 0.0};
  double gamma = 0.0;  // must satisfy gamma > -1 so alpha > 0

  double alpha() const { return gamma + 1.0; }
  double norming_exponent() const { return 1.0 / alpha(); }  // k = 1/alpha
  Complex lambda() const {
    return Complex{0.0, 1.0} * f1 * (kappa - Complex{gamma, 0.0});
  }
  bool degenerate() const { return f1 == Complex{0.0, 0.0}; }
};

// The Pitman-style parametrization: f(1) = -c + i y with c > 0,
// lambda the (real) location-growth constant, alpha the characteristic
// exponent.
struct PitmanParams {
  double c = 1.0;
  double y = 0.0;
  double lambda = 0.0;
  double alpha = 1.0;
};

// Norming/location constants of step n: a_n = n^k and b_n with
// b_n = lambda (n - n^k)/gamma, continued to lambda n log n at gamma = 0.
struct NormingConstants {
  int n = 1;
  double a_n = 1.0;
  Complex b_n{0.0, 0.0};
};

enum class Triviality { trivial_zero, trivial_unimodular, nontrivial };

struct ExponentIdentification {
  double k = 0.0;
  double mult_residual = 0.0;  // worst relative CEE violation over pairs
};

// Conversions. from_pitman: f1 = -c + iy, gamma = alpha - 1,
// kappa = gamma - i lambda / f1. to_pitman is its inverse; it rejects
// parameters whose derived lambda has |Im lambda| > tol (inadmissible) or
// Re f1 >= 0 (c > 0 violated).
StableParams from_pitman(const PitmanParams& q);
PitmanParams to_pitman(const StableParams& p, double tol = 1e-9);

// f(t) = log phi(t) for t > 0 (rejects t <= 0; use cf for the full line).
Complex log_cf(const StableParams& p, double t);

// phi(t) = exp(f(t)) for t > 0, phi(0) = 1, phi(-t) = conj(phi(t)).
// For parameters far outside the admissible family Re f(t) may exceed the
// double exponent range; the result then follows IEEE semantics (0 or inf).
Complex cf(const StableParams& p, double t);

// Norming and location constants for n >= 1. b_1 = 0 exactly; Im(b_n) == 0
// whenever Im(lambda) == 0.
NormingConstants norming(const StableParams& p, int n);

// b_n / n; converges to lambda log n as gamma -> 0.
Complex gamma_pitman(const StableParams& p, int n);

// Log-domain residual n f(t) - f(a_n t) - i b_n t, identically zero for
// every StableParams. Evaluated in extended precision internally: the terms
// reach ~1e18 for gamma near -1, n = 50 and the returned residual must still
// resolve below 1e-9.
Complex chfe_residual(const StableParams& p, int n, double t);

// Exponential-domain cross-check phi(t)^n - phi(a_n t) e^{i b_n t}.
// Branch-free (no logarithms taken) but magnitude-limited: for extreme
// parameters phi underflows/overflows and the check is uninformative.
Complex chfe_residual_exp(const StableParams& p, int n, double t);

// Identify k from a norming sequence a_1..a_N (a[0] is a_1). Requires
// N >= 3, a_1 = 1 and a_{mn} = a_m a_n within mult_tol (relative), then
// returns the least-squares slope of log a_n on log n (n >= 2, through the
// origin). Throws NotANormingSequenceError on a CEE violation and
// DegenerateSolutionError when |k| < k_tol (the excluded a_n == 1 case).
ExponentIdentification identify_exponent(std::span<const double> a,
                                         double mult_tol = 1e-9,
                                         double k_tol = 1e-9);

// True iff max over grid of | |phi(c t)| - |phi(t)| | <= tol. For
// non-trivial parameters this holds only at c = 1.
bool modulus_scale_invariance(const StableParams& p, double c,
                              std::span<const double> grid, double tol);

// trivial_unimodular iff |phi| == 1 on a fixed probe grid (includes the
// degenerate Case 1, f1 = 0). trivial_zero is unreachable for the
// closed-form family (phi has no zeros on the positive half-line) but the
// classification is retained for samples-based input.
Triviality classify_triviality(const StableParams& p);

}  // namespace goldielab

#endif  // GOLDIELAB_STABLE_HPP
