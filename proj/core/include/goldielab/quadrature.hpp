#ifndef GOLDIELAB_QUADRATURE_HPP
#define GOLDIELAB_QUADRATURE_HPP

#include "goldielab/types.hpp"

namespace goldielab {

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  long evaluations = 0;
};

// Cosine and sine parts of int_0^inf x^{-k} e^{-dx} {cos,sin} x dx.
struct OscillatoryParts {
  QuadratureResult cosine;
  QuadratureResult sine;
};

enum class RatioMethod { closed, quad, extrapolated };

struct AbelRatioResult {
  double k = 0.5;
  double ratio = 0.0;
  double reference = 0.0;  // tan(pi k / 2)
  double rel_err = 0.0;
};

// Raised when the tail acceleration fails to stabilise within the
// evaluation budget; carries the partial estimate.
class QuadratureBudgetError : public std::runtime_error {
 public:
  QuadratureBudgetError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial(partial) {}
  QuadratureResult partial;
};

// Gamma function for real x > 0 via fixed Lanczos coefficients shipped
// in-repo; <= 1e-12 relative error on (0, 2) (and well beyond).
double gamma_real(double x);

// Closed form of int_0^inf x^{-k} e^{-dx} (cos x - i sin x) dx for
// 0 < k < 1, delta >= 0:
//   Gamma(1-k) (1+d^2)^{-(1-k)/2} [cos((1-k)th_d) - i sin((1-k)th_d)],
// th_d = arctan(1/delta), th_0 = pi/2.
Complex abel_integral_closed(double k, double delta);

// Direct quadrature of both oscillatory integrals. The algebraic
// singularity on [0, pi] is removed by the substitution x = u^{1/(1-k)}
// (exact Jacobian; the integrand becomes smooth on [0, pi^{1-k}]); the tail
// is summed over half-periods [m pi, (m+1) pi] as an alternating series and
// accelerated by iterated Aitken delta-squared. delta = 0 is permitted (the
// integrals converge conditionally for 0 < k < 1). tol must be >= 1e-10.
OscillatoryParts abel_integral_quad(double k, double delta, double tol = 1e-9);

// The tail-balance ratio cos-part / sin-part at delta -> 0, equal to
// tan(pi k/2) for 0 < k < 1.
//   closed:       ratio of the closed form at delta = 0
//   quad:         ratio of direct quadrature at delta = 0
//   extrapolated: quadrature ratios at delta_j = 2^-j, j = 2..12,
//                 polynomially extrapolated to delta = 0 (the Abel limit,
//                 taken computationally)
AbelRatioResult abel_ratio(double k, RatioMethod method);

// Self-test of the twice-integrated-by-parts identity for
// int_1^T x^{-k} e^{-dx} sin x dx (valid for any k > 0): both sides are
// computed by independent quadrature and the absolute difference returned.
double tail_parts_identity_check(double k, double delta, double T);

}  // namespace goldielab

#endif  // GOLDIELAB_QUADRATURE_HPP
