#ifndef GOLDIELAB_GOLDIE_HPP
#define GOLDIELAB_GOLDIE_HPP

#include <span>
#include <vector>

#include "goldielab/types.hpp"

namespace goldielab {

// Parameters (kappa0, gamma0) of the additive-kernel family
//   kappa(x) = kappa0 * (e^{gamma0 x} - 1) / gamma0,   gamma(x) = e^{gamma0 x},
// the general solution of kappa(x+y) - kappa(x) = gamma(x) kappa(y) with
// kappa(0) = 0. kappa0 == 0 encodes the trivial solution kappa == 0.
// Both components may be complex.
struct GoldieParams {
  Complex kappa0{0.0, 0.0};
  Complex gamma0{0.0, 0.0};
};

// H_{gamma0}(x) = (e^{gamma0 x} - 1)/gamma0 under the l'Hospital convention:
// identity map at gamma0 = 0. Continuous in gamma0 across the series switch
// at |gamma0| = kEpsSwitch to better than 1e-12 relative.
Complex h_gamma(const Complex& gamma0, double x);

// kappa(x) = kappa0 * H_{gamma0}(x). Exactly 0 at x = 0.
Complex kappa_eval(const GoldieParams& p, double x);

// gamma(x) = e^{gamma0 x}. Equals 1 at x = 0.
Complex gamma_aux_eval(const GoldieParams& p, double x);

// Residual of the additive Goldie equation,
//   kappa(x+y) - kappa(x) - gamma(x) kappa(y),
// evaluated for the closed-form family; vanishes up to rounding for every
// GoldieParams. Evaluated internally in extended precision so the returned
// residual is meaningful even when e^{gamma0 x} is large.
Complex gfe_residual(const GoldieParams& p, double x, double y);

// Residual of the multiplicative form K(st) - K(s) - G(s) K(t) with
//   K(s) = kappa0 (s^{gamma0} - 1)/gamma0,  G(s) = s^{gamma0},  K(1) = 0.
// Rejects s <= 0 or t <= 0.
Complex gfe_mult_residual(const GoldieParams& p, double s, double t);

struct GoldieSample {
  double x;
  Complex value;
};

// Result of fit_goldie: recovered parameters plus a diagnostic. The residual
// over the samples not consumed by the two-point recovery is reported, not
// folded into the estimate. trivial == true (kappa0 == 0) signals the all-zero
// input case.
struct GoldieFit {
  GoldieParams params;
  double max_residual = 0.0;
  bool trivial = false;
};

// Recover (kappa0, gamma0) from >= 3 samples of kappa on the uniform grid
// x = h, 2h, 3h, ... (h > 0). Uses the symmetry identity: the ratio
// kappa(2h)/kappa(h) - 1 = e^{gamma0 h}, inverted by the principal complex
// logarithm (valid while |Im(gamma0)| h < pi), then kappa0 = kappa(h)/H(h).
// If |kappa(2h)/kappa(h) - 2| < fit_tol the additive case gamma0 = 0,
// kappa0 = kappa(h)/h is returned.
//
// Errors: all-zero samples -> trivial signal (not an error); kappa(h) = 0 with
// kappa(2h) != 0, or ratio exactly 1 -> std::invalid_argument (ill-posed);
// non-uniform grid -> std::invalid_argument.
GoldieFit fit_goldie(std::span<const GoldieSample> samples,
                     double fit_tol = 1e-9);

}  // namespace goldielab

#endif  // GOLDIELAB_GOLDIE_HPP
