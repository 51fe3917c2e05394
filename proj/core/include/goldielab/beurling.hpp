#ifndef GOLDIELAB_BEURLING_HPP
#define GOLDIELAB_BEURLING_HPP

#include <functional>
#include <span>
#include <string>

#include "goldielab/goldie.hpp"
#include "goldielab/stable.hpp"
#include "goldielab/types.hpp"

namespace goldielab {

// The circle group (C_rho, o_rho) on the carrier {x : 1 + rho x != 0}.
// rho = 0 gives the additive group of C.
struct CircleRho {
  Complex rho{0.0, 0.0};
};

// Geometric evaluation schedule x_j = x0 * factor^j, j = 0..steps-1, with
// three-term agreement within tol as the convergence criterion. The default
// probes x = 2^10 .. 2^40.
struct GrowthSchedule {
  double x0 = 1024.0;
  double factor = 2.0;
  int steps = 31;
  double tol = 1e-8;
};

// A numerically extrapolated limit. converged implies
// error_bound <= schedule.tol; error_bound is the last successive
// difference either way. evaluations counts calls into the user callables.
struct LimitEstimate {
  double t = 0.0;
  Complex value{0.0, 0.0};
  double error_bound = 0.0;
  bool converged = false;
  long evaluations = 0;
};

// eta_rho(t) = 1 + rho t.
Complex eta_rho(const Complex& rho, double t);

// Residual of the Beurling (Golab-Schinzel) equation
// eta(u + v eta(u)) - eta(u) eta(v); identically zero for the eta_rho
// family. For complex rho the inner argument is evaluated by the natural
// extension eta(z) = 1 + rho z.
Complex bfe_residual(const Complex& rho, double u, double v);

// a o_rho b = a + b + rho a b. Inputs on the carrier boundary
// (1 + rho a == 0) are rejected with std::domain_error; closure holds since
// 1 + rho (a o b) = (1 + rho a)(1 + rho b).
Complex circle_op(const CircleRho& g, const Complex& a, const Complex& b);

// Group inverse: the x with a o_rho x = 0, namely -a / (1 + rho a).
Complex circle_inverse(const CircleRho& g, const Complex& a);

// Residual of K(st) - K(s) o_rho K(t) with K from reduce(p) and
// rho = gamma/kappa. For gamma == 0 (or kappa == 0, where K is additive or
// identically zero) the additive check K(st) - K(s) - K(t) is used instead.
Complex homomorphism_residual(const StableParams& p, double s, double t);

using RealFn = std::function<double(double)>;

// Estimate lim_{x->inf} phi(x + t phi(x)) / phi(x) along the schedule.
// Non-convergence within the budget is reported via converged = false,
// never as an exception. phi must be positive on the schedule's range.
LimitEstimate estimate_eta(const RealFn& phi, double t,
                           const GrowthSchedule& schedule = {});

// Desk-scale surrogate for the self-neglecting property: every eta estimate
// on the grid must equal 1 within tol plus its own error bound, and
// phi(x)/x must visibly decay to 0 along the schedule (strictly decreasing
// over the tail of the schedule and at least halved overall). A "false" is
// conclusive on the probed range; a "true" is evidence, not proof.
bool is_self_neglecting(const RealFn& phi, std::span<const double> t_grid,
                        double tol, const GrowthSchedule& schedule = {});

// Beurling kernel estimate K_F(t) = lim_{x->inf} [F(x + t phi(x)) - F(x)].
LimitEstimate beurling_kernel(const RealFn& F, const RealFn& phi, double t,
                              const GrowthSchedule& schedule = {});

// fit_kernel result: the best (kappa0, gamma0) fit through the estimates,
// the worst reproduction residual, and whether every estimate is reproduced
// within its own error bound (SE-type kernels such as log(1+t) are reported
// as best-fit-with-residual, consistent = false).
struct KernelFit {
  GoldieParams params;
  double max_residual = 0.0;
  bool consistent = false;
  bool trivial = false;
};

// Fit the exponential kernel family to >= 3 converged estimates on a
// uniform t-grid (delegates to fit_goldie). Unconverged estimates are
// rejected with std::invalid_argument.
KernelFit fit_kernel(std::span<const LimitEstimate> estimates,
                     double fit_tol = 1e-9);

// Named built-in functions for the CLI surface.
// F:   "linear:c" (c x; c defaults to 1), "log", "power:p" (x^p)
// phi: "const:c" (c; defaults to 1), "identity", "sqrt", "reciprocal",
//      "x-over-log"
RealFn make_base_function(const std::string& name);
RealFn make_aux_function(const std::string& name);

}  // namespace goldielab

#endif  // GOLDIELAB_BEURLING_HPP
