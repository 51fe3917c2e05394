#ifndef GOLDIELAB_REDUCTION_HPP
#define GOLDIELAB_REDUCTION_HPP

#include "goldielab/stable.hpp"
#include "goldielab/types.hpp"

namespace goldielab {

// Case 1: f(1) = 0, the degenerate (arithmetic) family where K = F = H.
// Case 2: f(1) != 0, the stable-law family.
enum class ReductionCase { case1, case2 };

// The (K, G, H~) system equivalent to the characteristic functional
// equation:
//   K(t) = kappa_K (t^gamma - 1)/gamma  with K(1) = 0,
//   G(s) = s^gamma                      with G(1) = 1, G(st) = G(s)G(t),
//   H~(t) = (kappa_K - gamma)(t^gamma - 1)/gamma.
// H is never stored as an independent unknown; it is reconstructed pointwise
// from the elimination identity H = f1 (F~ - G) where needed.
struct ReducedSystem {
  ReductionCase kind = ReductionCase::case2;
  Complex k_const{0.0, 0.0};  // kappa_K
  double gamma = 0.0;
  Complex h_tilde_const{0.0, 0.0};  // kappa_K - gamma

  Complex K(double t) const;        // t > 0
  double G(double s) const;         // s > 0
  Complex H_tilde(double t) const;  // t > 0
};

// Proposition-1 forward map. Case 2 when f1 != 0:
// K(t) = f(t)/(t f1) - 1, i.e. kappa_K = kappa. Case 1 when f1 == 0:
// flagged degenerate, K == 0.
ReducedSystem reduce(const StableParams& p);

// Inverse map f(t) = f1 t (1 + K(t)). Requires a case-2 system and f1 != 0;
// a case-1 input has no unique reconstruction and throws std::domain_error.
StableParams reconstruct(const ReducedSystem& r, const Complex& f1);

// Residual of F(st) = F(t) G(s) + H(s), the three-unknown form prior to
// H-elimination, with F rebuilt from (r, f1) and H from the case's
// elimination identity. Extended-precision internal evaluation.
Complex dagger_residual(const ReducedSystem& r, const Complex& f1, double s,
                        double t);

// Residual of H~(st) - H~(s) - H~(t) G(s) (case 2 only).
Complex h_tilde_gfe_check(const ReducedSystem& r, double s, double t);

}  // namespace goldielab

#endif  // GOLDIELAB_REDUCTION_HPP
