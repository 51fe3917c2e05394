#include "goldielab/reduction.hpp"

#include <cmath>

#include "bigfloat.hpp"

namespace goldielab {

namespace {

double pow_ratio(double g, double log_t) {
  if (g == 0.0) return log_t;
  return std::expm1(g * log_t) / g;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0))
    throw std::invalid_argument(std::string(what) + " must be > 0");
}

}  // namespace

Complex ReducedSystem::K(double t) const {
  require_positive(t, "t");
  return k_const * pow_ratio(gamma, std::log(t));
}

double ReducedSystem::G(double s) const {
  require_positive(s, "s");
  return std::pow(s, gamma);
}

Complex ReducedSystem::H_tilde(double t) const {
  require_positive(t, "t");
  return h_tilde_const * pow_ratio(gamma, std::log(t));
}

ReducedSystem reduce(const StableParams& p) {
  ReducedSystem r;
  r.gamma = p.gamma;
  if (p.degenerate()) {
    r.kind = ReductionCase::case1;
    r.k_const = {0.0, 0.0};  // K = F = f/t vanishes identically here
    r.h_tilde_const = {0.0, 0.0};
  } else {
    r.kind = ReductionCase::case2;
    r.k_const = p.kappa;
    r.h_tilde_const = p.kappa - Complex{p.gamma, 0.0};
  }
  return r;
}

StableParams reconstruct(const ReducedSystem& r, const Complex& f1) {
  if (r.kind == ReductionCase::case1)
    throw std::domain_error(
        "reconstruct: case-1 systems have no unique reconstruction");
  if (f1 == Complex{0.0, 0.0})
    throw std::domain_error("reconstruct: requires f1 != 0");
  return StableParams{f1, r.k_const, r.gamma};
}

Complex dagger_residual(const ReducedSystem& r, const Complex& f1, double s,
                        double t) {
  require_positive(s, "s");
  require_positive(t, "t");
  using namespace detail;
  const BigComplex g(BigReal(r.gamma));
  const BigReal bs(s), bt(t);

  if (r.kind == ReductionCase::case1) {
    // K = F = H; the equation collapses to the multiplicative Goldie form.
    const BigComplex kc = to_big(r.k_const);
    const BigComplex res = kc * pow_ratio_big(g, bs * bt) -
                           kc * pow_ratio_big(g, bt) * pow_big(bs, g) -
                           kc * pow_ratio_big(g, bs);
    return to_double(res);
  }

  const BigComplex bf1 = to_big(f1);
  const BigComplex kc = to_big(r.k_const);
  const auto F = [&](const BigReal& x) {
    return bf1 * (BigReal(1) + kc * pow_ratio_big(g, x));
  };
  // H = f1 (F~ - G), the case-2 elimination identity, rebuilt pointwise.
  const BigComplex H =
      bf1 * (BigReal(1) + kc * pow_ratio_big(g, bs) - pow_big(bs, g));
  return to_double(F(bs * bt) - F(bt) * pow_big(bs, g) - H);
}

Complex h_tilde_gfe_check(const ReducedSystem& r, double s, double t) {
  if (r.kind != ReductionCase::case2)
    throw std::domain_error("h_tilde_gfe_check requires a case-2 system");
  require_positive(s, "s");
  require_positive(t, "t");
  using namespace detail;
  const BigComplex g(BigReal(r.gamma));
  const BigComplex hc = to_big(r.h_tilde_const);
  const BigReal bs(s), bt(t);
  const BigComplex res = hc * pow_ratio_big(g, bs * bt) -
                         hc * pow_ratio_big(g, bs) -
                         hc * pow_ratio_big(g, bt) * pow_big(bs, g);
  return to_double(res);
}

}  // namespace goldielab
