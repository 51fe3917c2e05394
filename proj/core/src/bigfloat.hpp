#ifndef GOLDIELAB_SRC_BIGFLOAT_HPP
#define GOLDIELAB_SRC_BIGFLOAT_HPP

// Internal extended-precision kernel for the equation-residual evaluators.
//
// The residuals certify identities whose individual terms can reach ~1e18
// (e.g. a_50 = 50^10 for gamma near -1) while the contracts demand absolute
// residuals below 1e-9; double evaluation saturates at ~1e2 there. All
// *_residual functions therefore evaluate the closed forms at 50 decimal
// digits and round only the final residual back to double. Not installed;
// the public headers carry no Boost dependency.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "goldielab/types.hpp"

namespace goldielab::detail {

using BigReal = boost::multiprecision::cpp_bin_float_50;
using BigComplex = boost::multiprecision::cpp_complex_50;

inline BigComplex to_big(const Complex& z) {
  return BigComplex(BigReal(z.real()), BigReal(z.imag()));
}

inline Complex to_double(const BigComplex& z) {
  return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

inline bool is_zero(const BigComplex& z) {
  return z.real() == 0 && z.imag() == 0;
}

// (e^{g x} - 1)/g with the l'Hospital convention at g = 0. At 50 digits the
// direct form keeps >= 40 significant digits for any |g| >= 1e-8; below
// that the two-term series is exact to working precision.
inline BigComplex h_gamma_big(const BigComplex& g, const BigReal& x) {
  if (is_zero(g)) return BigComplex(x);
  if (abs(g) < BigReal("1e-8")) {
    const BigComplex gx = g * x;
    return x * (BigReal(1) + gx / 2 * (BigReal(1) + gx / 3 * (BigReal(1) + gx / 4)));
  }
  return (exp(g * x) - BigReal(1)) / g;
}

// (s^g - 1)/g for real s > 0, i.e. h_gamma_big at x = log s.
inline BigComplex pow_ratio_big(const BigComplex& g, const BigReal& s) {
  return h_gamma_big(g, log(s));
}

// s^g for real s > 0 (principal branch).
inline BigComplex pow_big(const BigReal& s, const BigComplex& g) {
  if (is_zero(g)) return BigComplex(BigReal(1));
  return exp(g * log(s));
}

}  // namespace goldielab::detail

#endif  // GOLDIELAB_SRC_BIGFLOAT_HPP
