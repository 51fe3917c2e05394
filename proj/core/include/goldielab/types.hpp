#ifndef GOLDIELAB_TYPES_HPP
#define GOLDIELAB_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace goldielab {

// Carrier for all C-valued quantities. Public results never contain NaN/Inf.
using Complex = std::complex<double>;

// Exact-limit switch for the l'Hospital family (e^{gx}-1)/g, (t^g-1)/g,
// (n-n^k)/g. Below this |g| the series/limit form is used.
inline constexpr double kEpsSwitch = 1e-6;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// A sequence a_n failed the discrete Cauchy exponential equation
// a_{mn} = a_m a_n. CLI maps this to exit code 3.
class NotANormingSequenceError : public std::runtime_error {
 public:
  explicit NotANormingSequenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// A trivial/degenerate solution was encountered where a non-trivial one is
// required (k = 0, |phi| == 0 or |phi| == 1). CLI maps this to exit code 4.
class DegenerateSolutionError : public std::runtime_error {
 public:
  explicit DegenerateSolutionError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace goldielab

#endif  // GOLDIELAB_TYPES_HPP
