#include "goldielab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

using namespace goldielab;

namespace {

// 50-digit reference values, computed with mpmath before the build.
struct GammaRef {
  double x, value;
};
constexpr GammaRef kGammaRefs[] = {
    {0.01, 99.43258511915060371},   {0.1, 9.513507698668731836},
    {0.25, 3.625609908221908312},   {0.5, 1.772453850905516027},
    {0.75, 1.225416702465177645},   {0.999, 1.000578205629358648},
    {1.0, 1.0},                     {1.25, 0.9064024770554770780},
    {1.5, 0.8862269254527580136},   {1.9, 0.9617658319073874194},
    {2.0, 1.0}};

// Closed values of int_0^inf x^{-k} e^{-dx} (cos - i sin) x dx.
constexpr double kC_05_0 = 1.253314137315500251;  // = sqrt(pi/2) = S
constexpr double kC_05_1 = 1.376996331853153439;
constexpr double kS_05_1 = 0.570370555991579260;
constexpr double kC_025_05 = 0.760316864228835261;
constexpr double kS_025_05 = 0.831959259019134914;

}  // namespace

TEST_CASE("gamma_real against high-precision references") {
  for (const GammaRef& ref : kGammaRefs)
    CHECK(std::abs(gamma_real(ref.x) - ref.value) <= 1e-12 * ref.value);
  CHECK_THROWS_AS((void)gamma_real(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)gamma_real(-1.5), std::invalid_argument);
}

TEST_CASE("gamma_real against the library gamma on a dense grid") {
  for (int j = 1; j <= 199; ++j) {
    const double x = 0.01 * j;
    CHECK(std::abs(gamma_real(x) - std::tgamma(x)) <= 5e-13 * std::tgamma(x));
  }
}

TEST_CASE("abel_integral_closed examples") {
  const Complex at0 = abel_integral_closed(0.5, 0.0);
  CHECK(std::abs(at0.real() - kC_05_0) < 1e-14);
  CHECK(std::abs(at0.imag() + kC_05_0) < 1e-14);
  CHECK(std::abs(at0.real() / -at0.imag() - 1.0) < 1e-14);  // tan(pi/4)

  const Complex at1 = abel_integral_closed(0.5, 1.0);
  CHECK(std::abs(at1.real() - kC_05_1) < 1e-14);
  CHECK(std::abs(at1.imag() + kS_05_1) < 1e-14);

  CHECK_THROWS_AS((void)abel_integral_closed(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS((void)abel_integral_closed(1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS((void)abel_integral_closed(0.5, -0.1), std::invalid_argument);
}

TEST_CASE("abel_integral_quad examples") {
  const OscillatoryParts at1 = abel_integral_quad(0.5, 1.0, 1e-9);
  CHECK(std::abs(at1.cosine.value.real() - kC_05_1) < 1e-8);
  CHECK(std::abs(at1.sine.value.real() - kS_05_1) < 1e-8);
  CHECK(at1.cosine.abs_err < 1e-8);
  CHECK(at1.cosine.evaluations > 0);

  const OscillatoryParts at0 = abel_integral_quad(0.5, 0.0, 1e-9);
  CHECK(std::abs(at0.sine.value.real() - kC_05_0) < 1e-8);

  const OscillatoryParts mid = abel_integral_quad(0.25, 0.5, 1e-9);
  CHECK(std::abs(mid.cosine.value.real() - kC_025_05) < 1e-8);
  CHECK(std::abs(mid.sine.value.real() - kS_025_05) < 1e-8);

  CHECK_THROWS_AS((void)abel_integral_quad(0.5, 0.0, 1e-12),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)abel_integral_quad(1.5, 0.0, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("closed form and quadrature agree on the probe matrix") {
  for (double k : {0.25, 0.5, 0.75}) {
    for (double delta : {1.0, 0.5, 0.1, 0.01}) {
      const Complex closed = abel_integral_closed(k, delta);
      const OscillatoryParts quad = abel_integral_quad(k, delta, 1e-9);
      CHECK(std::abs(quad.cosine.value.real() - closed.real()) < 1e-8);
      CHECK(std::abs(quad.sine.value.real() + closed.imag()) < 1e-8);
    }
  }
}

TEST_CASE("abel_ratio: closed trigonometric values") {
  const AbelRatioResult half = abel_ratio(0.5, RatioMethod::closed);
  CHECK(std::abs(half.ratio - 1.0) < 1e-14);
  const AbelRatioResult quarter = abel_ratio(0.25, RatioMethod::closed);
  CHECK(std::abs(quarter.ratio - (std::sqrt(2.0) - 1.0)) < 1e-14);
  const AbelRatioResult three_q = abel_ratio(0.75, RatioMethod::closed);
  CHECK(std::abs(three_q.ratio - (std::sqrt(2.0) + 1.0)) < 1e-13);
  CHECK_THROWS_AS((void)abel_ratio(1.0, RatioMethod::closed),
                  std::invalid_argument);
}

TEST_CASE("abel_ratio: all three methods agree with tan(pi k/2)") {
  for (double k : {0.25, 0.5, 0.75}) {
    const AbelRatioResult closed = abel_ratio(k, RatioMethod::closed);
    const AbelRatioResult quad = abel_ratio(k, RatioMethod::quad);
    const AbelRatioResult extr = abel_ratio(k, RatioMethod::extrapolated);
    CHECK(closed.rel_err < 1e-13);
    CHECK(quad.rel_err < 1e-6);
    CHECK(extr.rel_err < 1e-6);
    // Abel-limit consistency: the extrapolated and direct delta = 0 routes.
    CHECK(std::abs(extr.ratio - quad.ratio) <= 1e-6 * std::abs(quad.ratio));
  }
}

TEST_CASE("reference equals cot((1-k) pi/2) across (0.01, 0.99)") {
  for (int j = 1; j <= 979; ++j) {
    const double k = 0.01 + 0.001 * j;
    const double arg = (1.0 - k) * std::numbers::pi / 2.0;
    const double cot = std::cos(arg) / std::sin(arg);
    const double tan = abel_ratio(k, RatioMethod::closed).reference;
    CHECK(std::abs(cot - tan) <= 1e-14 * std::abs(tan));
  }
}

TEST_CASE("sine part is monotone decreasing in delta") {
  // Both closed-form factors of the sine part decrease in delta, so it is
  // strictly monotone. The cosine part is not monotone for k >= 1/2 (the
  // phase gain beats the modulus loss); it is asserted at k = 0.25 where
  // monotonicity does hold.
  const double deltas[] = {0.01, 0.1, 0.5, 1.0};
  for (double k : {0.25, 0.5, 0.75}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double d : deltas) {
      const double sine = -abel_integral_closed(k, d).imag();
      CHECK(sine < prev);
      prev = sine;
    }
  }
  double prev = 0.0;
  for (double d : {0.01, 0.1, 0.5, 1.0}) {
    const double cosine = abel_integral_closed(0.25, d).real();
    CHECK(cosine > prev);
    prev = cosine;
  }
}

TEST_CASE("tail_parts_identity_check") {
  CHECK(tail_parts_identity_check(0.5, 0.1, 50.0) < 1e-9);
  CHECK(tail_parts_identity_check(1.5, 0.01, 100.0) < 1e-9);
  CHECK(tail_parts_identity_check(0.5, 1.0, 2.0) < 1e-11);
  CHECK_THROWS_AS((void)tail_parts_identity_check(0.5, 0.1, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)tail_parts_identity_check(-0.5, 0.1, 50.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)tail_parts_identity_check(0.5, 0.0, 50.0),
                  std::invalid_argument);
}

TEST_CASE("quadrature results carry finite diagnostics") {
  for (double k : {0.1, 0.5, 0.9}) {
    const OscillatoryParts parts = abel_integral_quad(k, 0.25, 1e-9);
    for (const QuadratureResult& r : {parts.cosine, parts.sine}) {
      CHECK(std::isfinite(r.value.real()));
      CHECK(r.abs_err >= 0.0);
      CHECK(std::isfinite(r.abs_err));
      CHECK(r.evaluations > 0);
    }
  }
}
