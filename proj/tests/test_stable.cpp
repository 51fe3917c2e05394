#include "goldielab/stable.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "test_util.hpp"

using namespace goldielab;
using testutil::random_stable;
using testutil::uniform;

namespace {

// Independent closed-form evaluation in long double, used as the
// symbolic-substitution oracle for the norming/location chain.
std::complex<long double> f_oracle(const StableParams& p, long double t) {
  const std::complex<long double> f1{p.f1.real(), p.f1.imag()};
  const std::complex<long double> kappa{p.kappa.real(), p.kappa.imag()};
  const long double g = p.gamma;
  if (g == 0.0L) return f1 * (t + kappa * t * std::log(t));
  const std::complex<long double> A = kappa / g;
  const std::complex<long double> B = 1.0L - A;
  return f1 * (A * std::pow(t, g + 1.0L) + B * t);
}

}  // namespace

TEST_CASE("from_pitman examples") {
  const StableParams sym = from_pitman({1.0, 0.0, 0.0, 0.5});
  CHECK(sym.f1 == Complex{-1.0, 0.0});
  CHECK(sym.gamma == -0.5);
  CHECK(std::abs(sym.kappa - Complex{-0.5, 0.0}) < 1e-15);  // lambda = 0 forces kappa = gamma

  const StableParams skew = from_pitman({1.0, 0.0, 1.0, 0.5});
  CHECK(std::abs(skew.kappa - Complex{-0.5, 1.0}) < 1e-15);

  const StableParams cauchy_like = from_pitman({1.0, 0.0, 2.0, 1.0});
  CHECK(cauchy_like.gamma == 0.0);
  CHECK(std::abs(cauchy_like.kappa - Complex{0.0, 2.0}) < 1e-15);

  CHECK_THROWS_AS((void)from_pitman({-1.0, 0.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)from_pitman({1.0, 0.0, 0.0, -0.5}), std::invalid_argument);
}

TEST_CASE("to_pitman round trip and admissibility gate") {
  const PitmanParams q{1.0, 0.0, 1.0, 0.5};
  const PitmanParams back = to_pitman(from_pitman(q));
  CHECK(std::abs(back.c - q.c) < 1e-12);
  CHECK(std::abs(back.y - q.y) < 1e-12);
  CHECK(std::abs(back.lambda - q.lambda) < 1e-12);
  CHECK(std::abs(back.alpha - q.alpha) < 1e-12);

  // lambda(p) = 0.5i: kappa - gamma = -0.5 with f1 = -1.
  const StableParams inadmissible{{-1.0, 0.0}, {0.0, 0.0}, 0.5};
  CHECK(std::abs(inadmissible.lambda() - Complex{0.0, 0.5}) < 1e-15);
  CHECK_THROWS_AS((void)to_pitman(inadmissible, 1e-9), std::domain_error);

  const StableParams symmetric{{-1.0, 0.0}, {0.5, 0.0}, 0.5};
  const PitmanParams sp = to_pitman(symmetric);
  CHECK(sp.c == 1.0);
  CHECK(sp.y == 0.0);
  CHECK(std::abs(sp.lambda) < 1e-15);
  CHECK(sp.alpha == 1.5);

  const StableParams bad_c{{1.0, 0.0}, {0.0, 0.0}, 0.0};
  CHECK_THROWS_AS((void)to_pitman(bad_c), std::domain_error);
}

TEST_CASE("log_cf examples") {
  const StableParams sym_half{{-1.0, 0.0}, {-0.5, 0.0}, -0.5};
  CHECK(std::abs(log_cf(sym_half, 4.0) - Complex{-2.0, 0.0}) < 1e-14);

  const StableParams linear{{-1.0, 0.0}, {0.0, 0.0}, 0.0};
  CHECK(std::abs(log_cf(linear, 7.0) - Complex{-7.0, 0.0}) < 1e-14);

  const StableParams log_case{{-1.0, 0.0}, {0.0, 2.0}, 0.0};
  const Complex want{-std::numbers::e, -2.0 * std::numbers::e};
  CHECK(std::abs(log_cf(log_case, std::numbers::e) - want) < 1e-14 * std::abs(want));

  CHECK_THROWS_AS((void)log_cf(linear, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)log_cf(linear, -1.0), std::invalid_argument);
}

TEST_CASE("cf examples and conjugation symmetry") {
  const StableParams linear{{-1.0, 0.0}, {0.0, 0.0}, 0.0};
  CHECK(cf(linear, 0.0) == Complex{1.0, 0.0});
  CHECK(std::abs(cf(linear, 1.0) - Complex{std::exp(-1.0), 0.0}) < 1e-15);

  const StableParams sym_half{{-1.0, 0.0}, {-0.5, 0.0}, -0.5};
  CHECK(std::abs(cf(sym_half, -4.0) - Complex{std::exp(-2.0), 0.0}) < 1e-15);

  std::mt19937 rng(20240611);
  for (int i = 0; i < 100; ++i) {
    const StableParams p = random_stable(rng);
    const double t = uniform(rng, 0.01, 10.0);
    if (!is_finite(cf(p, t))) continue;  // |phi| overflowed for wild params
    CHECK(cf(p, -t) == std::conj(cf(p, t)));  // exact by construction
  }
}

TEST_CASE("norming examples") {
  const StableParams any{{-2.0, 1.0}, {1.0, -0.5}, 0.3};
  const NormingConstants one = norming(any, 1);
  CHECK(one.a_n == 1.0);
  CHECK(one.b_n == Complex{0.0, 0.0});

  const StableParams sym = from_pitman({1.0, 0.0, 0.0, 1.5});
  const NormingConstants five = norming(sym, 5);
  CHECK(std::abs(five.a_n - std::pow(5.0, 2.0 / 3.0)) < 1e-14);
  CHECK(five.b_n == Complex{0.0, 0.0});  // B = 0 when kappa = gamma

  // The corrected location chain: (f1=-1, gamma=-0.5, lambda=1) has
  // kappa = -0.5 + i, B = 2i, b_2 = -i f1 B (2 - 4) = 4.
  const StableParams skew = from_pitman({1.0, 0.0, 1.0, 0.5});
  const NormingConstants two = norming(skew, 2);
  CHECK(std::abs(two.a_n - 4.0) < 1e-14);
  CHECK(std::abs(two.b_n - Complex{4.0, 0.0}) < 1e-12);
}

TEST_CASE("norming agrees with the symbolic-substitution oracle") {
  // b_n must satisfy i b_n t = n f(t) - f(a_n t); solve for b_n at t = 1
  // with the independent long-double closed form.
  const StableParams skew = from_pitman({1.0, 0.0, 1.0, 0.5});
  const NormingConstants two = norming(skew, 2);
  const std::complex<long double> lhs =
      2.0L * f_oracle(skew, 1.0L) - f_oracle(skew, static_cast<long double>(two.a_n));
  const std::complex<long double> b2 = lhs / std::complex<long double>{0.0L, 1.0L};
  CHECK(std::abs(static_cast<double>(b2.real()) - two.b_n.real()) < 1e-12);
  CHECK(std::abs(static_cast<double>(b2.imag()) - two.b_n.imag()) < 1e-12);
}

TEST_CASE("gamma_pitman examples") {
  const StableParams sym = from_pitman({1.0, 0.0, 0.0, 1.5});
  CHECK(gamma_pitman(sym, 7) == Complex{0.0, 0.0});

  const StableParams near_one = from_pitman({1.0, 0.0, 2.0, 1.0 + 1e-8});
  const Complex gp = gamma_pitman(near_one, 3);
  const double want = 2.0 * std::log(3.0);
  CHECK(std::abs(gp.real() - want) <= 1e-6 * want);
  CHECK(std::abs(gp.imag()) <= 1e-12);

  const StableParams at_one = from_pitman({1.0, 0.0, 2.0, 1.0});
  CHECK(std::abs(gamma_pitman(at_one, 2) - Complex{2.0 * std::log(2.0), 0.0}) < 1e-14);
}

TEST_CASE("chfe_residual examples") {
  const StableParams sym = from_pitman({1.0, 0.0, 0.0, 1.5});
  CHECK(std::abs(chfe_residual(sym, 5, 2.0)) < 1e-10);

  const StableParams skew = from_pitman({1.0, 0.0, 1.0, 0.5});
  CHECK(std::abs(chfe_residual(skew, 2, 1.0)) < 1e-10);

  const StableParams at_one = from_pitman({1.0, 0.0, 2.0, 1.0});
  CHECK(std::abs(chfe_residual(at_one, 3, 1.0)) < 1e-10);
}

TEST_CASE("ChFE exactness property") {
  std::mt19937 rng(20240612);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const StableParams p = random_stable(rng);
    for (int j = 0; j < 4; ++j) {
      const int n = 1 + static_cast<int>(uniform(rng, 0.0, 49.999));
      const double t = uniform(rng, 1e-3, 10.0);
      worst = std::max(worst, std::abs(chfe_residual(p, n, t)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("log-domain and exponential-domain checks agree") {
  std::mt19937 rng(20240613);
  for (int i = 0; i < 200; ++i) {
    const StableParams p = random_stable(rng);
    const int n = 1 + static_cast<int>(uniform(rng, 0.0, 49.999));
    const double t = uniform(rng, 0.01, 10.0);
    CHECK(std::abs(chfe_residual(p, n, t)) < 1e-9);
    const NormingConstants c = norming(p, n);
    const double mag_pow = std::abs(std::pow(std::abs(cf(p, t)), n));
    const double mag_shift = std::abs(cf(p, c.a_n * t));
    // The exponential check is magnitude-limited; only compare where both
    // sides are representable.
    if (mag_pow > 1e-280 && mag_shift > 1e-280 && mag_pow < 1e280 &&
        mag_shift < 1e280 && std::abs(c.b_n.imag() * t) < 500.0) {
      CHECK(std::abs(chfe_residual_exp(p, n, t)) <
            1e-9 * std::max(1.0, std::max(mag_pow, mag_shift)));
    }
  }
}

TEST_CASE("location branch continuity near gamma = 0") {
  for (double lambda : {1.0, 2.0, -3.0}) {
    for (double g : {1e-8, -1e-8}) {
      const StableParams p = from_pitman({1.0, 0.0, lambda, 1.0 + g});
      for (int n = 2; n <= 100; ++n) {
        const Complex b = norming(p, n).b_n;
        const double want = lambda * n * std::log(static_cast<double>(n));
        CHECK(std::abs(b - Complex{want, 0.0}) <= 1e-6 * std::abs(want));
      }
    }
  }
}

TEST_CASE("location branches agree across the series switch") {
  for (double lambda : {1.0, -2.0}) {
    const StableParams lo = from_pitman({1.0, 0.0, lambda, 1.0 + kEpsSwitch * (1.0 - 1e-9)});
    const StableParams hi = from_pitman({1.0, 0.0, lambda, 1.0 + kEpsSwitch * (1.0 + 1e-9)});
    for (int n : {2, 10, 50, 100}) {
      const Complex a = norming(lo, n).b_n;
      const Complex b = norming(hi, n).b_n;
      CHECK(std::abs(a - b) <= 1e-9 * std::abs(b));
    }
  }
}

TEST_CASE("admissibility is equivalent to realness of b_n") {
  // f1 real and kappa - gamma purely imaginary make lambda exactly real;
  // every b_n is then exactly real.
  const StableParams real_lambda{{-1.0, 0.0}, {0.25, 2.0}, 0.25};
  CHECK(real_lambda.lambda().imag() == 0.0);
  for (int n = 1; n <= 100; ++n) CHECK(norming(real_lambda, n).b_n.imag() == 0.0);

  const StableParams complex_lambda{{-1.0, 0.0}, {0.55, 2.0}, 0.25};
  CHECK(std::abs(complex_lambda.lambda().imag()) > 1e-12);
  double worst_im = 0.0;
  for (int n = 2; n <= 100; ++n)
    worst_im = std::max(worst_im, std::abs(norming(complex_lambda, n).b_n.imag()));
  CHECK(worst_im > 1e-12);
}

TEST_CASE("identify_exponent examples") {
  const std::vector<double> sqrt_seq{1.0, std::sqrt(2.0), std::sqrt(3.0), 2.0};
  CHECK(std::abs(identify_exponent(sqrt_seq).k - 0.5) < 1e-12);

  const std::vector<double> squares{1.0, 4.0, 9.0, 16.0};
  CHECK(std::abs(identify_exponent(squares).k - 2.0) < 1e-12);

  const std::vector<double> ones{1.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS((void)identify_exponent(ones), DegenerateSolutionError);

  const std::vector<double> broken{1.0, 2.0, 3.0, 5.0};
  CHECK_THROWS_AS((void)identify_exponent(broken), NotANormingSequenceError);

  CHECK_THROWS_AS((void)identify_exponent(std::vector<double>{1.0, 2.0}),
                  std::invalid_argument);
  const std::vector<double> bad_head{2.0, 4.0, 8.0};
  CHECK_THROWS_AS((void)identify_exponent(bad_head), std::invalid_argument);
}

TEST_CASE("identify_exponent recovers k to 1e-10") {
  for (double k : {-1.0, 0.5, 1.0, 2.0}) {
    std::vector<double> a;
    for (int n = 1; n <= 12; ++n) a.push_back(std::pow(static_cast<double>(n), k));
    const auto id = identify_exponent(a);
    CHECK(std::abs(id.k - k) < 1e-10);
    CHECK(id.mult_residual < 1e-12);
  }
}

TEST_CASE("modulus_scale_invariance") {
  std::vector<double> grid;
  for (int j = 1; j <= 100; ++j) grid.push_back(0.1 * j);

  const StableParams sym1 = from_pitman({1.0, 0.0, 0.0, 1.0});
  CHECK(modulus_scale_invariance(sym1, 1.0, grid, 1e-9));
  const std::vector<double> small_grid{0.5, 1.0, 2.0};
  CHECK(!modulus_scale_invariance(sym1, 2.0, small_grid, 1e-9));

  // c = 1 + 1e-12 sits below the tolerance: the scale perturbation moves
  // |phi| by ~|phi'| t * 1e-12 < 1e-9 everywhere on the grid.
  const StableParams sym_half = from_pitman({1.0, 0.0, 0.0, 0.5});
  double oracle = 0.0;
  for (double t : grid)
    oracle = std::max(oracle, std::abs(std::exp(-std::sqrt((1.0 + 1e-12) * t)) -
                                       std::exp(-std::sqrt(t))));
  CHECK(oracle < 1e-9);
  CHECK(modulus_scale_invariance(sym_half, 1.0 + 1e-12, grid, 1e-9));

  CHECK_THROWS_AS((void)modulus_scale_invariance(sym1, -1.0, grid, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("scale-invariance dichotomy") {
  std::vector<double> grid;
  for (int j = 1; j <= 100; ++j) grid.push_back(0.1 * j);
  const StableParams sets[] = {from_pitman({1.0, 0.0, 0.0, 0.5}),
                               from_pitman({1.0, 0.0, 0.0, 1.5}),
                               from_pitman({1.0, 0.0, 1.0, 0.5})};
  for (const StableParams& p : sets)
    for (double c : {0.5, 0.9, 1.0, 1.1, 2.0})
      CHECK(modulus_scale_invariance(p, c, grid, 1e-9) == (c == 1.0));
}

TEST_CASE("classify_triviality") {
  CHECK(classify_triviality(StableParams{{-1.0, 0.0}, {0.0, 0.0}, 0.0}) ==
        Triviality::nontrivial);
  CHECK(classify_triviality(StableParams{{0.0, 1.0}, {0.0, 0.0}, 0.0}) ==
        Triviality::trivial_unimodular);
  CHECK(classify_triviality(from_pitman({1.0, 0.0, 0.0, 0.5})) ==
        Triviality::nontrivial);
  // Degenerate Case 1: f == 0, phi == 1.
  CHECK(classify_triviality(StableParams{{0.0, 0.0}, {1.0, 0.0}, 0.5}) ==
        Triviality::trivial_unimodular);
}
