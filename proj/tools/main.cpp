// goldie-lab: command-line surface over the goldielab library.
//
// Subcommands: eval, chfe-check, identify, reduce, goldie-fit, kernel,
// appendix. Grid-valued output is JSON lines; scalar reports are a single
// JSON object. Exit codes: 0 success, 2 input validation, 3 equation
// violation, 4 degeneracy. GOLDIE_LAB_PRECISION overrides the default of
// the tolerance flags marked [env] in --help.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldielab/beurling.hpp"
#include "goldielab/quadrature.hpp"
#include "goldielab/reduction.hpp"
#include "goldielab/stable.hpp"
#include "params_io.hpp"

namespace {

using goldielab::Complex;
using goldielab::StableParams;
using njson = nlohmann::ordered_json;

double env_default_tol(double fallback) {
  const char* env = std::getenv("GOLDIE_LAB_PRECISION");
  if (env == nullptr || *env == '\0') return fallback;
  const std::string text(env);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v) || !(v > 0.0))
    throw std::invalid_argument(
        "GOLDIE_LAB_PRECISION must be a positive finite number, got '" + text +
        "'");
  return v;
}

void emit(const njson& j) { std::cout << j.dump() << "\n"; }

int run_eval(const std::string& params_path, const std::vector<double>& ts) {
  const StableParams p = goldielab::cli::load_params_file(params_path).params;
  for (double t : ts) {
    Complex f{0.0, 0.0};
    if (t > 0.0) {
      f = goldielab::log_cf(p, t);
    } else if (t < 0.0) {
      f = std::conj(goldielab::log_cf(p, -t));
    }
    njson line;
    line["t"] = t;
    line["f"] = goldielab::cli::complex_json(f);
    line["phi"] = goldielab::cli::complex_json(goldielab::cf(p, t));
    emit(line);
  }
  return 0;
}

int run_chfe_check(const std::string& params_path, int n_max,
                   std::vector<double> ts, double tol) {
  const StableParams p = goldielab::cli::load_params_file(params_path).params;
  if (ts.empty())
    for (int j = 1; j <= 40; ++j) ts.push_back(0.25 * j);
  double max_res = 0.0;
  int arg_n = 1;
  double arg_t = ts.front();
  for (int n = 1; n <= n_max; ++n) {
    for (double t : ts) {
      const double r = std::abs(goldielab::chfe_residual(p, n, t));
      if (r > max_res) {
        max_res = r;
        arg_n = n;
        arg_t = t;
      }
    }
  }
  const bool pass = max_res < tol;
  njson report;
  report["max_residual"] = max_res;
  report["argmax"] = njson{{"n", arg_n}, {"t", arg_t}};
  report["pass"] = pass;
  report["tol"] = tol;
  if (std::abs(p.lambda().imag()) > 1e-12)
    report["warning"] = "b_n complex (lambda is not real)";
  report["params"] = goldielab::cli::canonical_params_json(p);
  emit(report);
  return pass ? 0 : 3;
}

int run_identify(const std::string& samples_path, double mult_tol,
                 double k_tol) {
  const std::vector<double> a =
      goldielab::cli::load_sequence_samples(samples_path);
  const goldielab::ExponentIdentification id =
      goldielab::identify_exponent(a, mult_tol, k_tol);
  njson report;
  report["k"] = id.k;
  report["mult_residual"] = id.mult_residual;
  emit(report);
  return 0;
}

int run_reduce(const std::string& params_path) {
  const StableParams p = goldielab::cli::load_params_file(params_path).params;
  const goldielab::ReducedSystem r = goldielab::reduce(p);
  njson report;
  report["case"] = r.kind == goldielab::ReductionCase::case1 ? "case1" : "case2";
  report["K_const"] = goldielab::cli::complex_json(r.k_const);
  report["gamma"] = r.gamma;
  report["H_tilde_const"] = goldielab::cli::complex_json(r.h_tilde_const);
  report["params"] = goldielab::cli::canonical_params_json(p);
  emit(report);
  return 0;
}

int run_goldie_fit(const std::string& samples_path, double fit_tol) {
  const std::vector<goldielab::GoldieSample> samples =
      goldielab::cli::load_complex_samples(samples_path);
  const goldielab::GoldieFit fit = goldielab::fit_goldie(samples, fit_tol);
  njson report;
  report["kappa0"] = goldielab::cli::complex_json(fit.params.kappa0);
  report["gamma0"] = goldielab::cli::complex_json(fit.params.gamma0);
  report["max_residual"] = fit.max_residual;
  report["trivial"] = fit.trivial;
  emit(report);
  return 0;
}

int run_kernel(const std::string& f_name, const std::string& phi_name,
               const std::vector<double>& ts,
               const goldielab::GrowthSchedule& schedule) {
  const goldielab::RealFn F = goldielab::make_base_function(f_name);
  const goldielab::RealFn phi = goldielab::make_aux_function(phi_name);
  for (double t : ts) {
    const goldielab::LimitEstimate est =
        goldielab::beurling_kernel(F, phi, t, schedule);
    njson line;
    line["t"] = est.t;
    line["value"] = goldielab::cli::complex_json(est.value);
    line["error_bound"] = est.error_bound;
    line["converged"] = est.converged;
    line["evaluations"] = est.evaluations;
    emit(line);
  }
  return 0;
}

int run_appendix(double k, const std::string& method,
                 std::optional<double> delta, double tol) {
  if (delta.has_value()) {
    const Complex closed = goldielab::abel_integral_closed(k, *delta);
    const goldielab::OscillatoryParts quad =
        goldielab::abel_integral_quad(k, *delta, tol);
    const auto part_json = [](const goldielab::QuadratureResult& r) {
      njson j;
      j["value"] = r.value.real();
      j["abs_err"] = r.abs_err;
      j["evaluations"] = r.evaluations;
      return j;
    };
    njson report;
    report["k"] = k;
    report["delta"] = *delta;
    report["closed"] = goldielab::cli::complex_json(closed);
    report["quad"] = njson{{"cosine", part_json(quad.cosine)},
                           {"sine", part_json(quad.sine)}};
    report["max_component_diff"] =
        std::max(std::abs(quad.cosine.value.real() - closed.real()),
                 std::abs(quad.sine.value.real() + closed.imag()));
    emit(report);
    return 0;
  }
  goldielab::RatioMethod m = goldielab::RatioMethod::extrapolated;
  if (method == "closed") m = goldielab::RatioMethod::closed;
  else if (method == "quad") m = goldielab::RatioMethod::quad;
  else if (method != "extrapolated")
    throw std::invalid_argument("--method must be closed, quad or extrapolated");
  const goldielab::AbelRatioResult r = goldielab::abel_ratio(k, m);
  njson report;
  report["k"] = r.k;
  report["method"] = method;
  report["ratio"] = r.ratio;
  report["reference"] = r.reference;
  report["rel_err"] = r.rel_err;
  emit(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "goldie-lab: stable-law characteristic functions, Goldie/Beurling "
      "kernels and the Abel-regularized tail-balance ratio"};
  app.require_subcommand(1);

  try {
    // eval
    auto* eval = app.add_subcommand("eval", "evaluate f = log phi and phi on a t-grid");
    std::string eval_params;
    std::vector<double> eval_ts;
    eval->add_option("--params", eval_params, "parameter JSON file")->required();
    eval->add_option("--t", eval_ts, "t value (repeatable)")->required()->expected(-1);

    // chfe-check
    auto* chk = app.add_subcommand("chfe-check", "residual report for the characteristic functional equation");
    std::string chk_params;
    int chk_nmax = 50;
    std::vector<double> chk_ts;
    double chk_tol = env_default_tol(1e-9);
    chk->add_option("--params", chk_params, "parameter JSON file")->required();
    chk->add_option("--n-max", chk_nmax, "largest n checked")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    chk->add_option("--t", chk_ts, "t grid point (repeatable; default 0.25..10)")
        ->expected(-1);
    chk->add_option("--tol", chk_tol, "pass threshold for |residual| [env]")
        ->capture_default_str();

    // identify
    auto* ident = app.add_subcommand("identify", "identify the exponent k from a norming sequence");
    std::string ident_samples;
    double ident_mult_tol = 1e-9, ident_k_tol = 1e-9;
    ident->add_option("--samples", ident_samples, "CSV file with columns n,a_n")->required();
    ident->add_option("--mult-tol", ident_mult_tol, "relative tolerance for a_mn = a_m a_n")
        ->capture_default_str();
    ident->add_option("--k-tol", ident_k_tol, "degeneracy threshold for |k|")
        ->capture_default_str();

    // reduce
    auto* red = app.add_subcommand("reduce", "map parameters to the (K, G, H~) system");
    std::string red_params;
    red->add_option("--params", red_params, "parameter JSON file")->required();

    // goldie-fit
    auto* gfit = app.add_subcommand("goldie-fit", "recover (kappa0, gamma0) from kernel samples");
    std::string gfit_samples;
    double gfit_tol = 1e-9;
    gfit->add_option("--samples", gfit_samples, "CSV file with columns x,re,im")->required();
    gfit->add_option("--fit-tol", gfit_tol, "threshold for the additive (gamma0 = 0) branch")
        ->capture_default_str();

    // kernel
    auto* ker = app.add_subcommand("kernel", "numerically estimate a Beurling kernel value");
    std::string ker_f, ker_phi;
    std::vector<double> ker_ts;
    goldielab::GrowthSchedule ker_sched;
    ker_sched.tol = env_default_tol(1e-8);
    ker->add_option("--F", ker_f, "base function: linear:c, log, power:p")->required();
    ker->add_option("--phi", ker_phi, "auxiliary function: const:c, identity, sqrt, reciprocal, x-over-log")->required();
    ker->add_option("--t", ker_ts, "t value (repeatable)")->required()->expected(-1);
    ker->add_option("--x0", ker_sched.x0, "schedule start")->capture_default_str();
    ker->add_option("--growth", ker_sched.factor, "schedule growth factor")->capture_default_str();
    ker->add_option("--steps", ker_sched.steps, "schedule length")->capture_default_str();
    ker->add_option("--tol", ker_sched.tol, "three-term agreement tolerance [env]")
        ->capture_default_str();

    // appendix
    auto* apx = app.add_subcommand("appendix", "Gamma-integral ratio and oscillatory quadrature cross-check");
    double apx_k = 0.5;
    std::string apx_method = "extrapolated";
    double apx_tol = env_default_tol(1e-9);
    std::optional<double> apx_delta;
    apx->add_option("--k", apx_k, "exponent, 0 < k < 1")->required();
    apx->add_option("--method", apx_method, "closed, quad or extrapolated")
        ->capture_default_str();
    apx->add_option("--delta", apx_delta, "report closed vs quadrature at this damping instead of the ratio");
    apx->add_option("--tol", apx_tol, "quadrature tolerance (>= 1e-10) [env]")
        ->capture_default_str();

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }

    if (eval->parsed()) return run_eval(eval_params, eval_ts);
    if (chk->parsed()) return run_chfe_check(chk_params, chk_nmax, chk_ts, chk_tol);
    if (ident->parsed()) return run_identify(ident_samples, ident_mult_tol, ident_k_tol);
    if (red->parsed()) return run_reduce(red_params);
    if (gfit->parsed()) return run_goldie_fit(gfit_samples, gfit_tol);
    if (ker->parsed()) return run_kernel(ker_f, ker_phi, ker_ts, ker_sched);
    if (apx->parsed()) return run_appendix(apx_k, apx_method, apx_delta, apx_tol);
    return 2;
  } catch (const goldielab::NotANormingSequenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const goldielab::DegenerateSolutionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const goldielab::QuadratureBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
