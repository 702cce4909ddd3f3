#include <cmath>
#include <numbers>
#include <string>

#include "bounds_internal.hpp"
#include "calambda/bounds.hpp"
#include "calambda/errors.hpp"
#include "calambda/lambert.hpp"

namespace calambda {
namespace {

using detail::floor_rows;

void require_lambda_two(const CAParams& params) {
  if (params.lambda != 2)
    throw DomainError("two_stage_l2 bounds require lambda = 2 (lambda = " +
                      std::to_string(params.lambda) + ")");
}

// m + 2 C(k,t) v^t ((1-p)^m + m p (1-p)^{m-1}) at real m.
double l2_objective(const DerivedQuantities& d, double m) {
  const double inner = (1.0 - d.p) + m * d.p;
  if (!(inner > 0.0)) throw DomainError("two-stage first stage size is negative");
  return m + std::exp(std::log(2.0) + d.logBinomKT + d.logVt + (m - 1.0) * d.log1mp + std::log(inner));
}

BoundResult l2_result(Method method, const DerivedQuantities& d, double m) {
  BoundResult r;
  r.method = method;
  r.realBound = l2_objective(d, m);
  r.rows = floor_rows(r.realBound);
  r.diagnostics["m"] = m;
  r.diagnostics["value_at_ceil_m"] = l2_objective(d, std::ceil(m));
  r.diagnostics["expected_remainder"] = r.realBound - m;
  return r;
}

// log(lambda C(k,t) v^t)
double log_second_stage_scale(const CAParams& params, const DerivedQuantities& d) {
  return std::log(static_cast<double>(params.lambda)) + d.logBinomKT + d.logVt;
}

// Objective increment obj(N+1) - obj(N) = 1 - lambda K p P(Bin(N,p) = lambda-1).
double objective_step(const CAParams& params, const DerivedQuantities& d, std::int64_t N) {
  const double logPmf = log_binomial_pmf(N, params.lambda - 1, d.p);
  return 1.0 - std::exp(log_second_stage_scale(params, d) + std::log(d.p) + logPmf);
}

double integer_objective(const CAParams& params, const DerivedQuantities& d, std::int64_t N) {
  return static_cast<double>(N) +
         std::exp(log_second_stage_scale(params, d) + log_binomial_tail(N, params.lambda, d.p));
}

BoundResult general_result(Method method, const CAParams& params, double m) {
  BoundResult r;
  r.method = method;
  r.realBound = two_stage_objective(params, m);
  r.rows = floor_rows(r.realBound);
  r.diagnostics["m"] = m;
  r.diagnostics["value_at_ceil_m"] = two_stage_objective(params, std::ceil(m));
  r.diagnostics["expected_remainder"] = r.realBound - m;
  return r;
}

// log(L C(k,t) v^t a (1-p)): the first-stage equation carries an extra
// log(1/(1-p)) factor relative to the SLJ multiplier.
double general_log_multiplier(const DerivedQuantities& d) {
  return std::log(-d.log1mp) + d.logBinomKT + d.logVt + d.logA + d.log1mp;
}

}  // namespace

BoundResult two_stage_l2_w(const CAParams& params) {
  require_lambda_two(params);
  const DerivedQuantities d = derive(params);
  // W-1 argument -e (1-p)^{v^t} / (2 C(k,t)).
  const double logNegArg = 1.0 + d.vt * d.log1mp - std::log(2.0) - d.logBinomKT;
  if (!(logNegArg < -1.0))
    throw DomainError("two_stage_l2_w: W-1 argument -e(1-p)^{v^t}/(2C(k,t)) is below -1/e "
                      "(C(k,t) too small)");
  const double w = lambert_wm1_from_log(logNegArg);
  const double m = (w - (d.vt - 1.0) * d.log1mp - 1.0) / d.log1mp;
  BoundResult r = l2_result(Method::TwoStageL2W, d, m);
  r.diagnostics["w_argument"] = -std::exp(logNegArg);
  r.diagnostics["log_neg_w_argument"] = logNegArg;
  r.diagnostics["w_value"] = w;
  r.diagnostics["branch"] = -1.0;
  return r;
}

BoundResult two_stage_l2_elementary(const CAParams& params) {
  require_lambda_two(params);
  const DerivedQuantities d = derive(params);
  constexpr double alpha = std::numbers::e / (std::numbers::e - 1.0);
  const double L = -d.log1mp;
  const double m = alpha * (d.logBinomKT + d.vt * L + std::log(2.0)) / L + 1.0 - d.vt;
  return l2_result(Method::TwoStageL2Elementary, d, m);
}

double two_stage_objective(const CAParams& params, double N) {
  const DerivedQuantities d = derive(params);
  if (N == std::floor(N) && N >= 0.0)
    return integer_objective(params, d, static_cast<std::int64_t>(N));
  return N + std::exp(log_second_stage_scale(params, d) + log_binomial_tail_real(N, params.lambda, d.p));
}

double two_stage_derivative(const CAParams& params, std::int64_t N) {
  const DerivedQuantities d = derive(params);
  const double logScale = log_second_stage_scale(params, d);
  const double logp = std::log(d.p);
  double sum = 0.0;
  double harmonicGap = 0.0;  // H_N - H_{N-i}
  double logC = 0.0;
  for (std::int64_t i = 0; i < params.lambda && i <= N; ++i) {
    if (i > 0) {
      harmonicGap += 1.0 / static_cast<double>(N - i + 1);
      logC += std::log(static_cast<double>(N - i + 1)) - std::log(static_cast<double>(i));
    }
    const double logTerm = logC + static_cast<double>(i) * logp + static_cast<double>(N - i) * d.log1mp;
    sum += std::exp(logScale + logTerm) * (harmonicGap + d.log1mp);
  }
  return 1.0 + sum;
}

BoundResult two_stage_exact_min(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  // The increment is decreasing up to the mode of P(Bin(N,p) = lambda-1) and
  // increasing after it, so the objective rises, falls, then rises: its
  // minimum is at N = 0 or at the first non-negative increment past the mode.
  const auto peak = static_cast<std::int64_t>(
      std::floor(static_cast<double>(params.lambda - 1) / d.p));
  std::int64_t argmin = 0;
  if (objective_step(params, d, peak) < 0.0) {
    const std::int64_t cap = detail::exact_search_cap(params);
    auto pred = [&](std::int64_t offset) { return objective_step(params, d, peak + offset) >= 0.0; };
    const std::int64_t candidate = peak + detail::least_satisfying(pred, 1, cap);
    if (integer_objective(params, d, candidate) < integer_objective(params, d, 0)) argmin = candidate;
  }
  const double best = integer_objective(params, d, argmin);
  BoundResult r;
  r.method = Method::TwoStageExactMin;
  r.realBound = best;
  r.rows = static_cast<std::int64_t>(std::ceil(best));
  r.diagnostics["argmin_N"] = static_cast<double>(argmin);
  r.diagnostics["expected_remainder"] = best - static_cast<double>(argmin);
  return r;
}

BoundResult two_stage_general_w(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const auto form = detail::solve_w_form(general_log_multiplier(d), params.lambda, d.log1mp);
  BoundResult r = general_result(Method::TwoStageGeneralW, params, 1.0 + form.n);
  r.diagnostics["w_argument"] = -std::exp(form.logNegArgument);
  r.diagnostics["log_neg_w_argument"] = form.logNegArgument;
  r.diagnostics["w_value"] = form.w;
  r.diagnostics["branch"] = -1.0;
  return r;
}

BoundResult two_stage_general_elementary(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const auto form = detail::solve_elementary_form(general_log_multiplier(d), params.lambda, d.log1mp);
  BoundResult r = general_result(Method::TwoStageGeneralElementary, params, 1.0 + form.n);
  r.diagnostics["z"] = form.z;
  return r;
}

}  // namespace calambda
