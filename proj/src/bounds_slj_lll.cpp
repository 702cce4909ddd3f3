#include <cmath>
#include <numbers>
#include <string>

#include "bounds_internal.hpp"
#include "calambda/bounds.hpp"
#include "calambda/errors.hpp"
#include "calambda/lambert.hpp"

namespace calambda {
namespace detail {

WForm solve_w_form(double logMultiplier, std::int64_t lambda, double log1mp) {
  const double lambdaD = static_cast<double>(lambda);
  const double logL = std::log(-log1mp);
  WForm out;
  out.logNegArgument = logL - 1.0 - logMultiplier / lambdaD;
  // The argument always lies in (-1/e, 0) for valid parameters.
  if (!(out.logNegArgument < -1.0))
    throw InternalError("W-1 argument left (-1/e, 0): log(-x) = " +
                        std::to_string(out.logNegArgument));
  out.w = lambert_wm1_from_log(out.logNegArgument);
  out.n = lambdaD / log1mp * out.w;
  return out;
}

ElementaryForm solve_elementary_form(double logMultiplier, std::int64_t lambda, double log1mp) {
  const double lambdaD = static_cast<double>(lambda);
  const double L = -log1mp;
  constexpr double e = std::numbers::e;
  ElementaryForm out;
  out.z = logMultiplier / lambdaD - std::log(L);
  const double logTerm = log_add(0.0, out.z);  // log(1 + M^{1/lambda} / L)
  out.n = lambdaD * e / ((e - 1.0) * L) * (1.0 + logTerm);
  return out;
}

std::int64_t least_satisfying(const std::function<bool(std::int64_t)>& pred, std::int64_t start,
                              std::int64_t cap) {
  std::int64_t lo = -1;  // pred(lo) false (or lo < 0)
  std::int64_t hi = std::max<std::int64_t>(start, 1);
  while (!pred(hi)) {
    lo = hi;
    if (hi >= cap) throw InternalError("exact search exceeded cap " + std::to_string(cap));
    hi = std::min(hi * 2, cap);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

std::int64_t exact_search_cap(const CAParams& params) {
  return 10 * std::max<std::int64_t>(slj_upper_elementary(params).rows, 1);
}

}  // namespace detail

namespace {

using detail::floor_rows;

// log(C(k,t) v^t a (1-p)): the quantity raised to 1/lambda in the SLJ forms.
double slj_log_multiplier(const DerivedQuantities& d) {
  return d.logBinomKT + d.logVt + d.logA + d.log1mp;
}

// log(e (C(k,t) - C(k-t,t)) v^t a (1-p)) for the LLL forms.
double lll_log_multiplier(const CAParams& params, const DerivedQuantities& d) {
  return 1.0 + log_dependent_sets(params.t, params.k) + d.logVt + d.logA + d.log1mp;
}

BoundResult from_w_form(Method method, const detail::WForm& form, double offset) {
  BoundResult r;
  r.method = method;
  r.realBound = offset + form.n;
  r.rows = floor_rows(r.realBound);
  r.diagnostics["w_argument"] = -std::exp(form.logNegArgument);
  r.diagnostics["log_neg_w_argument"] = form.logNegArgument;
  r.diagnostics["w_value"] = form.w;
  r.diagnostics["branch"] = -1.0;
  return r;
}

BoundResult from_elementary(Method method, const detail::ElementaryForm& form, double offset) {
  BoundResult r;
  r.method = method;
  r.realBound = offset + form.n;
  r.rows = floor_rows(r.realBound);
  r.diagnostics["z"] = form.z;
  r.diagnostics["w_lower_bound"] = wm1_lower_bound(std::max(form.z, 0.0));
  return r;
}

}  // namespace

BoundResult slj_exact_min(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const double logK = d.logBinomKT + d.logVt;
  auto pred = [&](std::int64_t N) { return logK + log_binomial_tail(N, params.lambda, d.p) < 0.0; };
  const std::int64_t N = detail::least_satisfying(pred, params.lambda, detail::exact_search_cap(params));
  BoundResult r;
  r.method = Method::SljExactMin;
  r.realBound = static_cast<double>(N);
  r.rows = N;
  r.diagnostics["expected_deficient"] = std::exp(logK + log_binomial_tail(N, params.lambda, d.p));
  return r;
}

BoundResult slj_upper_w(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const auto form = detail::solve_w_form(slj_log_multiplier(d), params.lambda, d.log1mp);
  return from_w_form(Method::SljUpperW, form, 1.0);
}

BoundResult slj_upper_elementary(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const auto form = detail::solve_elementary_form(slj_log_multiplier(d), params.lambda, d.log1mp);
  return from_elementary(Method::SljUpperElementary, form, 1.0);
}

BoundResult lll_exact_min(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const double logK = 1.0 + log_dependent_sets(params.t, params.k) + d.logVt;
  auto pred = [&](std::int64_t N) { return logK + log_binomial_tail(N, params.lambda, d.p) <= 0.0; };
  const std::int64_t N = detail::least_satisfying(pred, params.lambda, detail::exact_search_cap(params));
  BoundResult r;
  r.method = Method::LllExactMin;
  r.realBound = static_cast<double>(N);
  r.rows = N;
  r.diagnostics["lll_product"] = std::exp(logK + log_binomial_tail(N, params.lambda, d.p));
  r.diagnostics["dependency_degree"] = std::exp(log_dependent_sets(params.t, params.k)) - 1.0;
  return r;
}

BoundResult lll_upper_w(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const auto form = detail::solve_w_form(lll_log_multiplier(params, d), params.lambda, d.log1mp);
  return from_w_form(Method::LllUpperW, form, 0.0);
}

BoundResult lll_upper_elementary(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const auto form = detail::solve_elementary_form(lll_log_multiplier(params, d), params.lambda, d.log1mp);
  return from_elementary(Method::LllUpperElementary, form, 0.0);
}

}  // namespace calambda
