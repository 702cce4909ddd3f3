// Largest index lambda that N rows are guaranteed to support.
//
// With b = C(k,t) v^t (1-p)^{N+1} / sqrt(1-2p), a CA_lambda(N; t, k, v)
// exists whenever b (eN/lambda)^lambda <= 1. On lambda < N the left side
// increases in lambda, and equality holds at lambda* = N exp(1 + W-1(log b / (eN))).

#include <cmath>
#include <numbers>
#include <string>

#include "calambda/bounds.hpp"
#include "calambda/errors.hpp"
#include "calambda/lambert.hpp"

namespace calambda {
namespace {

void check_range(double logB, std::int64_t N) {
  if (logB >= 0.0)
    throw RowsRangeError(RowsRangeIssue::AtLeastOne,
                         "b out of range: b >= 1 (N = " + std::to_string(N) + " rows too few for any guarantee)");
  if (logB <= -static_cast<double>(N))
    throw RowsRangeError(RowsRangeIssue::BelowExpMinusN,
                         "b out of range: b <= e^-N (N = " + std::to_string(N) + ")");
}

CAParams dimensions_only(const CAParams& params) {
  CAParams p = params;
  p.lambda = 1;
  return p;
}

FixedRowsResult finish(double lambdaReal, double logB, double wArgument, std::int64_t subtract) {
  FixedRowsResult r;
  r.lambdaReal = lambdaReal;
  r.logB = logB;
  r.wArgument = wArgument;
  r.lambda = static_cast<std::int64_t>(std::ceil(lambdaReal)) - subtract;
  if (r.lambda < 0) r.lambda = 0;
  r.status = r.lambda > 0 ? FixedRowsStatus::Guaranteed : FixedRowsStatus::Vacuous;
  return r;
}

FixedRowsResult w_version(std::int64_t N, double logB, std::int64_t subtract) {
  check_range(logB, N);
  const double NN = static_cast<double>(N);
  // W-1 argument log b / (e N), passed as log(-x).
  const double logNegArg = std::log(-logB) - 1.0 - std::log(NN);
  const double w = lambert_wm1_from_log(logNegArg);
  return finish(NN * std::exp(1.0 + w), logB, -std::exp(logNegArg), subtract);
}

}  // namespace

double fixed_rows_log_b(std::int64_t N, const CAParams& params) {
  if (N < 0) throw DomainError("fixed-rows bounds require N >= 0");
  const DerivedQuantities d = derive(dimensions_only(params));
  return d.logBinomKT + d.logVt + static_cast<double>(N + 1) * d.log1mp - 0.5 * std::log1p(-2.0 * d.p);
}

FixedRowsResult max_lambda_fixed_rows_w(std::int64_t N, const CAParams& params) {
  return w_version(N, fixed_rows_log_b(N, params), 1);
}

FixedRowsResult max_lambda_fixed_rows_elementary(std::int64_t N, const CAParams& params) {
  const double logB = fixed_rows_log_b(N, params);
  check_range(logB, N);
  constexpr double e = std::numbers::e;
  const double NN = static_cast<double>(N);
  const double lambdaReal = NN * std::exp(-(1.0 + e * std::log(-NN / logB)) / (e - 1.0));
  return finish(lambdaReal, logB, logB / (e * NN), 1);
}

FixedRowsResult max_lambda_fixed_rows_lll(std::int64_t N, const CAParams& params) {
  const CAParams dims = dimensions_only(params);
  const DerivedQuantities d = derive(dims);
  // b' replaces C(k,t) by e (C(k,t) - C(k-t,t)).
  const double logBPrime =
      fixed_rows_log_b(N, params) - d.logBinomKT + 1.0 + log_dependent_sets(params.t, params.k);
  return w_version(N, logBPrime, 0);
}

}  // namespace calambda
