#include "calambda/cadomain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "calambda/errors.hpp"

namespace calambda {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::int64_t kDirectSumLimit = 1000;

double log_sum_exp(const std::vector<double>& terms) {
  double hi = kNegInf;
  for (double x : terms) hi = std::max(hi, x);
  if (hi == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double x : terms) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

void check_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("probability p must lie in (0, 1)");
}

}  // namespace

void validate(const CAParams& params) {
  auto fail = [](const std::string& msg) { throw ValidationError(msg); };
  if (params.t < 2) fail("t >= 2 violated (t = " + std::to_string(params.t) + ")");
  if (params.k < params.t)
    fail("k >= t violated (k = " + std::to_string(params.k) + ", t = " + std::to_string(params.t) + ")");
  if (params.v < 2) fail("v >= 2 violated (v = " + std::to_string(params.v) + ")");
  if (params.lambda < 1) fail("lambda >= 1 violated (lambda = " + std::to_string(params.lambda) + ")");
  if (static_cast<double>(params.t) * std::log2(static_cast<double>(params.v)) > 53.0)
    fail("v^t <= 2^53 violated (t log2 v = " +
         std::to_string(static_cast<double>(params.t) * std::log2(static_cast<double>(params.v))) + ")");
}

std::int64_t alphabet_power(const CAParams& params) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < params.t; ++i) out *= params.v;
  return out;
}

DerivedQuantities derive(const CAParams& params) {
  validate(params);
  DerivedQuantities d;
  d.vt = static_cast<double>(alphabet_power(params));
  d.p = 1.0 / d.vt;
  d.log1mp = std::log1p(-d.p);
  d.logVt = static_cast<double>(params.t) * std::log(static_cast<double>(params.v));
  d.logBinomKT = log_binomial(params.k, params.t);
  if (params.lambda == 1) {
    d.logA = 0.0;
    d.a = 1.0;
  } else {
    const double twoLambda = 2.0 * static_cast<double>(params.lambda);
    const double ratio = std::exp(twoLambda * (std::log(d.p) - d.log1mp));
    d.logA = 0.5 * (std::log1p(-ratio) + twoLambda * d.log1mp - std::log1p(-2.0 * d.p));
    d.a = std::exp(d.logA);
  }
  return d;
}

double log_binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) throw DomainError("log_binomial requires 0 <= r <= n");
  const std::int64_t m = std::min(r, n - r);
  if (m == 0) return 0.0;
  if (m <= kDirectSumLimit) {
    double acc = 0.0;
    for (std::int64_t j = 0; j < m; ++j) acc += std::log(static_cast<double>(n - j));
    return acc - std::lgamma(static_cast<double>(m) + 1.0);
  }
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) - std::lgamma(nd - md + 1.0);
}

double log_binomial_real(double n, std::int64_t r) {
  if (r < 0) throw DomainError("log_binomial_real requires r >= 0");
  if (r == 0) return 0.0;
  if (!(n > static_cast<double>(r) - 1.0))
    throw DomainError("log_binomial_real requires n > r - 1");
  double acc = 0.0;
  for (std::int64_t j = 0; j < r; ++j) acc += std::log(n - static_cast<double>(j));
  return acc - std::lgamma(static_cast<double>(r) + 1.0);
}

double log_binomial_pmf(std::int64_t N, std::int64_t i, double p) {
  check_p(p);
  if (i < 0 || i > N) return kNegInf;
  return log_binomial(N, i) + static_cast<double>(i) * std::log(p) +
         static_cast<double>(N - i) * std::log1p(-p);
}

double log_binomial_tail(std::int64_t N, std::int64_t lambda, double p) {
  check_p(p);
  if (N < 0) throw DomainError("log_binomial_tail requires N >= 0");
  if (lambda < 1) throw DomainError("log_binomial_tail requires lambda >= 1");
  const std::int64_t top = std::min(lambda - 1, N);
  const double logp = std::log(p);
  const double log1mp = std::log1p(-p);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(top + 1));
  double logC = 0.0;
  for (std::int64_t i = 0; i <= top; ++i) {
    if (i > 0) logC += std::log(static_cast<double>(N - i + 1)) - std::log(static_cast<double>(i));
    terms.push_back(logC + static_cast<double>(i) * logp + static_cast<double>(N - i) * log1mp);
  }
  return std::min(log_sum_exp(terms), 0.0);
}

double log_binomial_tail_real(double N, std::int64_t lambda, double p) {
  check_p(p);
  if (lambda < 1) throw DomainError("log_binomial_tail_real requires lambda >= 1");
  if (!(N > static_cast<double>(lambda) - 2.0))
    throw DomainError("log_binomial_tail_real requires N > lambda - 2");
  const double logp = std::log(p);
  const double log1mp = std::log1p(-p);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(lambda));
  double logC = 0.0;
  for (std::int64_t i = 0; i < lambda; ++i) {
    if (i > 0) logC += std::log(N - static_cast<double>(i) + 1.0) - std::log(static_cast<double>(i));
    terms.push_back(logC + static_cast<double>(i) * logp + (N - static_cast<double>(i)) * log1mp);
  }
  return log_sum_exp(terms);
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double log_dependent_sets(std::int64_t t, std::int64_t k) {
  const double logC = log_binomial(k, t);
  if (k < 2 * t) return logC;
  // C(k-t, t) / C(k, t) = prod_{j<t} (1 - t / (k - j))
  double logRatio = 0.0;
  for (std::int64_t j = 0; j < t; ++j)
    logRatio += std::log1p(-static_cast<double>(t) / static_cast<double>(k - j));
  return logC + std::log(-std::expm1(logRatio));
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::SljExactMin: return "slj_exact_min";
    case Method::SljUpperW: return "slj_upper_w";
    case Method::SljUpperElementary: return "slj_upper_elementary";
    case Method::LllExactMin: return "lll_exact_min";
    case Method::LllUpperW: return "lll_upper_w";
    case Method::LllUpperElementary: return "lll_upper_elementary";
    case Method::TwoStageL2W: return "two_stage_l2_w";
    case Method::TwoStageL2Elementary: return "two_stage_l2_elementary";
    case Method::TwoStageExactMin: return "two_stage_exact_min";
    case Method::TwoStageGeneralW: return "two_stage_general_w";
    case Method::TwoStageGeneralElementary: return "two_stage_general_elementary";
    case Method::ColoringBoundMin: return "coloring_bound_min";
  }
  return "unknown";
}

}  // namespace calambda
