// Two-stage bound with a graph-coloring second stage.
//
// After a uniform random first stage of N rows, every interaction I covered
// d(I) < lambda times contributes vertices (I, r) for d(I) < r <= lambda.
// Vertices are adjacent when they share an interaction or carry incompatible
// interactions (a shared column holding different symbols). A proper coloring
// with c colors completes the array with c rows, and
// chi(G) <= 1/2 + sqrt(2|E| + 1/4). That bound is concave in |E|, so the
// expected size of the completed array is at most N + 1/2 + sqrt(2 E|E| + 1/4).
//
// E|E| has two parts, both independent of the shared-column structure:
//   * replica edges of a single interaction: E C(lambda - d, 2);
//   * cross edges of an incompatible pair: two incompatible interactions
//     can never appear in the same row, so their coverage counts (a, b) are
//     multinomial(N; p, p, 1 - 2p) and each pair contributes
//     E[(lambda - a)^+ (lambda - b)^+].

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "bounds_internal.hpp"
#include "calambda/bounds.hpp"
#include "calambda/errors.hpp"

namespace calambda {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_expected_edges(const CAParams& params, const DerivedQuantities& d, std::int64_t N) {
  const std::int64_t lambda = params.lambda;
  const double logp = std::log(d.p);
  const double log1m2p = std::log1p(-2.0 * d.p);

  double logSame = kNegInf;
  for (std::int64_t c = 0; c < lambda && c <= N; ++c) {
    const std::int64_t missing = lambda - c;
    if (missing < 2) continue;
    const double pairs = static_cast<double>(missing) * static_cast<double>(missing - 1) / 2.0;
    logSame = log_add(logSame, log_binomial_pmf(N, c, d.p) + std::log(pairs));
  }

  double logCross = kNegInf;
  for (std::int64_t a = 0; a < lambda && a <= N; ++a) {
    for (std::int64_t b = 0; b < lambda && a + b <= N; ++b) {
      const double logMultinomial = log_binomial(N, a + b) + log_binomial(a + b, a);
      const double weight = static_cast<double>(lambda - a) * static_cast<double>(lambda - b);
      const double logTerm = logMultinomial + static_cast<double>(a + b) * logp +
                             static_cast<double>(N - a - b) * log1m2p + std::log(weight);
      logCross = log_add(logCross, logTerm);
    }
  }
  logCross += log_incompatible_partners(params) - std::log(2.0);

  return d.logBinomKT + d.logVt + log_add(logSame, logCross);
}

double chromatic_objective(const CAParams& params, const DerivedQuantities& d, std::int64_t N) {
  const double logR = log_expected_edges(params, d, N);
  return static_cast<double>(N) + 0.5 + std::sqrt(2.0 * std::exp(logR) + 0.25);
}

double log_q(const CAParams& params, const DerivedQuantities& d) {
  const std::int64_t t = params.t;
  const std::int64_t k = params.k;
  if (k <= 2 * t) return kNegInf;
  const double lambdaD = static_cast<double>(params.lambda);
  // k! (k-2t)! / ((k-t)!)^2 - 1, through prod_{j<t} (1 + t / (k - t - j)).
  double logRatio = 0.0;
  for (std::int64_t j = 0; j < t; ++j)
    logRatio += std::log1p(static_cast<double>(t) / static_cast<double>(k - t - j));
  const double logExcess = std::log(std::expm1(logRatio));
  return d.logBinomKT + 2.0 * d.logVt - std::log(2.0) + 2.0 * lambdaD - 2.0 * lambdaD * std::log(lambdaD) +
         std::log(static_cast<double>(k - 2 * t)) + log_binomial(k - t, t - 1) + logExcess -
         std::log(static_cast<double>(t));
}

double approx_objective(const CAParams& params, const DerivedQuantities& d, double N) {
  const double lq = log_q(params, d);
  if (lq == kNegInf || N <= 0.0) return N;
  return N + std::exp(0.5 * lq + static_cast<double>(params.lambda) * std::log(N) + (N + 1.0) * d.log1mp);
}

// Integer minimizer of f on [lo, hi]. Exhaustive when the range is short;
// otherwise a coarse grid locates the basin and a ternary search refines it.
std::int64_t minimize_on(const std::function<double(std::int64_t)>& f, std::int64_t lo, std::int64_t hi) {
  constexpr std::int64_t kScanLimit = 4096;
  constexpr std::int64_t kSamples = 512;
  auto scan = [&](std::int64_t a, std::int64_t b) {
    std::int64_t best = a;
    double bestValue = f(a);
    for (std::int64_t n = a + 1; n <= b; ++n) {
      const double value = f(n);
      if (value < bestValue) {
        bestValue = value;
        best = n;
      }
    }
    return best;
  };
  if (hi - lo <= kScanLimit) return scan(lo, hi);

  std::vector<std::int64_t> grid;
  for (std::int64_t i = 0; i <= kSamples; ++i) grid.push_back(lo + (hi - lo) * i / kSamples);
  std::size_t bestIdx = 0;
  double bestValue = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double value = f(grid[i]);
    if (value < bestValue) {
      bestValue = value;
      bestIdx = i;
    }
  }
  std::int64_t a = grid[bestIdx == 0 ? 0 : bestIdx - 1];
  std::int64_t b = grid[std::min(bestIdx + 1, grid.size() - 1)];
  while (b - a > 8) {
    const std::int64_t m1 = a + (b - a) / 3;
    const std::int64_t m2 = b - (b - a) / 3;
    if (f(m1) <= f(m2)) b = m2;
    else a = m1;
  }
  return scan(a, b);
}

}  // namespace

double coloring_f(double x, std::int64_t N, std::int64_t lambda) {
  if (!(x > 1.0)) throw DomainError("coloring_f requires x > 1");
  if (N < 0) throw DomainError("coloring_f requires N >= 0");
  return std::exp(log_binomial_tail(N, lambda, 1.0 / x));
}

double log_incompatible_partners(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  double acc = kNegInf;
  for (std::int64_t i = 1; i <= params.t; ++i) {
    if (params.t - i > params.k - params.t) continue;
    // v^t - v^{t-i} = v^t (1 - v^{-i})
    const double logIncompatibleTuples =
        d.logVt + std::log1p(-std::pow(static_cast<double>(params.v), -static_cast<double>(i)));
    acc = log_add(acc, log_binomial(params.t, i) + log_binomial(params.k - params.t, params.t - i) +
                           logIncompatibleTuples);
  }
  return acc;
}

double coloring_expected_edges(const CAParams& params, std::int64_t N) {
  if (N < 0) throw DomainError("coloring_expected_edges requires N >= 0");
  const DerivedQuantities d = derive(params);
  return std::exp(log_expected_edges(params, d, N));
}

double coloring_expected_edges_closed_form(const CAParams& params, std::int64_t N) {
  if (N < 0) throw DomainError("coloring_expected_edges_closed_form requires N >= 0");
  const DerivedQuantities d = derive(params);
  const double fFull = coloring_f(d.vt, N, params.lambda);
  double sum = 0.0;
  for (std::int64_t i = 1; i <= params.t; ++i) {
    if (params.t - i > params.k - params.t) continue;
    const double vti = std::pow(static_cast<double>(params.v), static_cast<double>(params.t - i));
    const double x = d.vt - vti;
    const double combos =
        std::exp(log_binomial(params.t, i) + log_binomial(params.k - params.t, params.t - i));
    sum += combos * x * fFull * coloring_f(x, N, params.lambda);
  }
  return 0.5 * std::exp(d.logBinomKT + d.logVt) * sum;
}

double coloring_chromatic_upper(double r) {
  if (!(r >= 0.0)) throw DomainError("coloring_chromatic_upper requires r >= 0");
  return 0.5 + std::sqrt(2.0 * r + 0.25);
}

double coloring_approx_objective(const CAParams& params, double N) {
  return approx_objective(params, derive(params), N);
}

BoundResult coloring_bound_min(const CAParams& params) {
  const DerivedQuantities d = derive(params);
  const std::int64_t cap = detail::exact_search_cap(params);

  // Past the first N with r(N) < 1 every extra row costs more than the
  // remaining drop of the chromatic term.
  std::int64_t hi = std::max<std::int64_t>(params.lambda, 1);
  while (log_expected_edges(params, d, hi) >= 0.0) {
    if (hi >= cap) throw InternalError("coloring_bound_min: search exceeded cap");
    hi = std::min(hi * 2, cap);
  }
  auto exact = [&](std::int64_t N) { return chromatic_objective(params, d, N); };
  const std::int64_t argmin = minimize_on(exact, 0, hi + 1);

  // The approximate objective vanishes at N = 0; its meaningful minimizer is
  // the local one past the peak of N^lambda (1-p)^N.
  std::int64_t approxArgmin = 0;
  if (log_q(params, d) != kNegInf) {
    const double L = -d.log1mp;
    const auto peak = static_cast<std::int64_t>(std::ceil(static_cast<double>(params.lambda) / L));
    std::int64_t approxHi = std::max<std::int64_t>(2 * peak, 1);
    while (approx_objective(params, d, static_cast<double>(approxHi)) -
               static_cast<double>(approxHi) >= 1.0 && approxHi < cap)
      approxHi *= 2;
    auto approx = [&](std::int64_t N) { return approx_objective(params, d, static_cast<double>(N)); };
    approxArgmin = minimize_on(approx, peak, approxHi);
  }

  BoundResult r;
  r.method = Method::ColoringBoundMin;
  r.realBound = exact(argmin);
  r.rows = detail::floor_rows(r.realBound);
  r.diagnostics["argmin_N"] = static_cast<double>(argmin);
  r.diagnostics["expected_edges"] = std::exp(log_expected_edges(params, d, argmin));
  r.diagnostics["approx_argmin_N"] = static_cast<double>(approxArgmin);
  r.diagnostics["log_q"] = log_q(params, d);
  r.diagnostics["objective_at_approx_argmin"] = exact(approxArgmin);
  return r;
}

}  // namespace calambda
