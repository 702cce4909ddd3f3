#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include "calambda/cadomain.hpp"

namespace calambda::detail {

/// Solution of M (1-p)^N (eN/lambda)^lambda = 1 on its decreasing side:
///   N = (lambda / log(1-p)) W-1( log(1-p) / (e M^{1/lambda}) ).
/// logMultiplier is log M.
struct WForm {
  double n = 0.0;
  double logNegArgument = 0.0;  // log(-x) for the W-1 argument x
  double w = 0.0;
};

WForm solve_w_form(double logMultiplier, std::int64_t lambda, double log1mp);

/// The same equation with W-1 replaced by its elementary lower bound:
///   lambda e / ((e-1) L) * (1 + log(1 + M^{1/lambda} / L)),  L = log(1/(1-p)).
struct ElementaryForm {
  double n = 0.0;
  double z = 0.0;
};

ElementaryForm solve_elementary_form(double logMultiplier, std::int64_t lambda, double log1mp);

/// Least N >= 0 with pred(N) true, for a predicate that is false then true.
/// Throws InternalError if pred(cap) is still false.
std::int64_t least_satisfying(const std::function<bool(std::int64_t)>& pred, std::int64_t start,
                              std::int64_t cap);

/// Upper limit for exact searches: 10 x the elementary SLJ bound.
std::int64_t exact_search_cap(const CAParams& params);

/// floor with a few ulps of slack, so a bound that is an integer in exact
/// arithmetic is not truncated to the integer below.
inline std::int64_t floor_rows(double realBound) {
  return static_cast<std::int64_t>(std::floor(realBound * (1.0 + 1e-12)));
}

}  // namespace calambda::detail
