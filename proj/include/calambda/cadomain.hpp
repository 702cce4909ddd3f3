#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace calambda {

/// Covering array parameters: strength t, columns k, alphabet size v and
/// coverage index lambda. Valid when k >= t >= 2, v >= 2, lambda >= 1.
struct CAParams {
  std::int64_t t = 2;
  std::int64_t k = 2;
  std::int64_t v = 2;
  std::int64_t lambda = 1;

  friend bool operator==(const CAParams&, const CAParams&) = default;
};

/// Throws ValidationError naming the first violated constraint.
void validate(const CAParams& params);

/// v^t as an exact integer. Validation guarantees it fits in 2^53.
std::int64_t alphabet_power(const CAParams& params);

/// The shared symbols of the first-moment analysis.
struct DerivedQuantities {
  double p = 0.0;           // v^-t, probability a random row realizes an interaction
  double log1mp = 0.0;      // log(1 - p) (negative)
  double a = 0.0;           // sqrt(((1-p)^{2 lambda} - p^{2 lambda}) / (1 - 2p))
  double logA = 0.0;        // log a, evaluated without forming p^{2 lambda}
  double logBinomKT = 0.0;  // log C(k, t)
  double logVt = 0.0;       // t log v
  double vt = 0.0;          // v^t
};

DerivedQuantities derive(const CAParams& params);

/// log C(n, r) for integers 0 <= r <= n. Small r is summed term by term, so
/// the result keeps full relative precision even at n ~ 1e10.
double log_binomial(std::int64_t n, std::int64_t r);

/// log of the generalized binomial Gamma(n+1) / (Gamma(r+1) Gamma(n-r+1)) for
/// real n > r - 1.
double log_binomial_real(double n, std::int64_t r);

/// log sum_{i < lambda} C(N, i) p^i (1-p)^{N-i}, the probability that a fixed
/// interaction is covered fewer than lambda times by N uniform rows.
double log_binomial_tail(std::int64_t N, std::int64_t lambda, double p);

/// Same sum with real N and gamma-generalized binomials (requires N > lambda - 2).
double log_binomial_tail_real(double N, std::int64_t lambda, double p);

/// log P(Bin(N, p) = i).
double log_binomial_pmf(std::int64_t N, std::int64_t i, double p);

/// log(exp(a) + exp(b)) without overflow.
double log_add(double a, double b);

/// log(C(k, t) - C(k - t, t)), the number of t-sets meeting a fixed t-set.
/// C(k - t, t) is zero when k < 2t.
double log_dependent_sets(std::int64_t t, std::int64_t k);

enum class Method {
  SljExactMin,
  SljUpperW,
  SljUpperElementary,
  LllExactMin,
  LllUpperW,
  LllUpperElementary,
  TwoStageL2W,
  TwoStageL2Elementary,
  TwoStageExactMin,
  TwoStageGeneralW,
  TwoStageGeneralElementary,
  ColoringBoundMin,
};

std::string_view method_name(Method method);

/// An upper bound on CAN_lambda(t, k, v) with the intermediates that produced it.
struct BoundResult {
  Method method = Method::SljExactMin;
  double realBound = 0.0;
  std::int64_t rows = 0;
  std::map<std::string, double> diagnostics;
};

}  // namespace calambda
