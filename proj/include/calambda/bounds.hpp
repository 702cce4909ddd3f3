#pragma once

// Upper bounds on the covering array number CAN_lambda(t, k, v).
//
// Three families share the same first-moment machinery:
//   * SLJ: a uniformly random N x k array has fewer than one expected
//     deficient interaction;
//   * LLL: the symmetric local lemma over column t-sets;
//   * two-stage: a random first stage followed by explicit completion rows,
//     optionally packed by coloring an incompatibility graph.
// Each family comes as an exact integer search, a Lambert W-1 closed form and
// an elementary closed form that replaces W-1 by its lower bound.
//
// All arithmetic runs in the log domain: C(k, t) v^t at k = 1e10 is far out
// of double range. Real bounds are truncated with floor.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "calambda/cadomain.hpp"
#include "calambda/errors.hpp"

namespace calambda {

// Stein-Lovasz-Johnson family.

/// Least N with C(k,t) v^t P(Bin(N,p) < lambda) < 1.
BoundResult slj_exact_min(const CAParams& params);
BoundResult slj_upper_w(const CAParams& params);
BoundResult slj_upper_elementary(const CAParams& params);

// Local lemma family. Dependency count d = C(k,t) - C(k-t,t) - 1.

/// Least N with e (C(k,t) - C(k-t,t)) v^t P(Bin(N,p) < lambda) <= 1.
BoundResult lll_exact_min(const CAParams& params);
BoundResult lll_upper_w(const CAParams& params);
BoundResult lll_upper_elementary(const CAParams& params);

// Two-stage family.

/// lambda = 2 only. First stage size m from the stationary point of the
/// two-stage objective, expressed through W-1. Throws DomainError when the
/// W-1 argument leaves (-1/e, 0), which happens for k = t.
BoundResult two_stage_l2_w(const CAParams& params);
BoundResult two_stage_l2_elementary(const CAParams& params);

/// N + lambda C(k,t) v^t P(Bin(N,p) < lambda) at real N (gamma binomials).
double two_stage_objective(const CAParams& params, double N);

/// d/dN of the two-stage objective at integer N, with harmonic-number
/// derivatives of C(N, i). Used only to bracket the exact argmin.
double two_stage_derivative(const CAParams& params, std::int64_t N);

/// Minimizes the two-stage objective over integer N >= 0.
BoundResult two_stage_exact_min(const CAParams& params);
BoundResult two_stage_general_w(const CAParams& params);
BoundResult two_stage_general_elementary(const CAParams& params);

// Graph-coloring second stage.

/// sum_{j < lambda} C(N, j) x^-j (1 - 1/x)^{N-j}, for x > 1.
double coloring_f(double x, std::int64_t N, std::int64_t lambda);

/// Expected number of edges of the incompatibility graph left by a uniform
/// random N-row first stage (exact expectation, see coloring bound notes in
/// the implementation).
double coloring_expected_edges(const CAParams& params, std::int64_t N);

/// The closed form r = 1/2 C(k,t) v^t sum_i C(t,i) C(k-t,t-i) (v^t - v^{t-i})
/// f(v^t) f(v^t - v^{t-i}). Agrees with coloring_expected_edges at N = 0 for
/// lambda = 1 only; kept for comparison.
double coloring_expected_edges_closed_form(const CAParams& params, std::int64_t N);

/// Number of incompatible partners of one interaction:
/// sum_{i=1}^t C(t,i) C(k-t,t-i) (v^t - v^{t-i}), as a log.
double log_incompatible_partners(const CAParams& params);

/// 1/2 + sqrt(2r + 1/4).
double coloring_chromatic_upper(double r);

/// Approximate first-stage objective N + sqrt(q) N^lambda (1 - 1/v^t)^{N+1}.
double coloring_approx_objective(const CAParams& params, double N);

/// Minimizes N + coloring_chromatic_upper(coloring_expected_edges(N)).
/// Diagnostics carry both the exact argmin and the argmin of the approximate
/// objective.
BoundResult coloring_bound_min(const CAParams& params);

// Largest lambda guaranteed for a fixed number of rows.

enum class FixedRowsStatus { Guaranteed, Vacuous };

struct FixedRowsResult {
  std::int64_t lambda = 0;
  FixedRowsStatus status = FixedRowsStatus::Vacuous;
  double lambdaReal = 0.0;
  double logB = 0.0;
  double wArgument = 0.0;
};

/// Why the fixed-rows precondition 1/e^N < b < 1 fails.
enum class RowsRangeIssue { BelowExpMinusN, AtLeastOne };

class RowsRangeError : public DomainError {
 public:
  RowsRangeError(RowsRangeIssue issue, const std::string& what)
      : DomainError(what), issue_(issue) {}
  RowsRangeIssue issue() const noexcept { return issue_; }

 private:
  RowsRangeIssue issue_;
};

/// The params' lambda field is ignored (only t, k, v are used).
FixedRowsResult max_lambda_fixed_rows_w(std::int64_t N, const CAParams& params);
FixedRowsResult max_lambda_fixed_rows_elementary(std::int64_t N, const CAParams& params);
FixedRowsResult max_lambda_fixed_rows_lll(std::int64_t N, const CAParams& params);

/// log b = log(C(k,t) v^t (1-p)^{N+1} / sqrt(1-2p)).
double fixed_rows_log_b(std::int64_t N, const CAParams& params);

// Dispatch.

std::optional<Method> parse_method(std::string_view name);

/// Methods that apply to params, in tie-break order: exact searches first,
/// then W forms, then elementary forms.
std::vector<Method> applicable_methods(const CAParams& params);

BoundResult evaluate_bound(Method method, const CAParams& params);

/// Smallest rows over every applicable method (ties go to the earlier method
/// in applicable_methods order).
BoundResult best_bound(const CAParams& params);

/// Same, restricted to the given methods (in the given tie-break order).
/// Methods that do not apply (lambda-2 forms at other lambda, W arguments out
/// of range) are skipped.
BoundResult best_bound(const CAParams& params, std::span<const Method> methods);

}  // namespace calambda
