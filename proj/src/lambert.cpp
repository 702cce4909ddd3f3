#include "calambda/lambert.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "calambda/errors.hpp"

namespace calambda {
namespace {

constexpr int kMaxIterations = 100;
constexpr double kStepTol = 1e-14;
constexpr double kBranchSnap = 1e-12;
// Below this magnitude W-1 is iterated in log form.
constexpr double kTinyArgument = 1e-13;

double distance_to_branch(double x) { return x - kLambertBranchPoint; }

// Halley refinement of w e^w = x. Returns NaN if the iteration blows up.
double halley(double w, double x) {
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) return w;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double step = f / denom;
    w -= step;
    if (!std::isfinite(w)) return std::numeric_limits<double>::quiet_NaN();
    if (std::abs(step) <= kStepTol * std::abs(w)) return w;
  }
  return w;
}

// Bisection on a bracket [lo, hi] where w e^w - x changes sign.
double bisect(double lo, double hi, double x) {
  double flo = lo * std::exp(lo) - x;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fmid = mid * std::exp(mid) - x;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool residual_ok(double w, double x, double tol) {
  return std::abs(w * std::exp(w) - x) <= tol * std::max(std::abs(x), 1.0);
}

// Expansion around the branch point in p = +-sqrt(2(ex + 1)).
double branch_series(double x, double sign) {
  const double q = 2.0 * std::numbers::e * distance_to_branch(x);
  const double p = sign * std::sqrt(std::max(q, 0.0));
  return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("lambert: tolerance must be positive");
}

}  // namespace

double lambert_w0(double x, double tol) {
  check_tol(tol);
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (distance_to_branch(x) < -kBranchSnap)
    throw DomainError("lambert_w0: argument " + std::to_string(x) + " is below -1/e");
  if (distance_to_branch(x) <= kBranchSnap) return -1.0;
  if (x == 0.0) return 0.0;

  double guess;
  if (x < -0.25) {
    guess = branch_series(x, 1.0);
  } else if (x < 3.0) {
    guess = std::log1p(x);
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    guess = l1 - l2 + l2 / l1;
  }
  double w = halley(guess, x);
  if (!std::isfinite(w) || w < -1.0 || !residual_ok(w, x, tol)) {
    w = bisect(-1.0, std::max(1.0, x), x);
  }
  return w;
}

double lambert_wm1(double x, double tol) {
  check_tol(tol);
  if (std::isnan(x)) throw DomainError("lambert_wm1: NaN argument");
  if (x >= 0.0) throw DomainError("lambert_wm1: argument must be negative");
  if (distance_to_branch(x) < -kBranchSnap)
    throw DomainError("lambert_wm1: argument " + std::to_string(x) + " is below -1/e");
  if (distance_to_branch(x) <= kBranchSnap) return -1.0;
  if (x > -kTinyArgument) return lambert_wm1_from_log(std::log(-x));

  double guess;
  if (x < -0.25) {
    guess = branch_series(x, -1.0);
  } else {
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    guess = l1 - l2 + l2 / l1;
  }
  double w = halley(guess, x);
  if (!std::isfinite(w) || w > -1.0 || !residual_ok(w, x, tol)) {
    double lo = std::min(guess, -2.0);
    while (lo * std::exp(lo) <= x) lo *= 2.0;
    w = bisect(lo, -1.0, x);
  }
  return w;
}

double lambert_wm1_from_log(double logNegX) {
  if (std::isnan(logNegX)) throw DomainError("lambert_wm1_from_log: NaN argument");
  if (logNegX > -1.0 + 1e-15)
    throw DomainError("lambert_wm1_from_log: log(-x) = " + std::to_string(logNegX) +
                      " exceeds -1, argument below -1/e");
  if (logNegX > std::log(kTinyArgument)) return lambert_wm1(-std::exp(logNegX));

  // Solve h(w) = w + log(-w) - logNegX = 0 on w < -1.
  double w = logNegX - std::log(-logNegX);
  for (int i = 0; i < kMaxIterations; ++i) {
    const double h = w + std::log(-w) - logNegX;
    const double h1 = 1.0 + 1.0 / w;
    const double h2 = -1.0 / (w * w);
    const double step = (h / h1) / (1.0 - h * h2 / (2.0 * h1 * h1));
    w -= step;
    if (std::abs(step) <= kStepTol * std::abs(w)) break;
  }
  return w;
}

double lambert_w(WBranch branch, double x, double tol) {
  return branch == WBranch::Principal ? lambert_w0(x, tol) : lambert_wm1(x, tol);
}

double wm1_lower_bound(double z) {
  if (!(z >= 0.0)) throw DomainError("wm1_lower_bound: z must be >= 0");
  constexpr double alpha = std::numbers::e / (std::numbers::e - 1.0);
  return -alpha * (z + 1.0);
}

}  // namespace calambda
