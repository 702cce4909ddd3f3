#pragma once

// Real branches of the Lambert W function, the inverse of w -> w * exp(w).
//
// On (-1/e, 0) there are two real solutions. W0 (principal) takes values in
// [-1, 0) there and extends to [0, inf) for x >= 0; W-1 takes values in
// (-inf, -1].

namespace calambda {

enum class WBranch { Principal, NegativeOne };

inline constexpr double kLambertDefaultTol = 1e-12;

/// -1/e rounded to the nearest double.
inline constexpr double kLambertBranchPoint = -0.36787944117144233;

/// Principal branch. Requires x >= -1/e; the result satisfies
/// |w e^w - x| <= tol * max(|x|, 1) and w >= -1.
double lambert_w0(double x, double tol = kLambertDefaultTol);

/// Lower branch. Requires -1/e <= x < 0; the result satisfies
/// |w e^w - x| <= tol * max(|x|, 1) and w <= -1.
double lambert_wm1(double x, double tol = kLambertDefaultTol);

/// W-1(-exp(logNegX)) for logNegX <= -1. Arguments too close to zero to be
/// represented as a double (every bound at k ~ 1e10 produces one) are
/// handled by iterating on w + log(-w) = logNegX instead.
double lambert_wm1_from_log(double logNegX);

double lambert_w(WBranch branch, double x, double tol = kLambertDefaultTol);

/// -(e/(e-1)) * (z + 1), strictly below W-1(-exp(-z-1)) for every z >= 0.
double wm1_lower_bound(double z);

}  // namespace calambda
