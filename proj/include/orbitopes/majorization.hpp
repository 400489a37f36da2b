#pragma once

#include <Eigen/Dense>

namespace orbitopes::majorization {

using Vec = Eigen::VectorXd;

/// Outcome of a polytope inequality system.  worst_slack is the minimum of
/// RHS - LHS over the checked inequalities; for strict majorization the sum
/// equality enters as -|residual|.  holds iff worst_slack >= -tol.
struct MajorizationVerdict {
    bool holds = false;
    double worst_slack = 0.0;
    /// Smallest inequality slack alone, without the equality residual.
    /// Membership oracles over an affine slice use this as their margin.
    double inequality_slack = 0.0;
    double equality_residual = 0.0;
};

constexpr double kDefaultTol = 1e-9;

/// q majorized by p: equal sums and sorted partial sums of q dominated by
/// those of p.  O(n log n) via sorting.
MajorizationVerdict majorizes(const Vec& p, const Vec& q, double tol = kDefaultTol);

/// |q| weakly majorized by |p|: sorted absolute partial sums dominated for
/// every k = 1..n, no sum equality.
MajorizationVerdict weak_abs_majorizes(const Vec& p, const Vec& q, double tol = kDefaultTol);

/// Halfcube membership: |x_i| <= 1 and, for every odd-cardinality J,
/// sum_{i not in J} x_i - sum_{i in J} x_i <= n - 2.  The binding odd set is
/// found by sorting, O(n log n).
MajorizationVerdict halfcube_contains(const Vec& x, double tol = kDefaultTol);

}  // namespace orbitopes::majorization
