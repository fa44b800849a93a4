#pragma once

#include <vector>

namespace aao {

/// Discretized early exercise boundary, stored as rho(tau) = 1 / x*_{T-tau}
/// on a strictly increasing tau grid. Values between nodes are linear in
/// (tau, rho).
struct BoundaryCurve {
    std::vector<double> taus;  ///< in [0, maturity], strictly increasing, front() == 0
    std::vector<double> rhos;  ///< positive
    double maturity = 0.0;     ///< T; x_star(t) = 1 / rho(T - t)

    void validate() const;

    /// Linear interpolation of rho at tau; throws outside the covered range
    /// (a 1e-9 * T slack absorbs endpoint roundoff).
    double rho(double tau) const;

    /// Boundary in x = A/S coordinates at calendar time t.
    double x_star(double t) const;

    /// Smallest calendar time covered by the curve, T - taus.back().
    double earliest_time() const { return maturity - taus.back(); }

    /// true iff the curve covers [t, T].
    bool covers(double t) const;
};

/// Curve with constant boundary value x*, covering [0, T].
BoundaryCurve constant_boundary(double x_star_value, double maturity, int nodes = 2);

}  // namespace aao
