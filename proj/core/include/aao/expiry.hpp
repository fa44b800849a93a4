#pragma once

#include "aao/model.hpp"

#include <vector>

namespace aao {

/// Which case of the expiry-limit classification produced the value: the
/// interior root (InTheMoney) or the clamp at x = 1 (AtTheMoney).
enum class ExpiryBranch { InTheMoney, AtTheMoney };

struct ExpiryLimit {
    double x_star_T = 0.0;
    ExpiryBranch branch = ExpiryBranch::InTheMoney;
};

/// Boundary position x*_T at expiry in x = A/S coordinates. Calls are capped
/// at 1 from above, puts floored at 1 from below.
ExpiryLimit expiry_limit(const ModelParams& params, const AveragingSpec& avg,
                         OptionType kind);

/// Root x~ of ln(x) = qT/x - rT, bracketed on (0, max(1, q/r) + 1], solved to
/// residual 1e-12 by bisection followed by Newton.
double solve_geometric_transcendental(const ModelParams& params);

/// Universal slope constant h* of the sqrt(T-t) boundary expansion, the root
/// of 1 - I1(h) + h I2(h) = 0 where I1, I2 integrate the normal CDF/density
/// against the (1 - sqrt(1-theta))/sqrt(theta) kernel over theta in [0,1].
/// The substitution theta = s^2 removes the endpoint singularity.
double solve_h_star(int quadrature_points = 512);

/// Right-hand side of the h* equation; exposed for monotonicity checks.
double h_equation_rhs(double h, int quadrature_points = 512);

/// First-order coefficients of x*(t) ~= G (1 + h* sigma sqrt(T-t)).
struct AsymptoteCoefficients {
    double G = 0.0;       ///< expiry limit of the call boundary
    double h_star = 0.0;  ///< < 0
    double sigma = 0.0;

    double value(double T, double t) const;
};

/// Requires r > q >= 0 and arithmetic or geometric averaging; the expansion
/// is a call-side result.
AsymptoteCoefficients asymptote_coefficients(const ModelParams& params,
                                             const AveragingSpec& avg);

/// x*(t) from the first-order expansion; t in [0, T].
double boundary_asymptote(const ModelParams& params, const AveragingSpec& avg, double t);

/// Rectangular grid of expiry limits over (r, q), row-major in q then r.
struct ExpiryLimitGrid {
    std::vector<double> r_values;
    std::vector<double> q_values;
    std::vector<double> x_star;  ///< x_star[iq * r_values.size() + ir]

    double at(std::size_t ir, std::size_t iq) const {
        return x_star[iq * r_values.size() + ir];
    }
};

ExpiryLimitGrid expiry_limit_sweep(double r_min, double r_max, double q_min, double q_max,
                                   int steps_r, int steps_q, const ModelParams& base,
                                   const AveragingSpec& avg, OptionType kind);

}  // namespace aao
