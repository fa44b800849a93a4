#pragma once

#include "aao/model.hpp"

namespace aao {

/// Standard normal CDF, accurate to ~1e-16 absolute (erfc based).
double normal_cdf(double z);

/// Standard normal density.
double normal_pdf(double z);

/// Parameters of the conditioned distribution of ln x_u given time-t data:
/// ln x_u | F_t ~ N(alpha, beta^2).
struct LogNormalParams {
    double alpha = 0.0;
    double beta = 0.0;  ///< >= 0; zero exactly when u == t
};

/// First two conditioned moments of x_u given time-t data.
struct MomentPair {
    double m1 = 0.0;
    double m2 = 0.0;  ///< m2 >= m1^2 (Jensen)
};

/// The four truncated expectations of a log-normal variable Omega with
/// ln Omega ~ N(alpha, beta^2), truncation rho*Omega >= rho*K.
struct TruncatedExpectations {
    double prob;                ///< E[1]
    double mean_truncated;      ///< E[1 * Omega]
    double mean_log_truncated;  ///< E[1 * Omega ln Omega]
    double payoff_expectation;  ///< E[(rho (Omega - K))^+]
};

/// Requires beta > 0 and K > 0; rho must be +-1. Callers own the beta -> 0
/// degenerate limit.
TruncatedExpectations truncated_expectations(double alpha, double beta, double K,
                                             double rho);

/// Exact distribution parameters for the geometric average ratio x^g_u | F_t.
/// Requires 0 < t <= u.
LogNormalParams geometric_params(double t, double u, double x, const ModelParams& params);

/// First two conditioned moments of the arithmetic average ratio x^a_u | F_t.
/// The removable singularities at r - q in {0, sigma^2/2, sigma^2} are
/// evaluated by second-order series expansions once the distance to the
/// singular point falls below 1e-7.
MomentPair arithmetic_moments(double t, double u, double x, const ModelParams& params);

/// Log-normal parameters matched to the first two arithmetic moments.
LogNormalParams arithmetic_params(double t, double u, double x, const ModelParams& params);

/// Alternative arithmetic second moment whose middle term uses the plain
/// rate instead of the vol-adjusted rate, kept for side-by-side bias
/// studies against arithmetic_moments(). Only defined for q = 0.
double hj_second_moment(double t, double u, double x, const ModelParams& params);

}  // namespace aao
