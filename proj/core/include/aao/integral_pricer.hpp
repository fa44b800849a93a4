#pragma once

#include "aao/boundary_curve.hpp"
#include "aao/model.hpp"

namespace aao {

/// American value split into its European part and the early exercise bonus.
struct PriceDecomposition {
    double european = 0.0;
    double premium = 0.0;
    double total = 0.0;  ///< european + premium
};

/// European value v~(t, x) in the reduced variable x = A/S, discounted form
/// e^{-qt} V_eu / S. Geometric and arithmetic averaging only; at the
/// degenerate limit beta -> 0 the payoff e^{-qT} (rho (1 - x))^+ is returned.
double european_value(double t, double x, const ModelParams& params,
                      const AveragingSpec& avg, OptionType kind);

/// Early exercise premium e~(t, x): quadrature over u in (t, T] of the
/// closed-form integrand against the boundary x*_u. The boundary must cover
/// [t, T]. A sqrt(u - t) substitution resolves the beta -> 0 endpoint; the
/// integrand there degenerates to the indicator-weighted exercise bonus.
double exercise_premium(double t, double x, const BoundaryCurve& boundary,
                        const ModelParams& params, const AveragingSpec& avg,
                        OptionType kind, int quad_nodes = 512);

PriceDecomposition price_decomposition(double t, double x, const BoundaryCurve& boundary,
                                       const ModelParams& params, const AveragingSpec& avg,
                                       OptionType kind, int quad_nodes = 512);

/// Original-variable price V(t, S, A) = S e^{qt} (v~ + e~) at x = A/S.
double option_value_original(double t, double S, double A, const ModelParams& params,
                             const AveragingSpec& avg, OptionType kind,
                             const BoundaryCurve& boundary, int quad_nodes = 512);

/// Residual R(t) = 1 + vhat_x(t, x*_t) + int_t^T ehat_Ix(t, x*_t, u, x*_u) du
/// of the integral smooth-pasting equation for the call boundary. R vanishes
/// when the curve satisfies the equation.
double smooth_pasting_residual(double t, const BoundaryCurve& boundary,
                               const ModelParams& params, const AveragingSpec& avg,
                               int quad_nodes = 512);

}  // namespace aao
