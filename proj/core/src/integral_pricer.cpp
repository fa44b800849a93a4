#include "aao/integral_pricer.hpp"

#include "aao/lognormal.hpp"
#include "aao/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aao {

namespace {

constexpr double kDegenerateBeta = 1e-8;

LogNormalParams conditional_params(double t, double u, double x, const ModelParams& params,
                                   const AveragingSpec& avg) {
    switch (avg.method) {
        case AveragingMethod::Geometric: return geometric_params(t, u, x, params);
        case AveragingMethod::Arithmetic: return arithmetic_params(t, u, x, params);
        case AveragingMethod::WeightedExponential: break;
    }
    throw std::invalid_argument("integral pricer: weighted averaging is not supported");
}

void require_coverage(double t, const BoundaryCurve& boundary, const ModelParams& params) {
    boundary.validate();
    if (std::abs(boundary.maturity - params.T) > 1e-9 * params.T)
        throw std::invalid_argument("integral pricer: boundary maturity differs from params.T");
    if (!boundary.covers(t)) {
        std::ostringstream msg;
        msg << "integral pricer: boundary covers [" << boundary.earliest_time() << ", "
            << boundary.maturity << "] but t = " << t;
        throw std::out_of_range(msg.str());
    }
}

// Premium integrand at time u for state (t, x). Handles the beta -> 0 limit
// with sign logic on (alpha - ln x*): the Phi factors collapse to the
// stopping-region indicator and the integrand to the exercise bonus.
double premium_integrand(double t, double x, double u, double x_star_u,
                         const ModelParams& params, const AveragingSpec& avg, double rho) {
    const double r = params.r, q = params.q;
    const LogNormalParams p = conditional_params(t, u, x, params, avg);
    const double log_xs = std::log(x_star_u);
    const bool geometric = avg.method == AveragingMethod::Geometric;
    if (p.beta < kDegenerateBeta) {
        const bool stopping = rho * (log_xs - p.alpha) > 0.0;
        if (!stopping) return 0.0;
        const double xv = std::exp(p.alpha);
        const double bonus = geometric ? q - xv * (r + p.alpha / u)
                                       : (q + 1.0 / u) - (r + 1.0 / u) * xv;
        return rho * std::exp(-q * u) * bonus;
    }
    const double gamma = (p.alpha - log_xs) / p.beta + p.beta;
    const double mgf = std::exp(p.alpha + 0.5 * p.beta * p.beta);
    if (geometric) {
        return rho * std::exp(-q * u) *
               (q * normal_cdf(rho * (p.beta - gamma)) +
                mgf * (rho * p.beta / u * normal_pdf(gamma) -
                       (r + (p.alpha + p.beta * p.beta) / u) * normal_cdf(-rho * gamma)));
    }
    return rho * std::exp(-q * u) *
           ((q + 1.0 / u) * normal_cdf(rho * (p.beta - gamma)) -
            (r + 1.0 / u) * mgf * normal_cdf(-rho * gamma));
}

// x-derivatives of the matched log-normal parameters. For the geometric
// kernel beta does not depend on x; for the arithmetic kernel both do.
struct ParamDerivs {
    double alpha, beta, dalpha, dbeta;
};

ParamDerivs conditional_param_derivs(double t, double u, double x, const ModelParams& params,
                                     const AveragingSpec& avg) {
    ParamDerivs out{};
    if (avg.method == AveragingMethod::Geometric) {
        const LogNormalParams p = geometric_params(t, u, x, params);
        out.alpha = p.alpha;
        out.beta = p.beta;
        out.dalpha = t / (u * x);
        out.dbeta = 0.0;
        return out;
    }
    const MomentPair m = arithmetic_moments(t, u, x, params);
    const double e = params.r - params.q;
    const double s = params.sigma * params.sigma;
    const double d = u - t;
    const auto expm1_ratio = [](double z) {
        return std::abs(z) < 1e-8 ? 1.0 - 0.5 * z + z * z / 6.0 : -std::expm1(-z) / z;
    };
    const double dm1 = (t / u) * std::exp(-e * d);
    const double dm2 = 2.0 * x * t * t / (u * u) * std::exp(-2.0 * (e - 0.5 * s) * d) +
                       2.0 * t * d / (u * u) * std::exp(-e * d) * expm1_ratio((e - s) * d);
    out.alpha = 2.0 * std::log(m.m1) - 0.5 * std::log(m.m2);
    const double rad = std::log(m.m2) - 2.0 * std::log(m.m1);
    out.beta = rad > 0.0 ? std::sqrt(rad) : 0.0;
    out.dalpha = 2.0 * dm1 / m.m1 - 0.5 * dm2 / m.m2;
    if (out.beta > 0.0) out.dbeta = (dm2 / m.m2 - 2.0 * dm1 / m.m1) / (2.0 * out.beta);
    return out;
}

}  // namespace

double european_value(double t, double x, const ModelParams& params,
                      const AveragingSpec& avg, OptionType kind) {
    params.validate();
    if (!(t < params.T)) throw std::domain_error("european_value: t must be < T");
    if (!(x > 0.0)) throw std::domain_error("european_value: x must be > 0");
    const double rho = payoff_sign(kind);
    const LogNormalParams p = conditional_params(t, params.T, x, params, avg);
    const double dq = std::exp(-params.q * params.T);
    if (p.beta < kDegenerateBeta)
        return dq * std::max(rho * (1.0 - x), 0.0);
    const double ratio = p.alpha / p.beta;
    return rho * dq *
           (normal_cdf(-rho * ratio) -
            std::exp(p.alpha + 0.5 * p.beta * p.beta) * normal_cdf(-rho * (ratio + p.beta)));
}

double exercise_premium(double t, double x, const BoundaryCurve& boundary,
                        const ModelParams& params, const AveragingSpec& avg,
                        OptionType kind, int quad_nodes) {
    params.validate();
    if (!(t < params.T)) throw std::domain_error("exercise_premium: t must be < T");
    if (!(x > 0.0)) throw std::domain_error("exercise_premium: x must be > 0");
    require_coverage(t, boundary, params);
    const double rho = payoff_sign(kind);
    // u = t + w^2 resolves the beta -> 0 rate at the lower endpoint
    const double W = std::sqrt(params.T - t);
    const auto f = [&](double w) {
        const double u = t + w * w;
        return 2.0 * w *
               premium_integrand(t, x, std::min(u, params.T), boundary.x_star(std::min(u, params.T)),
                                 params, avg, rho);
    };
    return integrate_gauss_legendre(f, 0.0, W, quad_nodes);
}

PriceDecomposition price_decomposition(double t, double x, const BoundaryCurve& boundary,
                                       const ModelParams& params, const AveragingSpec& avg,
                                       OptionType kind, int quad_nodes) {
    PriceDecomposition out;
    out.european = european_value(t, x, params, avg, kind);
    out.premium = exercise_premium(t, x, boundary, params, avg, kind, quad_nodes);
    out.total = out.european + out.premium;
    return out;
}

double option_value_original(double t, double S, double A, const ModelParams& params,
                             const AveragingSpec& avg, OptionType kind,
                             const BoundaryCurve& boundary, int quad_nodes) {
    if (!(S > 0.0) || !(A > 0.0))
        throw std::domain_error("option_value_original: S and A must be > 0");
    const PriceDecomposition d =
        price_decomposition(t, A / S, boundary, params, avg, kind, quad_nodes);
    return S * std::exp(params.q * t) * d.total;
}

double smooth_pasting_residual(double t, const BoundaryCurve& boundary,
                               const ModelParams& params, const AveragingSpec& avg,
                               int quad_nodes) {
    params.validate();
    if (!(t < params.T)) throw std::domain_error("smooth_pasting_residual: t must be < T");
    require_coverage(t, boundary, params);
    const double x = boundary.x_star(t);
    const double r = params.r, q = params.q, T = params.T;

    // vhat_x(t, x*_t), the x-derivative of e^{qt} v~
    const ParamDerivs pe = conditional_param_derivs(t, T, x, params, avg);
    double vhat_x;
    if (avg.method == AveragingMethod::Geometric) {
        vhat_x = -std::exp(-q * (T - t)) * std::exp(pe.alpha + 0.5 * pe.beta * pe.beta) *
                 normal_cdf(-pe.alpha / pe.beta - pe.beta) * pe.dalpha;
    } else {
        vhat_x = std::exp(-q * (T - t)) *
                 (normal_pdf(-pe.alpha / pe.beta) * pe.dbeta -
                  std::exp(pe.alpha + 0.5 * pe.beta * pe.beta) *
                      normal_cdf(-pe.alpha / pe.beta - pe.beta) *
                      (pe.dalpha + pe.beta * pe.dbeta));
    }

    // integrand ehat_Ix(t, x*_t, u, x*_u)
    const auto ehat = [&](double u) {
        const double xs = boundary.x_star(u);
        const double log_xs = std::log(xs);
        const ParamDerivs p = conditional_param_derivs(t, u, x, params, avg);
        if (p.beta < kDegenerateBeta) return 0.0;
        const double dd = (log_xs - p.alpha) / p.beta;
        const double mgf = std::exp(p.alpha + 0.5 * p.beta * p.beta);
        if (avg.method == AveragingMethod::Geometric) {
            return std::exp(-q * (u - t)) / u *
                   (((-q * u + xs * r * u + xs * log_xs + xs * p.beta * p.beta) / p.beta) *
                        normal_pdf(dd) -
                    mgf * (r * u + p.alpha + p.beta * p.beta + 1.0) *
                        normal_cdf(dd - p.beta)) *
                   p.dalpha;
        }
        const double ddd = -p.dalpha / p.beta - (log_xs - p.alpha) * p.dbeta / (p.beta * p.beta);
        return std::exp(-q * (u - t)) *
               (((q + 1.0 / u) - (r + 1.0 / u) * xs) * normal_pdf(dd) * ddd +
                (r + 1.0 / u) * xs * normal_pdf(dd) * p.dbeta -
                (r + 1.0 / u) * mgf * normal_cdf(dd - p.beta) *
                    (p.dalpha + p.beta * p.dbeta));
    };
    const double W = std::sqrt(T - t);
    const double integral = integrate_gauss_legendre(
        [&](double w) { return 2.0 * w * ehat(std::min(t + w * w, T)); }, 0.0, W, quad_nodes);
    return 1.0 + vhat_x + integral;
}

}  // namespace aao
