#include "aao/lognormal.hpp"

#include <cmath>
#include <stdexcept>

namespace aao {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kSingularSwitch = 1e-7;

// (1 - e^{-z}) / z, stable near z = 0.
double expm1_ratio(double z) {
    if (std::abs(z) < 1e-8) return 1.0 - 0.5 * z + z * z / 6.0;
    return -std::expm1(-z) / z;
}

// Third summand of the arithmetic second moment:
//   N(e) / (u^2 e (e - s/2) (e - s)),
//   N(e) = (e - s) - 2 (e - s/2) e^{-e d} + e e^{-(2e - s) d},
// with e = r - q, s = sigma^2, d = u - t. N vanishes at e in {0, s/2, s};
// near those points N/(small factor) is replaced by its second-order series.
double second_moment_tail(double e, double s, double d, double u) {
    const double d0 = std::abs(e);
    const double d1 = std::abs(e - 0.5 * s);
    const double d2 = std::abs(e - s);
    const double dmin = std::min({d0, d1, d2});
    if (dmin >= kSingularSwitch) {
        const double num = (e - s) - 2.0 * (e - 0.5 * s) * std::exp(-e * d) +
                           e * std::exp(-(2.0 * e - s) * d);
        return num / (u * u * e * (e - 0.5 * s) * (e - s));
    }
    if (dmin == d0) {
        const double E = std::exp(s * d);
        const double c1 = E - 1.0 - s * d;
        const double c2 = 2.0 * d - 2.0 * d * E + 0.5 * s * d * d;
        const double c3 = 2.0 * d * d * E - d * d - s * d * d * d / 6.0;
        const double g = c1 + c2 * e + c3 * e * e;
        return g / (u * u * (e - 0.5 * s) * (e - s));
    }
    if (dmin == d1) {
        const double mu = e - 0.5 * s;
        const double E = std::exp(-0.5 * s * d);
        const double c1 = 2.0 - s * d - 2.0 * E;
        const double c2 = 2.0 * d * E + s * d * d - 2.0 * d;
        const double c3 = 2.0 * d * d - d * d * E - 2.0 * s * d * d * d / 3.0;
        const double g = c1 + c2 * mu + c3 * mu * mu;
        return g / (u * u * (0.5 * s + mu) * (mu - 0.5 * s));
    }
    const double nu = e - s;
    const double E = std::exp(-s * d);
    const double c1 = 1.0 - E * (1.0 + s * d);
    const double c2 = E * 1.5 * s * d * d;
    const double c3 = E * (d * d - 7.0 * s * d * d * d / 6.0);
    const double g = c1 + c2 * nu + c3 * nu * nu;
    return g / (u * u * (s + nu) * (nu + 0.5 * s));
}

void check_time_pair(double t, double u, double x, const char* who) {
    if (!(t > 0.0)) throw std::domain_error(std::string(who) + ": t must be > 0");
    if (!(u >= t)) throw std::domain_error(std::string(who) + ": u must be >= t");
    if (!(x > 0.0)) throw std::domain_error(std::string(who) + ": x must be > 0");
}

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

TruncatedExpectations truncated_expectations(double alpha, double beta, double K,
                                             double rho) {
    if (!(beta > 0.0))
        throw std::domain_error("truncated_expectations: beta must be > 0 (degenerate case is the caller's)");
    if (!(K > 0.0)) throw std::domain_error("truncated_expectations: K must be > 0");
    if (rho != 1.0 && rho != -1.0)
        throw std::domain_error("truncated_expectations: rho must be +1 or -1");
    const double gamma = (alpha + beta * beta - std::log(K)) / beta;
    const double mgf = std::exp(alpha + 0.5 * beta * beta);
    TruncatedExpectations out;
    out.prob = normal_cdf(rho * (gamma - beta));
    out.mean_truncated = mgf * normal_cdf(rho * gamma);
    out.mean_log_truncated =
        mgf * ((alpha + beta * beta) * normal_cdf(rho * gamma) + rho * beta * normal_pdf(gamma));
    out.payoff_expectation = rho * (mgf * normal_cdf(rho * gamma) - K * out.prob);
    return out;
}

LogNormalParams geometric_params(double t, double u, double x, const ModelParams& params) {
    check_time_pair(t, u, x, "geometric_params");
    const double drift = params.r - params.q + 0.5 * params.sigma * params.sigma;
    LogNormalParams p;
    p.alpha = (t / u) * std::log(x) - (u * u - t * t) / (2.0 * u) * drift;
    // u^3 - t^3 factored to avoid cancellation as u -> t
    p.beta = params.sigma / (u * std::sqrt(3.0)) *
             std::sqrt((u - t) * (u * u + u * t + t * t));
    return p;
}

MomentPair arithmetic_moments(double t, double u, double x, const ModelParams& params) {
    check_time_pair(t, u, x, "arithmetic_moments");
    const double e = params.r - params.q;
    const double s = params.sigma * params.sigma;
    const double d = u - t;
    MomentPair out;
    out.m1 = x * (t / u) * std::exp(-e * d) + (d / u) * expm1_ratio(e * d);
    const double first = x * x * (t * t) / (u * u) * std::exp(-2.0 * (e - 0.5 * s) * d);
    const double middle =
        x * 2.0 * t * d / (u * u) * std::exp(-e * d) * expm1_ratio((e - s) * d);
    out.m2 = first + middle + second_moment_tail(e, s, d, u);
    return out;
}

LogNormalParams arithmetic_params(double t, double u, double x, const ModelParams& params) {
    const MomentPair m = arithmetic_moments(t, u, x, params);
    const double log_m1 = std::log(m.m1);
    const double log_m2 = std::log(m.m2);
    const double rad = log_m2 - 2.0 * log_m1;
    LogNormalParams p;
    p.alpha = 2.0 * log_m1 - 0.5 * log_m2;
    if (rad < -1e-14)
        throw std::runtime_error("arithmetic_params: m2 < m1^2 beyond tolerance, moment bug");
    p.beta = rad > 0.0 ? std::sqrt(rad) : 0.0;
    return p;
}

double hj_second_moment(double t, double u, double x, const ModelParams& params) {
    if (params.q != 0.0)
        throw std::invalid_argument("hj_second_moment: only defined for q = 0");
    check_time_pair(t, u, x, "hj_second_moment");
    const double r = params.r;
    const double s = params.sigma * params.sigma;
    const double d = u - t;
    const double first = x * x * (t * t) / (u * u) * std::exp(-2.0 * (r - 0.5 * s) * d);
    const double middle = x * 2.0 * t * d / (u * u) * std::exp(-r * d) * expm1_ratio(r * d);
    return first + middle + second_moment_tail(r, s, d, u);
}

}  // namespace aao
