#include "aao/expiry.hpp"

#include "aao/lognormal.hpp"
#include "aao/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aao {

namespace {

double transcendental_residual(double x, double r, double q, double T) {
    return std::log(x) - q * T / x + r * T;
}

}  // namespace

double solve_geometric_transcendental(const ModelParams& params) {
    params.validate();
    const double r = params.r, q = params.q, T = params.T;
    // g(x) = ln x - qT/x + rT is strictly increasing; g(max(1, q/r)) >= 0
    double hi = std::max(1.0, q / r) + 1.0;
    double lo = 1e-14;
    double flo = transcendental_residual(lo, r, q, T);
    double fhi = transcendental_residual(hi, r, q, T);
    if (!(flo < 0.0) || !(fhi >= 0.0)) {
        std::ostringstream msg;
        msg << "solve_geometric_transcendental: bracket failure on (0, " << hi
            << "], residuals " << flo << ", " << fhi;
        throw std::runtime_error(msg.str());
    }
    // bisect to width 1e-6, then polish with Newton
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (transcendental_residual(mid, r, q, T) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double f = transcendental_residual(x, r, q, T);
        if (std::abs(f) < 1e-12) return x;
        const double df = 1.0 / x + q * T / (x * x);
        double step = f / df;
        double next = x - step;
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);  // keep the bracket
        (transcendental_residual(next, r, q, T) < 0.0 ? lo : hi) = next;
        x = next;
    }
    if (std::abs(transcendental_residual(x, r, q, T)) >= 1e-12)
        throw std::runtime_error("solve_geometric_transcendental: no convergence to 1e-12");
    return x;
}

ExpiryLimit expiry_limit(const ModelParams& params, const AveragingSpec& avg,
                         OptionType kind) {
    params.validate();
    avg.validate();
    double inner = 0.0;
    switch (avg.method) {
        case AveragingMethod::Arithmetic:
            inner = (params.q + 1.0 / params.T) / (params.r + 1.0 / params.T);
            break;
        case AveragingMethod::Geometric:
            inner = solve_geometric_transcendental(params);
            break;
        case AveragingMethod::WeightedExponential: {
            const double w = -std::expm1(-avg.lambda * params.T);  // 1 - e^{-lambda T}
            inner = (params.q * w + avg.lambda) / (params.r * w + avg.lambda);
            break;
        }
    }
    ExpiryLimit out;
    if (kind == OptionType::Call) {
        out.x_star_T = std::min(inner, 1.0);
        out.branch = inner < 1.0 ? ExpiryBranch::InTheMoney : ExpiryBranch::AtTheMoney;
    } else {
        out.x_star_T = std::max(inner, 1.0);
        out.branch = inner > 1.0 ? ExpiryBranch::InTheMoney : ExpiryBranch::AtTheMoney;
    }
    return out;
}

double h_equation_rhs(double h, int quadrature_points) {
    if (quadrature_points < 64)
        throw std::invalid_argument("h_equation_rhs: need >= 64 quadrature points");
    // theta = s^2 removes the 1/sqrt(theta) endpoint singularity:
    //   I1 = int_0^1 Phi(-h g(s)) 2s ds,  I2 = int_0^1 2 sqrt(1-s^2) Phi'(-h g(s)) ds,
    // g(s) = (1 - sqrt(1-s^2))/s -> 0 as s -> 0.
    const auto g = [](double s) { return (1.0 - std::sqrt(std::max(1.0 - s * s, 0.0))) / s; };
    const double i1 = integrate_gauss_legendre(
        [&](double s) { return normal_cdf(-h * g(s)) * 2.0 * s; }, 0.0, 1.0,
        quadrature_points);
    const double i2 = integrate_gauss_legendre(
        [&](double s) {
            return 2.0 * std::sqrt(std::max(1.0 - s * s, 0.0)) * normal_pdf(-h * g(s));
        },
        0.0, 1.0, quadrature_points);
    return 1.0 - i1 + h * i2;
}

double solve_h_star(int quadrature_points) {
    // RHS is increasing in h with RHS(0) = 1/2; bracket on [-2, 0]
    double lo = -2.0, hi = 0.0;
    double flo = h_equation_rhs(lo, quadrature_points);
    double fhi = h_equation_rhs(hi, quadrature_points);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::runtime_error("solve_h_star: [-2, 0] does not bracket the root");
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (h_equation_rhs(mid, quadrature_points) < 0.0 ? lo : hi) = mid;
    }
    double h = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double f = h_equation_rhs(h, quadrature_points);
        if (std::abs(f) < 1e-12) break;
        const double eps = 1e-7;
        const double df = (h_equation_rhs(h + eps, quadrature_points) -
                           h_equation_rhs(h - eps, quadrature_points)) /
                          (2.0 * eps);
        h -= f / df;
    }
    return h;
}

double AsymptoteCoefficients::value(double T, double t) const {
    return G * (1.0 + h_star * sigma * std::sqrt(T - t));
}

AsymptoteCoefficients asymptote_coefficients(const ModelParams& params,
                                             const AveragingSpec& avg) {
    params.validate();
    if (avg.method == AveragingMethod::WeightedExponential)
        throw std::invalid_argument("asymptote_coefficients: no expansion for weighted averaging");
    if (!(params.r > params.q))
        throw std::invalid_argument("asymptote_coefficients: requires r > q >= 0");
    AsymptoteCoefficients coeffs;
    coeffs.G = expiry_limit(params, avg, OptionType::Call).x_star_T;
    static const double h_star_cached = solve_h_star();
    coeffs.h_star = h_star_cached;
    coeffs.sigma = params.sigma;
    return coeffs;
}

double boundary_asymptote(const ModelParams& params, const AveragingSpec& avg, double t) {
    if (!(t >= 0.0 && t <= params.T))
        throw std::domain_error("boundary_asymptote: t must be in [0, T]");
    return asymptote_coefficients(params, avg).value(params.T, t);
}

ExpiryLimitGrid expiry_limit_sweep(double r_min, double r_max, double q_min, double q_max,
                                   int steps_r, int steps_q, const ModelParams& base,
                                   const AveragingSpec& avg, OptionType kind) {
    if (!(r_min > 0.0) || !(r_max >= r_min) || !(q_min >= 0.0) || !(q_max >= q_min))
        throw std::invalid_argument("expiry_limit_sweep: bad r/q ranges");
    if (steps_r < 1 || steps_q < 1)
        throw std::invalid_argument("expiry_limit_sweep: steps must be >= 1");
    ExpiryLimitGrid grid;
    grid.r_values.resize(steps_r);
    grid.q_values.resize(steps_q);
    for (int i = 0; i < steps_r; ++i)
        grid.r_values[i] =
            steps_r == 1 ? r_min : r_min + (r_max - r_min) * i / (steps_r - 1.0);
    for (int j = 0; j < steps_q; ++j)
        grid.q_values[j] =
            steps_q == 1 ? q_min : q_min + (q_max - q_min) * j / (steps_q - 1.0);
    grid.x_star.resize(static_cast<std::size_t>(steps_r) * steps_q);
    for (int j = 0; j < steps_q; ++j) {
        for (int i = 0; i < steps_r; ++i) {
            ModelParams p = base;
            p.r = grid.r_values[i];
            p.q = grid.q_values[j];
            try {
                grid.x_star[static_cast<std::size_t>(j) * steps_r + i] =
                    expiry_limit(p, avg, kind).x_star_T;
            } catch (const std::exception& e) {
                std::ostringstream msg;
                msg << "expiry_limit_sweep: cell (r=" << p.r << ", q=" << p.q
                    << ") failed: " << e.what();
                throw std::runtime_error(msg.str());
            }
        }
    }
    return grid;
}

}  // namespace aao
