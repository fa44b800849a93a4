#include "aao/model.hpp"

#include <cmath>
#include <stdexcept>

namespace aao {

void ModelParams::validate() const {
    if (!(r > 0.0)) throw std::invalid_argument("ModelParams: r must be > 0");
    if (!(q >= 0.0)) throw std::invalid_argument("ModelParams: q must be >= 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("ModelParams: sigma must be > 0");
    if (!(T > 0.0)) throw std::invalid_argument("ModelParams: T must be > 0");
}

const char* to_string(OptionType kind) {
    return kind == OptionType::Call ? "call" : "put";
}

const char* to_string(AveragingMethod method) {
    switch (method) {
        case AveragingMethod::Arithmetic: return "arithmetic";
        case AveragingMethod::Geometric: return "geometric";
        case AveragingMethod::WeightedExponential: return "weighted";
    }
    return "?";
}

void AveragingSpec::validate() const {
    if (method == AveragingMethod::WeightedExponential) {
        if (!(lambda > 0.0))
            throw std::invalid_argument("AveragingSpec: weighted averaging requires lambda > 0");
    } else if (lambda != 0.0) {
        throw std::invalid_argument("AveragingSpec: lambda is only meaningful for weighted averaging");
    }
}

void GridSpec::validate() const {
    if (n < 8) throw std::invalid_argument("GridSpec: n must be >= 8");
    if (m < 8) throw std::invalid_argument("GridSpec: m must be >= 8");
    if (!(L > 0.0)) throw std::invalid_argument("GridSpec: L must be > 0");
}

double averaging_drift(const AveragingSpec& avg, double x, double t) {
    if (!(x > 0.0)) throw std::domain_error("averaging_drift: x must be > 0");
    if (!(t > 0.0)) throw std::domain_error("averaging_drift: t must be > 0");
    switch (avg.method) {
        case AveragingMethod::Arithmetic:
            return (1.0 / x - 1.0) / t;
        case AveragingMethod::Geometric:
            return -std::log(x) / t;
        case AveragingMethod::WeightedExponential:
            return avg.lambda * (1.0 / x - 1.0) / (-std::expm1(-avg.lambda * t));
    }
    throw std::logic_error("averaging_drift: unreachable");
}

double reaction_coefficient(const AveragingSpec& avg, const ModelParams& params,
                            double xi, double tau, double rho_val) {
    if (!(tau < params.T)) throw std::domain_error("reaction_coefficient: tau must be < T");
    if (!(rho_val > 0.0)) throw std::domain_error("reaction_coefficient: rho must be > 0");
    const double age = params.T - tau;
    switch (avg.method) {
        case AveragingMethod::Arithmetic:
            // d/dx [x f] = -1/t, independent of xi and rho
            return params.r + 1.0 / age;
        case AveragingMethod::Geometric:
            // x f = -x ln(x)/t, d/dx = -(ln x + 1)/t with ln x = xi - ln rho
            return params.r + (xi - std::log(rho_val) + 1.0) / age;
        case AveragingMethod::WeightedExponential:
            return params.r + avg.lambda / (-std::expm1(-avg.lambda * age));
    }
    throw std::logic_error("reaction_coefficient: unreachable");
}

double convection_coefficient(const AveragingSpec& avg, const ModelParams& params,
                              double xi, double tau, double rho_val,
                              double rho_dot_over_rho) {
    if (!(tau < params.T)) throw std::domain_error("convection_coefficient: tau must be < T");
    const double x = std::exp(xi) / rho_val;
    return rho_dot_over_rho + params.r - params.q - 0.5 * params.sigma * params.sigma -
           averaging_drift(avg, x, params.T - tau);
}

}  // namespace aao
