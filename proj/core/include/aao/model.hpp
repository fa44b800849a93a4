#pragma once

#include <string>

namespace aao {

/// Market and contract parameters shared by every pricing routine.
/// Rates are per year, sigma per sqrt-year, maturity in years.
struct ModelParams {
    double r = 0.0;      ///< risk-free rate, > 0
    double q = 0.0;      ///< continuous dividend rate, >= 0
    double sigma = 0.0;  ///< volatility, > 0
    double T = 0.0;      ///< maturity, > 0

    void validate() const;
};

enum class OptionType { Call, Put };

/// Payoff sign: +1 for a call, -1 for a put.
inline double payoff_sign(OptionType kind) {
    return kind == OptionType::Call ? 1.0 : -1.0;
}

const char* to_string(OptionType kind);

enum class AveragingMethod { Arithmetic, Geometric, WeightedExponential };

const char* to_string(AveragingMethod method);

/// Which running average defines the floating strike. The weighted method
/// uses an exponential kernel with decay rate `lambda` (per year).
struct AveragingSpec {
    AveragingMethod method = AveragingMethod::Arithmetic;
    double lambda = 0.0;  ///< required (and > 0) iff method == WeightedExponential

    static AveragingSpec arithmetic() { return {AveragingMethod::Arithmetic, 0.0}; }
    static AveragingSpec geometric() { return {AveragingMethod::Geometric, 0.0}; }
    static AveragingSpec weighted(double lambda) {
        return {AveragingMethod::WeightedExponential, lambda};
    }

    void validate() const;
};

/// Discretization of the fixed rectangle [0,L] x [0,T].
struct GridSpec {
    int n = 200;     ///< spatial steps, >= 8
    int m = 20000;   ///< time steps, >= 8
    double L = 2.0;  ///< upper bound of the transformed spatial domain, > 0

    void validate() const;
    double spatial_step() const { return L / n; }
    double time_step(double T) const { return T / m; }
};

/// Relative drift f(x,t) of the running average, i.e. dA/A = f(A/S, t) dt.
/// t is the time elapsed since inception of the average.
double averaging_drift(const AveragingSpec& avg, double x, double t);

/// Zeroth-order coefficient b(xi,tau) = r - d/dx[x f(x, T-tau)] evaluated at
/// x = e^xi / rho, with the derivative taken analytically per kernel.
double reaction_coefficient(const AveragingSpec& avg, const ModelParams& params,
                            double xi, double tau, double rho_val);

/// First-order coefficient a(xi,tau) of the transformed equation. The caller
/// supplies the logarithmic boundary velocity d(ln rho)/dtau.
double convection_coefficient(const AveragingSpec& avg, const ModelParams& params,
                              double xi, double tau, double rho_val,
                              double rho_dot_over_rho);

}  // namespace aao
