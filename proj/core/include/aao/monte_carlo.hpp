#pragma once

#include "aao/model.hpp"

#include <cstdint>
#include <vector>

namespace aao {

/// Monte Carlo estimate with its sampling error.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  ///< sample std / sqrt(n_paths)
    std::int64_t n_paths = 0;
    std::uint64_t seed = 0;
};

struct McConfig {
    std::int64_t n_paths = 100000;
    int n_steps = 512;  ///< per simulated horizon
    std::uint64_t seed = 1;
    bool antithetic = false;
    int n_threads = 0;  ///< 0 = hardware concurrency; result is thread-count independent

    void validate() const;
};

/// Name of the per-path random stream construction, echoed into outputs.
const char* mc_rng_name();

/// Simulates x = A/S from (t0, x0) over `horizon` years under the stock
/// numeraire measure: S advances by exact log-normal increments, the average
/// by a trapezoid update of its defining integral. Returns the terminal x of
/// every path, in path order; per-path streams derive from (seed, path index)
/// so the output is identical for any thread count.
std::vector<double> simulate_terminal_x(const ModelParams& params, const AveragingSpec& avg,
                                        double t0, double x0, double horizon,
                                        const McConfig& config);

/// Discounted European value estimate e^{-qT} E[(rho (1 - x_T))^+] from t0.
McEstimate mc_european_value(const ModelParams& params, const AveragingSpec& avg,
                             double t0, double x0, OptionType kind, const McConfig& config);

/// Sample estimates of the first two conditioned moments of x_u given
/// (t0, x0).
struct McMoments {
    McEstimate m1;
    McEstimate m2;
};

McMoments mc_conditional_moments(const ModelParams& params, const AveragingSpec& avg,
                                 double t0, double x0, double u, const McConfig& config);

/// Mean and standard error of a sample vector, reduced in index order.
McEstimate reduce_samples(const std::vector<double>& samples, std::uint64_t seed);

}  // namespace aao
