#include "aao/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace aao {

namespace {

constexpr std::int64_t kBlockSize = 8192;

// Portable Box-Muller: two engine words per normal, no library-dependent
// cached state.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed, std::uint64_t path_index) {
        std::seed_seq seq{static_cast<std::uint64_t>(0x9e3779b97f4a7c15ULL), seed, path_index};
        engine_.seed(seq);
    }

    double operator()() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    double uniform01() {
        // in (0, 1]; the shift keeps log() finite
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }
    std::mt19937_64 engine_;
};

struct PathState {
    double log_s = 0.0;
    double accum = 0.0;  // kernel-specific running integral
};

double terminal_x(const ModelParams& params, const AveragingSpec& avg, double t0, double x0,
                  double horizon, int n_steps, NormalSampler& sampler, bool negate) {
    const double dt = horizon / n_steps;
    const double drift = (params.r - params.q + 0.5 * params.sigma * params.sigma) * dt;
    const double vol = params.sigma * std::sqrt(dt);
    double log_s = 0.0;  // S_{t0} normalized to 1; x is scale invariant
    double accum;
    switch (avg.method) {
        case AveragingMethod::Arithmetic: accum = x0 * t0; break;            // int_0^t S
        case AveragingMethod::Geometric: accum = t0 * std::log(x0); break;   // int_0^t ln S
        case AveragingMethod::WeightedExponential:
            accum = x0 * (-std::expm1(-avg.lambda * t0)) / avg.lambda;       // int e^{-l(t-u)} S
            break;
        default: throw std::logic_error("terminal_x: unreachable");
    }
    const double decay = avg.method == AveragingMethod::WeightedExponential
                             ? std::exp(-avg.lambda * dt)
                             : 0.0;
    double t = t0;
    for (int i = 0; i < n_steps; ++i) {
        const double z = negate ? -sampler() : sampler();
        const double log_s_next = log_s + drift + vol * z;
        switch (avg.method) {
            case AveragingMethod::Arithmetic:
                accum += 0.5 * dt * (std::exp(log_s) + std::exp(log_s_next));
                break;
            case AveragingMethod::Geometric:
                accum += 0.5 * dt * (log_s + log_s_next);
                break;
            case AveragingMethod::WeightedExponential:
                accum = decay * accum +
                        0.5 * dt * (decay * std::exp(log_s) + std::exp(log_s_next));
                break;
            default: break;
        }
        log_s = log_s_next;
        t += dt;
    }
    const double u = t0 + horizon;
    switch (avg.method) {
        case AveragingMethod::Arithmetic:
            return (accum / u) * std::exp(-log_s);
        case AveragingMethod::Geometric:
            return std::exp(accum / u - log_s);
        case AveragingMethod::WeightedExponential:
            return avg.lambda * accum / (-std::expm1(-avg.lambda * u)) * std::exp(-log_s);
        default: break;
    }
    throw std::logic_error("terminal_x: unreachable");
}

}  // namespace

void McConfig::validate() const {
    if (n_paths < 1) throw std::invalid_argument("McConfig: n_paths must be >= 1");
    if (n_steps < 1) throw std::invalid_argument("McConfig: n_steps must be >= 1");
}

const char* mc_rng_name() { return "mt19937_64/box-muller(seed,path)"; }

std::vector<double> simulate_terminal_x(const ModelParams& params, const AveragingSpec& avg,
                                        double t0, double x0, double horizon,
                                        const McConfig& config) {
    params.validate();
    avg.validate();
    config.validate();
    if (!(t0 > 0.0)) throw std::domain_error("simulate_terminal_x: t0 must be > 0");
    if (!(x0 > 0.0)) throw std::domain_error("simulate_terminal_x: x0 must be > 0");
    if (!(horizon > 0.0)) throw std::domain_error("simulate_terminal_x: horizon must be > 0");

    std::vector<double> samples(static_cast<std::size_t>(config.n_paths));
    const std::int64_t blocks = (config.n_paths + kBlockSize - 1) / kBlockSize;
    int threads = config.n_threads > 0
                      ? config.n_threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, 16));

    std::atomic<std::int64_t> next_block{0};
    const auto worker = [&]() {
        for (;;) {
            const std::int64_t b = next_block.fetch_add(1);
            if (b >= blocks) return;
            const std::int64_t lo = b * kBlockSize;
            const std::int64_t hi = std::min(lo + kBlockSize, config.n_paths);
            for (std::int64_t idx = lo; idx < hi; ++idx) {
                NormalSampler sampler(config.seed, static_cast<std::uint64_t>(idx));
                if (config.antithetic) {
                    NormalSampler twin(config.seed, static_cast<std::uint64_t>(idx));
                    const double a =
                        terminal_x(params, avg, t0, x0, horizon, config.n_steps, sampler, false);
                    const double b2 =
                        terminal_x(params, avg, t0, x0, horizon, config.n_steps, twin, true);
                    samples[static_cast<std::size_t>(idx)] = 0.5 * (a + b2);
                } else {
                    samples[static_cast<std::size_t>(idx)] =
                        terminal_x(params, avg, t0, x0, horizon, config.n_steps, sampler, false);
                }
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return samples;
}

McEstimate reduce_samples(const std::vector<double>& samples, std::uint64_t seed) {
    if (samples.empty()) throw std::invalid_argument("reduce_samples: empty sample vector");
    double sum = 0.0;
    for (double v : samples) sum += v;  // fixed, sequential order
    const double mean = sum / samples.size();
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    McEstimate est;
    est.mean = mean;
    est.std_error = samples.size() > 1
                        ? std::sqrt(ss / (samples.size() - 1.0)) / std::sqrt(double(samples.size()))
                        : 0.0;
    est.n_paths = static_cast<std::int64_t>(samples.size());
    est.seed = seed;
    return est;
}

McEstimate mc_european_value(const ModelParams& params, const AveragingSpec& avg,
                             double t0, double x0, OptionType kind, const McConfig& config) {
    if (!(t0 < params.T)) throw std::domain_error("mc_european_value: t0 must be < T");
    const double rho = payoff_sign(kind);
    std::vector<double> payoff =
        simulate_terminal_x(params, avg, t0, x0, params.T - t0, config);
    const double disc = std::exp(-params.q * params.T);
    for (double& v : payoff) v = disc * std::max(rho * (1.0 - v), 0.0);
    return reduce_samples(payoff, config.seed);
}

McMoments mc_conditional_moments(const ModelParams& params, const AveragingSpec& avg,
                                 double t0, double x0, double u, const McConfig& config) {
    if (!(u > t0)) throw std::domain_error("mc_conditional_moments: u must be > t0");
    const std::vector<double> x = simulate_terminal_x(params, avg, t0, x0, u - t0, config);
    std::vector<double> sq(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sq[i] = x[i] * x[i];
    McMoments out;
    out.m1 = reduce_samples(x, config.seed);
    out.m2 = reduce_samples(sq, config.seed);
    return out;
}

}  // namespace aao
