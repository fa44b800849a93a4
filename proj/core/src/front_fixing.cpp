#include "aao/front_fixing.hpp"

#include "aao/expiry.hpp"
#include "aao/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aao {

namespace {

double clipped_tau(double tau_j, double T, double k) { return std::min(tau_j, T - 0.5 * k); }

double trapezoid(const std::vector<double>& values, double h) {
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * h;
}

}  // namespace

std::vector<double> transport_step(const std::vector<double>& prev_row, double rho_prev,
                                   double rho_new, const ModelParams& params, double k,
                                   double h) {
    if (!(rho_prev > 0.0) || !(rho_new > 0.0))
        throw std::domain_error("transport_step: rho values must be > 0");
    const std::size_t n = prev_row.size() - 1;
    const double shift = std::log(rho_new) - std::log(rho_prev) + (params.r - params.q) * k;
    const double L = n * h;
    std::vector<double> half(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double eta = i * h - shift;
        if (eta <= 0.0) {
            half[i] = -1.0;
        } else if (eta >= L) {
            half[i] = 0.0;  // far field
        } else {
            const double pos = eta / h;
            const std::size_t idx = std::min(static_cast<std::size_t>(pos), n - 1);
            const double w = pos - idx;
            half[i] = prev_row[idx] * (1.0 - w) + prev_row[idx + 1] * w;
        }
    }
    return half;
}

std::vector<double> diffusion_step(const std::vector<double>& half_row, double rho_new,
                                   const ModelParams& params, const AveragingSpec& avg,
                                   const GridSpec& grid, double tau_j) {
    const int n = grid.n;
    if (half_row.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("diffusion_step: row size does not match grid");
    const double h = grid.spatial_step();
    const double k = grid.time_step(params.T);
    const double tau = clipped_tau(tau_j, params.T, k);
    const double age = params.T - tau;
    const double s2 = params.sigma * params.sigma;
    const double diff = 0.5 * k * s2 / (h * h);

    std::vector<double> lower(n - 1), diag(n - 1), upper(n - 1), rhs(n - 1);
    for (int i = 1; i < n; ++i) {
        const double xi = i * h;
        const double conv = 0.5 * s2 + averaging_drift(avg, std::exp(xi) / rho_new, age);
        const double b = reaction_coefficient(avg, params, xi, tau, rho_new);
        double alpha, gamma;
        if (std::abs(conv) * h <= s2) {
            alpha = -diff + 0.5 * k / h * conv;
            gamma = -diff - 0.5 * k / h * conv;
        } else if (conv > 0.0) {  // Peclet > 2: one-sided stencil keeps the M-matrix
            alpha = -diff;
            gamma = -diff - k / h * conv;
        } else {
            alpha = -diff + k / h * conv;
            gamma = -diff;
        }
        const double beta = 1.0 + b * k - (alpha + gamma);
        lower[i - 1] = alpha;
        diag[i - 1] = beta;
        upper[i - 1] = gamma;
        rhs[i - 1] = half_row[i];
    }
    rhs.front() -= lower.front() * (-1.0);  // Dirichlet Pi(0) = -1
    // Dirichlet Pi(L) = 0 adds nothing to the last row
    std::vector<double> interior;
    try {
        interior = thomas_solve(lower, diag, upper, rhs);
    } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << e.what() << " (n=" << grid.n << ", m=" << grid.m << ", L=" << grid.L
            << ", tau=" << tau_j << ")";
        throw std::runtime_error(msg.str());
    }
    std::vector<double> row(n + 1);
    row.front() = -1.0;
    std::copy(interior.begin(), interior.end(), row.begin() + 1);
    row.back() = 0.0;
    return row;
}

double boundary_update(double rho_prev, const std::vector<double>& prev_row,
                       const std::vector<double>& new_row, const ModelParams& params,
                       const AveragingSpec& avg, const GridSpec& grid, double tau_j) {
    if (prev_row.size() != new_row.size())
        throw std::invalid_argument("boundary_update: rows must share the grid");
    const double h = grid.spatial_step();
    const double k = grid.time_step(params.T);
    const double tau = clipped_tau(tau_j, params.T, k);
    const double age = params.T - tau;
    const double s2 = params.sigma * params.sigma;
    std::vector<double> weighted(new_row.size());
    for (std::size_t i = 0; i < new_row.size(); ++i) {
        const double xi = i * h;
        weighted[i] =
            (params.r - averaging_drift(avg, std::exp(xi) / rho_prev, age)) * new_row[i];
    }
    const double i1 = trapezoid(weighted, h);
    const double log_rho = std::log(rho_prev) + trapezoid(prev_row, h) - trapezoid(new_row, h) +
                           k * (params.q + 0.5 * s2 - params.q * rho_prev - i1);
    const double rho = std::exp(log_rho);
    if (!std::isfinite(rho)) {
        std::ostringstream msg;
        msg << "boundary_update: non-finite rho at tau=" << tau_j << " (divergence)";
        throw std::runtime_error(msg.str());
    }
    return rho;
}

double pointwise_boundary_residual(double rho_val, const std::vector<double>& row,
                                   const ModelParams& params, const AveragingSpec& avg,
                                   const GridSpec& grid, double tau_j) {
    const double h = grid.spatial_step();
    const double k = grid.time_step(params.T);
    const double tau = clipped_tau(tau_j, params.T, k);
    const double dpi0 = (-3.0 * row[0] + 4.0 * row[1] - row[2]) / (2.0 * h);
    return params.q * rho_val - params.r +
           averaging_drift(avg, 1.0 / rho_val, params.T - tau) -
           0.5 * params.sigma * params.sigma * dpi0;
}

FrontFixingReport solve_front_fixing(const ModelParams& params, const AveragingSpec& avg,
                                     const GridSpec& grid, const FrontFixingOptions& opts) {
    params.validate();
    avg.validate();
    grid.validate();
    if (opts.max_fixed_point_iters < 2)
        throw std::invalid_argument("solve_front_fixing: need at least 2 fixed-point iterations");

    const int n = grid.n, m = grid.m;
    const double h = grid.spatial_step();
    const double k = grid.time_step(params.T);

    const double rho0 = 1.0 / expiry_limit(params, avg, OptionType::Call).x_star_T;

    FrontFixingReport report;
    report.boundary.maturity = params.T;
    report.boundary.taus.resize(m + 1);
    report.boundary.rhos.resize(m + 1);
    report.iterations_per_step.reserve(m);

    std::vector<double> pi(n + 1);
    const double edge = std::log(rho0);
    for (int i = 0; i <= n; ++i) pi[i] = (i * h < edge) ? -1.0 : 0.0;
    pi.front() = -1.0;
    pi.back() = 0.0;

    report.pi_min = 0.0;
    report.pi_max = -1.0;
    const auto monitor = [&](const std::vector<double>& row) {
        for (std::size_t i = 1; i + 1 < row.size(); ++i) {
            report.pi_min = std::min(report.pi_min, row[i]);
            report.pi_max = std::max(report.pi_max, row[i]);
        }
    };
    monitor(pi);

    if (opts.store_surface) {
        report.surface.xi.resize(n + 1);
        for (int i = 0; i <= n; ++i) report.surface.xi[i] = i * h;
        report.surface.taus.push_back(0.0);
        report.surface.values.insert(report.surface.values.end(), pi.begin(), pi.end());
    }

    double rho = rho0;
    report.boundary.taus[0] = 0.0;
    report.boundary.rhos[0] = rho0;

    for (int j = 1; j <= m; ++j) {
        const double tau_j = j * k;
        const std::vector<double> pi_prev = pi;
        const double rho_prev = rho;

        // One map evaluation: candidate rho -> (transport, diffuse) -> updated rho
        const auto advance = [&](double rho_candidate) {
            return diffusion_step(
                transport_step(pi_prev, rho_prev, rho_candidate, params, k, h), rho_candidate,
                params, avg, grid, tau_j);
        };
        const auto update = [&](const std::vector<double>& row) {
            return boundary_update(rho_prev, pi_prev, row, params, avg, grid, tau_j);
        };

        int evals = 0;
        // p = 1 substitution step from the previous level state
        double rho_a = rho_prev;
        double rho_b = update(pi_prev);
        double residual = std::abs(rho_b - rho_a);
        std::vector<double> pi_b;
        if (residual < opts.fixed_point_tol) {
            pi_b = advance(rho_b);
            ++evals;
        } else {
            std::vector<double> pi_a = advance(rho_a);
            ++evals;
            double g_a = update(pi_a) - rho_a;
            pi_b = advance(rho_b);
            ++evals;
            double g_b = update(pi_b) - rho_b;
            bool converged = false;
            while (evals < opts.max_fixed_point_iters) {
                double rho_next;
                if (g_b == g_a)
                    rho_next = rho_b + g_b;  // degenerate secant: substitution step
                else
                    rho_next = rho_b - g_b * (rho_b - rho_a) / (g_b - g_a);
                if (!(rho_next > 0.0) || !std::isfinite(rho_next)) rho_next = rho_b + g_b;
                std::vector<double> pi_next = advance(rho_next);
                ++evals;
                const double g_next = update(pi_next) - rho_next;
                residual = std::abs(rho_next - rho_b);
                rho_a = rho_b;
                g_a = g_b;
                rho_b = rho_next;
                g_b = g_next;
                pi_b = std::move(pi_next);
                if (residual < opts.fixed_point_tol) {
                    converged = true;
                    break;
                }
            }
            if (!converged) {
                std::ostringstream msg;
                msg << "solve_front_fixing: fixed point did not reach " << opts.fixed_point_tol
                    << " at level " << j << " (tau=" << tau_j << ", residual=" << residual
                    << ", iterations=" << evals << ")";
                throw std::runtime_error(msg.str());
            }
        }

        rho = rho_b;
        pi = std::move(pi_b);
        monitor(pi);
        report.boundary.taus[j] = tau_j;
        report.boundary.rhos[j] = rho;
        report.iterations_per_step.push_back(evals);
        report.max_fixed_point_residual = std::max(report.max_fixed_point_residual, residual);

        if (opts.store_surface && (j % opts.surface_stride == 0 || j == m)) {
            report.surface.taus.push_back(tau_j);
            report.surface.values.insert(report.surface.values.end(), pi.begin(), pi.end());
        }
    }
    return report;
}

BoundaryCurve extract_boundary(const FrontFixingReport& report) {
    BoundaryCurve curve = report.boundary;
    curve.validate();
    return curve;
}

}  // namespace aao
