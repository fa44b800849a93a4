#include "aao/psor.hpp"

#include "aao/expiry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aao {

void PsorGrid::validate() const {
    if (!(x_min > 0.0)) throw std::invalid_argument("PsorGrid: x_min must be > 0");
    if (!(x_max > x_min)) throw std::invalid_argument("PsorGrid: x_max must be > x_min");
    if (n < 8) throw std::invalid_argument("PsorGrid: n must be >= 8");
}

PsorReport solve_psor(const ModelParams& params, const PsorGrid& grid_x, int m,
                      const PsorOptions& opts) {
    params.validate();
    grid_x.validate();
    if (m < 8) throw std::invalid_argument("solve_psor: m must be >= 8");
    if (!(opts.omega > 1.0 && opts.omega < 2.0))
        throw std::invalid_argument("solve_psor: omega must be in (1, 2)");

    const int n = grid_x.n;
    const double y_min = std::log(grid_x.x_min);
    const double dy = (std::log(grid_x.x_max) - y_min) / n;
    const double k = params.T / m;
    const double s2 = params.sigma * params.sigma;
    const double diff = 0.5 * s2 / (dy * dy);
    const double d_cap = 0.9 / k;  // keeps 1 - k*d (and so the diagonal) positive

    std::vector<double> x(n + 1), psi(n + 1);
    for (int i = 0; i <= n; ++i) {
        x[i] = std::exp(y_min + i * dy);
        psi[i] = std::max(1.0 / x[i] - 1.0, 0.0);
    }

    PsorReport report;
    report.boundary.maturity = params.T;
    report.boundary.taus.resize(m + 1);
    report.boundary.rhos.resize(m + 1);
    // tau = 0 node carries the expiry limit; the payoff surface alone has
    // contact everywhere in the money and pins no interior edge yet.
    const double x_star_T =
        expiry_limit(params, AveragingSpec::arithmetic(), OptionType::Call).x_star_T;
    report.boundary.taus[0] = 0.0;
    report.boundary.rhos[0] = 1.0 / x_star_T;

    std::vector<double> w = psi;
    if (opts.store_surface) {
        report.surface.x = x;
        report.surface.taus.push_back(0.0);
        report.surface.values.insert(report.surface.values.end(), w.begin(), w.end());
    }

    std::vector<double> lower(n + 1), diag(n + 1), upper(n + 1), rhs(n + 1);
    for (int j = 1; j <= m; ++j) {
        const double tau_j = j * k;
        const double age = std::max(params.T - tau_j, 0.5 * k);
        for (int i = 1; i < n; ++i) {
            const double f = (1.0 / x[i] - 1.0) / age;
            const double c = 0.5 * s2 - (params.r - params.q) + f;
            const double d = std::min(f - params.r, d_cap);
            if (std::abs(c) * dy <= s2) {
                lower[i] = -k * (diff - 0.5 * c / dy);
                upper[i] = -k * (diff + 0.5 * c / dy);
                diag[i] = 1.0 + 2.0 * k * diff - k * d;
            } else if (c > 0.0) {  // Peclet > 2: upwind
                lower[i] = -k * diff;
                upper[i] = -k * (diff + c / dy);
                diag[i] = 1.0 + 2.0 * k * diff + k * c / dy - k * d;
            } else {
                lower[i] = -k * (diff - c / dy);
                upper[i] = -k * diff;
                diag[i] = 1.0 + 2.0 * k * diff - k * c / dy - k * d;
            }
            rhs[i] = w[i];
        }
        // Dirichlet ends: deep exercise at x_min, worthless far field at x_max
        w[0] = psi[0];
        w[n] = 0.0;

        int sweeps = 0;
        double max_update = 0.0;
        for (; sweeps < opts.max_iters; ++sweeps) {
            max_update = 0.0;
            for (int i = 1; i < n; ++i) {
                const double gs = (rhs[i] - lower[i] * w[i - 1] - upper[i] * w[i + 1]) / diag[i];
                double w_new = w[i] + opts.omega * (gs - w[i]);
                w_new = std::max(w_new, psi[i]);  // projection
                max_update = std::max(max_update, std::abs(w_new - w[i]));
                w[i] = w_new;
            }
            if (max_update < opts.tol) break;
        }
        if (max_update >= opts.tol) {
            std::ostringstream msg;
            msg << "solve_psor: no convergence at level " << j << " (tau=" << tau_j
                << ", max update " << max_update << " after " << sweeps << " sweeps)";
            throw std::runtime_error(msg.str());
        }
        report.max_iterations = std::max(report.max_iterations, sweeps + 1);

        for (int i = 1; i < n; ++i) {
            const double residual =
                lower[i] * w[i - 1] + diag[i] * w[i] + upper[i] * w[i + 1] - rhs[i];
            report.max_complementarity =
                std::max(report.max_complementarity, std::abs((w[i] - psi[i]) * residual));
        }

        // contact set is a lower x-interval for the call; scan from the left
        int edge = 0;
        for (int i = 1; i < n; ++i) {
            if (psi[i] > 0.0 && w[i] - psi[i] <= 1e-10)
                edge = i;
            else
                break;
        }
        report.boundary.taus[j] = tau_j;
        report.boundary.rhos[j] = 1.0 / x[edge];

        if (opts.store_surface && (j % opts.surface_stride == 0 || j == m)) {
            report.surface.taus.push_back(tau_j);
            report.surface.values.insert(report.surface.values.end(), w.begin(), w.end());
        }
    }
    return report;
}

double value_at(const ValueSurface& surface, double x, double tau) {
    if (surface.empty()) throw std::invalid_argument("value_at: surface was not stored");
    const auto& xs = surface.x;
    const auto& ts = surface.taus;
    if (x < xs.front() || x > xs.back() || tau < ts.front() || tau > ts.back())
        throw std::out_of_range("value_at: (x, tau) outside the stored grid hull");
    const auto locate = [](const std::vector<double>& grid, double v) {
        auto it = std::upper_bound(grid.begin(), grid.end(), v);
        std::size_t hi = std::min<std::size_t>(it - grid.begin(), grid.size() - 1);
        if (hi == 0) hi = 1;
        return hi;
    };
    const std::size_t ix = locate(xs, x);
    const std::size_t it = locate(ts, tau);
    const double wx = (x - xs[ix - 1]) / (xs[ix] - xs[ix - 1]);
    const double wt = (tau - ts[it - 1]) / (ts[it] - ts[it - 1]);
    const double v00 = surface.at(it - 1, ix - 1), v01 = surface.at(it - 1, ix);
    const double v10 = surface.at(it, ix - 1), v11 = surface.at(it, ix);
    return (1.0 - wt) * ((1.0 - wx) * v00 + wx * v01) + wt * ((1.0 - wx) * v10 + wx * v11);
}

}  // namespace aao
