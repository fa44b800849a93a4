#pragma once

#include "aao/boundary_curve.hpp"
#include "aao/model.hpp"

#include <vector>

namespace aao {

/// Reduced value surface W(x, tau) = V(t, S, A) / A with x = A/S, tau = T - t,
/// on a log-uniform x grid.
struct ValueSurface {
    std::vector<double> x;       ///< n+1 nodes, log-uniform on [x_min, x_max]
    std::vector<double> taus;    ///< stored time levels
    std::vector<double> values;  ///< taus.size() rows of x.size() values

    bool empty() const { return values.empty(); }
    double at(std::size_t row, std::size_t i) const { return values[row * x.size() + i]; }
};

struct PsorGrid {
    double x_min = 0.02;
    double x_max = 10.0;
    int n = 500;

    void validate() const;
};

struct PsorOptions {
    double omega = 1.5;       ///< relaxation parameter, in (1, 2)
    double tol = 1e-8;        ///< max-update stopping rule per time step
    int max_iters = 10000;    ///< iteration cap per time step
    bool store_surface = false;
    int surface_stride = 1;
};

struct PsorReport {
    ValueSurface surface;  ///< populated iff store_surface
    BoundaryCurve boundary;
    int max_iterations = 0;             ///< worst PSOR sweep count over all steps
    double max_complementarity = 0.0;   ///< max |(W - psi) * (discrete residual)|
};

/// Solves the variational inequality for the arithmetically averaged American
/// Asian call by projected SOR: implicit finite differences in y = ln x
/// (central, with first-order upwind where the cell Peclet number exceeds 2),
/// obstacle psi(x) = max(1/x - 1, 0), sweep-then-project until the largest
/// update falls below tol. The 1/(T - tau) coefficients are clipped at half a
/// time step from inception, and the destabilising part of the reaction term
/// is capped so the implicit diagonal stays positive; the cap binds only deep
/// inside the exercise region where the obstacle pins the solution.
PsorReport solve_psor(const ModelParams& params, const PsorGrid& grid_x, int m,
                      const PsorOptions& opts = {});

/// Bilinear interpolation on the stored surface; (x, tau) must lie inside the
/// grid hull. Original-variable recovery: V(t, S, A) = A * W(A/S, T - t).
double value_at(const ValueSurface& surface, double x, double tau);

}  // namespace aao
