#pragma once

#include "aao/boundary_curve.hpp"
#include "aao/model.hpp"

#include <vector>

namespace aao {

/// Transformed solution Pi(xi, tau) on the fixed rectangle [0, L] x [0, T].
/// Rows may be stored with a stride when the time grid is large.
struct PortfolioSurface {
    std::vector<double> xi;      ///< n+1 spatial nodes
    std::vector<double> taus;    ///< stored time levels
    std::vector<double> values;  ///< taus.size() rows of xi.size() values

    bool empty() const { return values.empty(); }
    double at(std::size_t row, std::size_t i) const { return values[row * xi.size() + i]; }
};

struct FrontFixingOptions {
    double fixed_point_tol = 1e-10;  ///< on |rho^{p+1} - rho^p|
    int max_fixed_point_iters = 50;
    bool store_surface = false;
    int surface_stride = 1;  ///< keep every stride-th level (plus first and last)
};

struct FrontFixingReport {
    BoundaryCurve boundary;
    PortfolioSurface surface;  ///< populated iff store_surface
    std::vector<int> iterations_per_step;
    double max_fixed_point_residual = 0.0;
    double pi_min = 0.0;  ///< monitored over all interior values
    double pi_max = 0.0;
};

/// Explicit transport half-step: Pi^{j-1/2}(xi) = Pi^{j-1}(eta) with
/// eta = xi - ln(rho_new) + ln(rho_prev) - (r - q) k, linear interpolation
/// between grid values, -1 where eta <= 0 and 0 beyond the domain.
std::vector<double> transport_step(const std::vector<double>& prev_row, double rho_prev,
                                   double rho_new, const ModelParams& params, double k,
                                   double h);

/// Implicit diffusion-reaction step: solves the tridiagonal system with
/// Dirichlet values (-1, 0). The time argument of the singular coefficients
/// is clipped to tau~ = min(tau_j, T - k/2). A first-order upwind replaces
/// the central convection stencil where the cell Peclet number exceeds 2,
/// which keeps the system an M-matrix.
std::vector<double> diffusion_step(const std::vector<double>& half_row, double rho_new,
                                   const ModelParams& params, const AveragingSpec& avg,
                                   const GridSpec& grid, double tau_j);

/// Free-boundary update from the integrated form of the boundary equation,
/// trapezoid quadrature on [0, L].
double boundary_update(double rho_prev, const std::vector<double>& prev_row,
                       const std::vector<double>& new_row, const ModelParams& params,
                       const AveragingSpec& avg, const GridSpec& grid, double tau_j);

/// Residual of the pointwise boundary constraint
/// q rho - r + f(1/rho, T - tau) - (sigma^2/2) dPi/dxi(0, tau), one-sided
/// second-order derivative. Diagnostic only; the solver advances rho through
/// the integrated form.
double pointwise_boundary_residual(double rho_val, const std::vector<double>& row,
                                   const ModelParams& params, const AveragingSpec& avg,
                                   const GridSpec& grid, double tau_j);

/// Time-marches the transformed free-boundary system for an American Asian
/// call. Each level resolves the (rho, Pi) coupling to fixed_point_tol; the
/// scalar fixed point is solved by secant iteration on residual
/// g(ln rho) = F(Pi(ln rho)) - ln rho, which leaves the converged solution
/// identical to plain successive substitution but reaches tolerance in a
/// handful of evaluations. Arithmetic averaging is the validated path;
/// geometric and weighted run through the same machinery via the general
/// coefficient functions.
FrontFixingReport solve_front_fixing(const ModelParams& params, const AveragingSpec& avg,
                                     const GridSpec& grid,
                                     const FrontFixingOptions& opts = {});

/// Boundary view of a report (x*_t = 1 / rho(T - t)).
BoundaryCurve extract_boundary(const FrontFixingReport& report);

}  // namespace aao
