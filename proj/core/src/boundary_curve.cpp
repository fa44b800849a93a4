#include "aao/boundary_curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aao {

void BoundaryCurve::validate() const {
    if (taus.size() != rhos.size() || taus.size() < 2)
        throw std::invalid_argument("BoundaryCurve: need >= 2 matching (tau, rho) nodes");
    if (!(maturity > 0.0)) throw std::invalid_argument("BoundaryCurve: maturity must be > 0");
    if (std::abs(taus.front()) > 1e-12 * maturity)
        throw std::invalid_argument("BoundaryCurve: tau grid must start at 0");
    for (std::size_t i = 0; i + 1 < taus.size(); ++i)
        if (!(taus[i + 1] > taus[i]))
            throw std::invalid_argument("BoundaryCurve: tau grid must be strictly increasing");
    if (taus.back() > maturity * (1.0 + 1e-12))
        throw std::invalid_argument("BoundaryCurve: tau grid exceeds maturity");
    for (double v : rhos)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("BoundaryCurve: rho values must be positive and finite");
}

double BoundaryCurve::rho(double tau) const {
    const double slack = 1e-9 * maturity;
    if (tau < taus.front() - slack || tau > taus.back() + slack)
        throw std::out_of_range("BoundaryCurve: tau outside covered range");
    tau = std::clamp(tau, taus.front(), taus.back());
    const auto it = std::upper_bound(taus.begin(), taus.end(), tau);
    if (it == taus.begin()) return rhos.front();
    if (it == taus.end()) return rhos.back();
    const std::size_t hi = static_cast<std::size_t>(it - taus.begin());
    const std::size_t lo = hi - 1;
    const double w = (tau - taus[lo]) / (taus[hi] - taus[lo]);
    return rhos[lo] + w * (rhos[hi] - rhos[lo]);
}

double BoundaryCurve::x_star(double t) const { return 1.0 / rho(maturity - t); }

bool BoundaryCurve::covers(double t) const {
    const double slack = 1e-9 * maturity;
    return t >= earliest_time() - slack && t <= maturity + slack;
}

BoundaryCurve constant_boundary(double x_star_value, double maturity, int nodes) {
    if (!(x_star_value > 0.0))
        throw std::invalid_argument("constant_boundary: x* must be > 0");
    if (nodes < 2) throw std::invalid_argument("constant_boundary: need >= 2 nodes");
    BoundaryCurve curve;
    curve.maturity = maturity;
    curve.taus.resize(nodes);
    curve.rhos.assign(nodes, 1.0 / x_star_value);
    for (int i = 0; i < nodes; ++i) curve.taus[i] = maturity * i / (nodes - 1.0);
    return curve;
}

}  // namespace aao
