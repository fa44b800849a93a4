#pragma once

#include <functional>
#include <vector>

namespace aao {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Computes the order-n rule by Newton iteration on the Legendre polynomial.
GaussLegendreRule gauss_legendre_rule(int order);

/// Composite Gauss-Legendre integral of f over [a, b] using roughly
/// `total_nodes` evaluations split into panels of 16 nodes.
double integrate_gauss_legendre(const std::function<double(double)>& f,
                                double a, double b, int total_nodes);

}  // namespace aao
