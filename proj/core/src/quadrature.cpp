#include "aao/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace aao {

GaussLegendreRule gauss_legendre_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre_rule: order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th positive root
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence: p_k(x), derivative via (x^2-1)p'_n = n(x p_n - p_{n-1})
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

double integrate_gauss_legendre(const std::function<double(double)>& f,
                                double a, double b, int total_nodes) {
    if (total_nodes < 1) throw std::invalid_argument("integrate_gauss_legendre: need >= 1 node");
    if (a == b) return 0.0;
    constexpr int kPanelOrder = 16;
    const int panels = (total_nodes + kPanelOrder - 1) / kPanelOrder;
    static const GaussLegendreRule rule = gauss_legendre_rule(kPanelOrder);
    const double width = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + 0.5 * width;
        const double hw = 0.5 * width;
        double panel = 0.0;
        for (int i = 0; i < kPanelOrder; ++i)
            panel += rule.weights[i] * f(mid + hw * rule.nodes[i]);
        sum += panel * hw;
    }
    return sum;
}

}  // namespace aao
