#include "aao/tridiagonal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aao {

std::vector<double> thomas_solve(std::span<const double> lower, std::span<const double> diag,
                                 std::span<const double> upper, std::span<const double> rhs) {
    const std::size_t n = rhs.size();
    if (lower.size() != n || diag.size() != n || upper.size() != n)
        throw std::invalid_argument("thomas_solve: band sizes must match rhs");
    if (n == 0) return {};
    std::vector<double> c_prime(n), x(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(diag[i]));
    double den = diag[0];
    if (std::abs(den) < 1e-14 * scale)
        throw std::runtime_error("thomas_solve: pivot breakdown at row 0");
    c_prime[0] = upper[0] / den;
    x[0] = rhs[0] / den;
    for (std::size_t i = 1; i < n; ++i) {
        den = diag[i] - lower[i] * c_prime[i - 1];
        if (std::abs(den) < 1e-14 * scale) {
            std::ostringstream msg;
            msg << "thomas_solve: pivot breakdown at row " << i << " of " << n;
            throw std::runtime_error(msg.str());
        }
        c_prime[i] = upper[i] / den;
        x[i] = (rhs[i] - lower[i] * x[i - 1]) / den;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c_prime[i] * x[i + 1];
    return x;
}

}  // namespace aao
