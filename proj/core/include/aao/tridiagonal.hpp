#pragma once

#include <span>
#include <vector>

namespace aao {

/// Solves the tridiagonal system lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i]
/// by the Thomas forward-elimination / back-substitution sweep. lower[0] and
/// upper[n-1] are ignored. Throws on pivot breakdown.
std::vector<double> thomas_solve(std::span<const double> lower, std::span<const double> diag,
                                 std::span<const double> upper, std::span<const double> rhs);

}  // namespace aao
