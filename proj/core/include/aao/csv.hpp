#pragma once

#include "aao/boundary_curve.hpp"
#include "aao/expiry.hpp"
#include "aao/front_fixing.hpp"
#include "aao/monte_carlo.hpp"
#include "aao/psor.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace aao::csv {

/// Ordered key/value pairs echoed as `# key = value` comment lines at the
/// top of every file. Always includes the library version; deliberately no
/// timestamps so identical runs produce identical bytes.
class Header {
public:
    Header& add(std::string key, std::string value);
    Header& add(std::string key, double value);
    Header& add(std::string key, long long value);
    void write(std::ostream& os) const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// 10 significant digits, '.' decimal separator, locale independent.
std::string format_number(double v);

void write_boundary(std::ostream& os, const BoundaryCurve& curve, const Header& header);
void write_surface(std::ostream& os, const PortfolioSurface& surface, const Header& header);
void write_value_surface(std::ostream& os, const ValueSurface& surface, const Header& header);
void write_sweep(std::ostream& os, const ExpiryLimitGrid& grid, const Header& header);
void write_estimates(std::ostream& os,
                     const std::vector<std::pair<std::string, McEstimate>>& rows,
                     const Header& header);
void write_comparison(std::ostream& os, const std::vector<double>& t,
                      const std::vector<double>& x_front_fixing,
                      const std::vector<double>& x_psor, const Header& header);

}  // namespace aao::csv
