#include "rcm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rcm {

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol) {
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, 15, rel_tol, &error);
    const double scale = std::max(std::abs(value), 1e-300);
    if (error / scale > rel_tol * 10.0) {
        throw std::runtime_error("quadrature did not converge: achieved relative error " +
                                 std::to_string(error / scale));
    }
    return value;
}

double integrate_panels(const std::function<double(double)>& f,
                        std::vector<double> breakpoints) {
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end(),
                                  [](double x, double y) { return std::abs(x - y) < 1e-14; }),
                      breakpoints.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        if (b - a < 1e-15) continue;
        total += boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
    }
    return total;
}

}  // namespace rcm
