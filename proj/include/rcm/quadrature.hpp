#pragma once

#include <functional>
#include <vector>

namespace rcm {

// Adaptive Gauss-Kronrod on [a, b]; throws if the requested relative
// tolerance is not reached.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol);

// Fixed-order Gauss-Legendre applied per panel between consecutive
// breakpoints. Exactness relies on the integrand being smooth inside each
// panel, so callers list every kink/jump location as a breakpoint.
double integrate_panels(const std::function<double(double)>& f,
                        std::vector<double> breakpoints);

}  // namespace rcm
