#include "rcm/rng.hpp"

#include <cmath>

namespace rcm {

double CounterRng::next_normal() {
    if (have_spare_normal_) {
        have_spare_normal_ = false;
        return spare_normal_;
    }
    // Box-Muller; u1 kept away from 0 so the log is finite.
    double u1 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692 * u2;
    spare_normal_ = r * std::sin(a);
    have_spare_normal_ = true;
    return r * std::cos(a);
}

std::uint64_t CounterRng::next_poisson(double mean) {
    // Split large means into chunks so exp(-chunk) stays comfortably above
    // the double underflow threshold; the sum of independent Poissons is
    // Poisson with summed mean.
    std::uint64_t total = 0;
    while (mean > 16.0) {
        const double chunk = 16.0;
        const double limit = std::exp(-chunk);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= next_unit();
        } while (p > limit);
        total += k - 1;
        mean -= chunk;
    }
    if (mean > 0.0) {
        const double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= next_unit();
        } while (p > limit);
        total += k - 1;
    }
    return total;
}

}  // namespace rcm
