#include "rcm/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rcm {

double BoxGeometry::volume() const {
    return std::pow(side_length, dimension);
}

void BoxGeometry::displacement(std::span<const double> a, std::span<const double> b,
                               std::span<double> out) const {
    for (int i = 0; i < dimension; ++i) {
        double d = b[i] - a[i];
        if (boundary == Boundary::periodic) {
            if (d > 0.5 * side_length) d -= side_length;
            else if (d < -0.5 * side_length) d += side_length;
        }
        out[i] = d;
    }
}

bool BoxGeometry::contains(std::span<const double> p) const {
    for (int i = 0; i < dimension; ++i)
        if (p[i] < 0.0 || p[i] >= side_length) return false;
    return true;
}

void BoxGeometry::validate_for(const ConnectionFunction& f) const {
    if (f.dimension() != dimension)
        throw std::invalid_argument("connection function and box dimension mismatch");
    if (side_length <= 2.0 * f.truncation_radius())
        throw std::invalid_argument("box side must exceed twice the truncation radius");
}

}  // namespace rcm
