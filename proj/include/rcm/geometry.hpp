#pragma once

#include <span>
#include <vector>

#include "rcm/connection.hpp"

namespace rcm {

enum class Boundary { periodic, free };

// Finite simulation box [0, L)^d, the stand-in for the stationary process on
// R^d. Periodic is the default; free boundary exists to quantify bias.
struct BoxGeometry {
    int dimension = 1;
    double side_length = 40.0;
    Boundary boundary = Boundary::periodic;

    double volume() const;
    // Boundary-respecting displacement b - a (minimal image when periodic).
    void displacement(std::span<const double> a, std::span<const double> b,
                      std::span<double> out) const;
    bool contains(std::span<const double> p) const;
    // L > 2 * truncation radius, so a periodic image is unambiguous.
    void validate_for(const ConnectionFunction& f) const;
};

}  // namespace rcm
