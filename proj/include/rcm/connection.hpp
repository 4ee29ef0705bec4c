#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rcm/rng.hpp"

namespace rcm {

enum class PhiKind { gilbert, exponential, radial_table };

// Volume of the d-ball of radius r.
double ball_volume(int dimension, double radius);
// Surface area of the unit (d-1)-sphere, 2 pi^{d/2} / Gamma(d/2).
double sphere_surface(int dimension);

// Symmetric connection probability phi: R^d -> [0,1], radial by construction,
// treated as exactly zero beyond its truncation radius. The total mass
// m_phi = int phi(x) dx is computed once at construction (analytically where
// a closed form exists, by adaptive radial quadrature otherwise).
class ConnectionFunction {
  public:
    static constexpr double kTruncationEpsilon = 1e-12;

    static ConnectionFunction gilbert(double radius, int dimension);
    static ConnectionFunction exponential(double rate, int dimension);
    // knots: sorted (radius, value) pairs, values in [0,1]; linear
    // interpolation between knots, zero beyond the last radius.
    static ConnectionFunction radial_table(std::vector<std::pair<double, double>> knots,
                                           int dimension);

    PhiKind kind() const { return kind_; }
    int dimension() const { return dimension_; }
    double truncation_radius() const { return truncation_radius_; }
    double mass() const { return mass_; }
    double gilbert_radius() const { return param_; }
    double exponential_rate() const { return param_; }

    // phi as a function of distance from the origin.
    double radial(double r) const;
    // phi at a displacement vector (radial evaluation, so phi(x) == phi(-x)).
    double operator()(std::span<const double> x) const;

    std::string describe() const;

  private:
    ConnectionFunction() = default;

    PhiKind kind_ = PhiKind::gilbert;
    int dimension_ = 1;
    double param_ = 1.0;  // gilbert radius or exponential rate
    std::vector<std::pair<double, double>> knots_;
    double truncation_radius_ = 1.0;
    double mass_ = 0.0;
};

// Draw a displacement with density phi/m_phi: exact inversion for gilbert,
// exact rejection from the uniform ball of truncation radius otherwise.
std::vector<double> sample_phi_displacement(const ConnectionFunction& f, CounterRng& rng);

}  // namespace rcm
