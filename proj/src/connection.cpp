#include "rcm/connection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rcm/quadrature.hpp"

namespace rcm {

double ball_volume(int dimension, double radius) {
    const double d = static_cast<double>(dimension);
    return std::pow(3.14159265358979323846, 0.5 * d) / std::tgamma(0.5 * d + 1.0) *
           std::pow(radius, d);
}

double sphere_surface(int dimension) {
    const double d = static_cast<double>(dimension);
    return 2.0 * std::pow(3.14159265358979323846, 0.5 * d) / std::tgamma(0.5 * d);
}

namespace {

// m_phi = s_d * int_0^{R_t} phi(r) r^{d-1} dr, relative error <= 1e-10.
// Piecewise-linear tables integrate exactly panel by panel; smooth kinds go
// through the adaptive rule.
double radial_mass(const ConnectionFunction& f, std::vector<double> breakpoints) {
    const int d = f.dimension();
    auto integrand = [&](double r) { return f.radial(r) * std::pow(r, d - 1); };
    if (!breakpoints.empty()) {
        breakpoints.push_back(0.0);
        breakpoints.push_back(f.truncation_radius());
        return sphere_surface(d) * integrate_panels(integrand, std::move(breakpoints));
    }
    return sphere_surface(d) * integrate_adaptive(integrand, 0.0, f.truncation_radius(), 1e-10);
}

}  // namespace

ConnectionFunction ConnectionFunction::gilbert(double radius, int dimension) {
    if (radius <= 0.0) throw std::invalid_argument("gilbert radius must be positive");
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    ConnectionFunction f;
    f.kind_ = PhiKind::gilbert;
    f.dimension_ = dimension;
    f.param_ = radius;
    f.truncation_radius_ = radius;
    f.mass_ = ball_volume(dimension, radius);
    return f;
}

ConnectionFunction ConnectionFunction::exponential(double rate, int dimension) {
    if (rate <= 0.0) throw std::invalid_argument("exponential rate must be positive");
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    ConnectionFunction f;
    f.kind_ = PhiKind::exponential;
    f.dimension_ = dimension;
    f.param_ = rate;
    f.truncation_radius_ = std::log(1.0 / kTruncationEpsilon) / rate;
    if (dimension == 1) {
        f.mass_ = 2.0 / rate;
    } else {
        f.mass_ = radial_mass(f, {});
    }
    return f;
}

ConnectionFunction ConnectionFunction::radial_table(
    std::vector<std::pair<double, double>> knots, int dimension) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    if (knots.size() < 2) throw std::invalid_argument("radial table needs at least two knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (knots[i].second < 0.0 || knots[i].second > 1.0)
            throw std::invalid_argument("radial table values must lie in [0,1]");
        if (i > 0 && knots[i].first <= knots[i - 1].first)
            throw std::invalid_argument("radial table radii must be strictly increasing");
    }
    if (knots.front().first < 0.0)
        throw std::invalid_argument("radial table radii must be nonnegative");
    ConnectionFunction f;
    f.kind_ = PhiKind::radial_table;
    f.dimension_ = dimension;
    f.truncation_radius_ = knots.back().first;
    f.knots_ = std::move(knots);
    std::vector<double> breaks;
    for (const auto& [r, v] : f.knots_) breaks.push_back(r);
    f.mass_ = radial_mass(f, std::move(breaks));
    if (f.mass_ <= 0.0) throw std::invalid_argument("connection function must have positive mass");
    return f;
}

double ConnectionFunction::radial(double r) const {
    r = std::abs(r);
    if (r > truncation_radius_) return 0.0;
    switch (kind_) {
        case PhiKind::gilbert:
            return 1.0;  // r <= R already established
        case PhiKind::exponential:
            return std::exp(-param_ * r);
        case PhiKind::radial_table: {
            if (r <= knots_.front().first) return knots_.front().second;
            auto it = std::lower_bound(knots_.begin(), knots_.end(), r,
                                       [](const auto& k, double x) { return k.first < x; });
            if (it == knots_.end()) return 0.0;
            const auto& [r1, v1] = *it;
            const auto& [r0, v0] = *(it - 1);
            const double w = (r - r0) / (r1 - r0);
            return v0 + w * (v1 - v0);
        }
    }
    return 0.0;
}

double ConnectionFunction::operator()(std::span<const double> x) const {
    double s = 0.0;
    for (double c : x) s += c * c;
    return radial(std::sqrt(s));
}

std::string ConnectionFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case PhiKind::gilbert: os << "gilbert(R=" << param_ << ")"; break;
        case PhiKind::exponential: os << "exponential(a=" << param_ << ")"; break;
        case PhiKind::radial_table: os << "radial-table(" << knots_.size() << " knots)"; break;
    }
    os << " d=" << dimension_;
    return os.str();
}

std::vector<double> sample_phi_displacement(const ConnectionFunction& f, CounterRng& rng) {
    const int d = f.dimension();
    const double rt = f.truncation_radius();
    std::vector<double> x(d);
    auto fill_direction = [&](double radius) {
        if (d == 1) {
            x[0] = (rng.next_unit() < 0.5) ? -radius : radius;
            return;
        }
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (int a = 0; a < d; ++a) {
                x[a] = rng.next_normal();
                norm2 += x[a] * x[a];
            }
        } while (norm2 == 0.0);
        const double scale = radius / std::sqrt(norm2);
        for (int a = 0; a < d; ++a) x[a] *= scale;
    };
    if (f.kind() == PhiKind::gilbert) {
        const double r = rt * std::pow(rng.next_unit(), 1.0 / static_cast<double>(d));
        fill_direction(r);
        return x;
    }
    // Rejection from the uniform ball: accepted points have density
    // phi/m_phi exactly.
    for (;;) {
        const double r = rt * std::pow(rng.next_unit(), 1.0 / static_cast<double>(d));
        if (rng.next_unit() < f.radial(r)) {
            fill_direction(r);
            return x;
        }
    }
}

}  // namespace rcm
