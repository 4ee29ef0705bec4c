#include "rcm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace rcm {

namespace {
// FFTW plan creation is not thread-safe; execution is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

std::size_t GridGeometry::cell_count() const {
    std::size_t n = 1;
    for (int a = 0; a < dimension; ++a) n *= static_cast<std::size_t>(cells_per_axis);
    return n;
}

double GridGeometry::cell_volume() const {
    return std::pow(spacing, dimension);
}

void GridGeometry::validate() const {
    if (dimension < 1) throw std::invalid_argument("grid dimension must be >= 1");
    if (cells_per_axis < 2 || (cells_per_axis & (cells_per_axis - 1)) != 0)
        throw std::invalid_argument("cells per axis must be a power of two");
    if (!(spacing > 0.0)) throw std::invalid_argument("grid spacing must be positive");
}

GridFunction::GridFunction(GridGeometry g, std::vector<double> values) : geom_(g) {
    g.validate();
    if (values.size() != g.cell_count())
        throw std::invalid_argument("grid value array has wrong size");
    values_ = std::move(values);
}

std::vector<double> GridFunction::coordinate(std::size_t flat) const {
    std::vector<double> x(geom_.dimension);
    for (int a = geom_.dimension - 1; a >= 0; --a) {
        const int idx = static_cast<int>(flat % geom_.cells_per_axis);
        flat /= geom_.cells_per_axis;
        x[a] = geom_.axis_coordinate(idx);
    }
    return x;
}

double GridFunction::integral() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s * geom_.cell_volume();
}

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double GridFunction::l1_norm() const {
    double s = 0.0;
    for (double v : values_) s += std::abs(v);
    return s * geom_.cell_volume();
}

SpectralFunction forward_fft(const GridFunction& f) {
    const auto& g = f.geometry();
    const std::size_t n = g.cell_count();
    SpectralFunction out{g, std::vector<std::complex<double>>(n)};
    std::vector<std::complex<double>> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = f[i];
    std::vector<int> dims(g.dimension, g.cells_per_axis);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_dft(g.dimension, dims.data(),
                             reinterpret_cast<fftw_complex*>(in.data()),
                             reinterpret_cast<fftw_complex*>(out.coefficients.data()),
                             FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
    const double scale = g.cell_volume();
    for (auto& c : out.coefficients) c *= scale;
    return out;
}

GridFunction inverse_fft(const SpectralFunction& s) {
    const auto& g = s.geometry;
    const std::size_t n = g.cell_count();
    std::vector<std::complex<double>> in(s.coefficients), out(n);
    std::vector<int> dims(g.dimension, g.cells_per_axis);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_dft(g.dimension, dims.data(),
                             reinterpret_cast<fftw_complex*>(in.data()),
                             reinterpret_cast<fftw_complex*>(out.data()),
                             FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
    GridFunction r(g);
    const double scale = 1.0 / (g.cell_volume() * static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) r[i] = out[i].real() * scale;
    return r;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    if (!(f.geometry() == g.geometry()))
        throw std::invalid_argument("convolve: grid geometry mismatch");
    SpectralFunction F = forward_fft(f);
    const SpectralFunction G = forward_fft(g);
    for (std::size_t i = 0; i < F.coefficients.size(); ++i)
        F.coefficients[i] *= G.coefficients[i];
    return inverse_fft(F);
}

namespace {

template <typename Radial>
GridFunction fill_radial(GridGeometry g, double support_radius, Radial&& radial) {
    g.validate();
    if (g.period() < 2.0 * support_radius)
        throw std::invalid_argument(
            "grid period is below twice the support radius (wraparound guard)");
    GridFunction out(g);
    const std::size_t n = g.cell_count();
    for (std::size_t flat = 0; flat < n; ++flat) {
        std::size_t rest = flat;
        double r2 = 0.0;
        for (int a = 0; a < g.dimension; ++a) {
            const int idx = static_cast<int>(rest % g.cells_per_axis);
            rest /= g.cells_per_axis;
            const double c = g.axis_coordinate(idx);
            r2 += c * c;
        }
        out[flat] = radial(std::sqrt(r2));
    }
    return out;
}

}  // namespace

GridFunction grid_from_radial(const ConnectionFunction& f, GridGeometry g) {
    if (f.dimension() != g.dimension)
        throw std::invalid_argument("grid_from_radial: dimension mismatch");
    return fill_radial(g, f.truncation_radius(), [&](double r) { return f.radial(r); });
}

GridFunction grid_from_radial_profile(std::span<const double> radii,
                                      std::span<const double> values, double support_radius,
                                      GridGeometry g) {
    if (radii.size() != values.size() || radii.empty())
        throw std::invalid_argument("radial profile needs matching, nonempty arrays");
    auto interp = [&](double r) -> double {
        if (r > support_radius) return 0.0;
        if (r <= radii.front()) return values.front();
        auto it = std::lower_bound(radii.begin(), radii.end(), r);
        if (it == radii.end()) return 0.0;
        const std::size_t hi = static_cast<std::size_t>(it - radii.begin());
        const std::size_t lo = hi - 1;
        const double w = (r - radii[lo]) / (radii[hi] - radii[lo]);
        return values[lo] + w * (values[hi] - values[lo]);
    };
    return fill_radial(g, support_radius, interp);
}

}  // namespace rcm
