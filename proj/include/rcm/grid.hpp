#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rcm/connection.hpp"

namespace rcm {

// Periodic d-dimensional lattice with N (power of two) cells per axis and
// spacing h; the origin sits at index 0 and coordinates wrap around, so cell
// j carries the minimal-image coordinate j*h (or (j-N)*h past the midpoint).
struct GridGeometry {
    int dimension = 1;
    int cells_per_axis = 4096;
    double spacing = 1.0 / 64.0;

    std::size_t cell_count() const;
    double cell_volume() const;
    double period() const { return cells_per_axis * spacing; }
    // minimal-image coordinate of a single-axis index
    double axis_coordinate(int index) const {
        return (index <= cells_per_axis / 2 ? index : index - cells_per_axis) * spacing;
    }
    bool operator==(const GridGeometry&) const = default;
    void validate() const;
};

class GridFunction {
  public:
    GridFunction() = default;
    explicit GridFunction(GridGeometry g) : geom_(g), values_(g.cell_count(), 0.0) {
        g.validate();
    }
    GridFunction(GridGeometry g, std::vector<double> values);

    const GridGeometry& geometry() const { return geom_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    // minimal-image coordinates of a flat index
    std::vector<double> coordinate(std::size_t flat) const;
    // sum * h^d, the lattice version of the integral over R^d
    double integral() const;
    double sup_norm() const;
    // integral of |f|
    double l1_norm() const;

  private:
    GridGeometry geom_;
    std::vector<double> values_;
};

// Discrete Fourier coefficients with continuum scaling: coefficient k
// approximates int f(x) e^{-i w_k x} dx, so index 0 carries the integral.
struct SpectralFunction {
    GridGeometry geometry;
    std::vector<std::complex<double>> coefficients;
};

SpectralFunction forward_fft(const GridFunction& f);
GridFunction inverse_fft(const SpectralFunction& s);

// Periodic convolution scaled by h^d, discretizing int f(x-y) g(y) dy.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

// Cell values are the profile at the minimal-image displacement of each cell
// center. Throws if the grid period cannot hold the support twice over
// (wraparound guard).
GridFunction grid_from_radial(const ConnectionFunction& f, GridGeometry g);
GridFunction grid_from_radial_profile(std::span<const double> radii,
                                      std::span<const double> values, double support_radius,
                                      GridGeometry g);

}  // namespace rcm
