#pragma once

#include <string>
#include <vector>

#include "rcm/sample.hpp"

namespace rcm {

struct EstimateRow {
    std::string input;  // displacement radius or size class
    double estimate = 0.0;
    double std_error = 0.0;
    long long replicates = 0;
};

struct EstimateMeta {
    double t = 0.0;
    std::string model;
    double box_side = 0.0;
    std::string boundary;
    int dimension = 1;
    std::uint64_t seed = 0;
    long long replicates = 0;
    int threads = 1;
    double wall_seconds = 0.0;
    bool warning = false;
    std::string warning_text;
};

struct EstimateTable {
    std::vector<EstimateRow> rows;
    EstimateMeta meta;
};

struct RadialProfile {
    std::vector<double> bin_edges;   // size m+1, monotone, starts at 0
    std::vector<double> values;      // size m, estimate at bin center
    std::vector<double> std_errors;  // size m
    std::vector<long long> counts;   // size m
    std::vector<double> centers() const;
};

// int P(x) dx from the radial profile: per-bin value times the spherical
// shell volume between the bin edges.
struct ProfileIntegral {
    double value = 0.0;
    double std_error = 0.0;
};
ProfileIntegral profile_integral(const RadialProfile& p, int dimension);

// Fraction of replicates in which the two pins {0, x} land in the same
// cluster: the estimator of the pair-connectedness P_t(x). Binomial errors.
EstimateTable estimate_pairconn(double t, const ConnectionFunction& f, const BoxGeometry& box,
                                const std::vector<std::vector<double>>& displacements,
                                long long replicates, RngSpec rng, int threads = 1);

// Same estimator on radial bins (displacement = bin center along axis 0).
RadialProfile estimate_pairconn_profile(double t, const ConnectionFunction& f,
                                        const BoxGeometry& box, double r_max, double bin_width,
                                        long long replicates, RngSpec rng, int threads = 1);

// pmf of |C(0)| for sizes 1..max_size plus an overflow class labeled ">max".
EstimateTable estimate_cluster_size_dist(double t, const ConnectionFunction& f,
                                         const BoxGeometry& box, int max_size,
                                         long long replicates, RngSpec rng, int threads = 1);

// Deterministic quadrature of the cluster-size formula
//   P(|C| = n+1) = (t^n / n!) int P(Gamma(0,x_1..x_n) connected)
//                  * exp[-t int (1 - prod_i (1 - phi(y - x_i))) dy] dx,
// read as exp(-t m_phi) at n = 0. d = 1, compact phi, n <= 2.
double cluster_size_exact_small(double t, const ConnectionFunction& f, int n,
                                double rel_tol = 1e-6);

struct MeanEstimate {
    double value = 0.0;
    double std_error = 0.0;  // batch means over 32 batches
    double boundary_fraction = 0.0;
    bool boundary_warning = false;
    long long replicates = 0;
};

// Sample mean of |C(0)| with a batch-means error bar; clusters reaching the
// box boundary (free) or spanning half the period (periodic) are counted as
// a bias diagnostic. Guarded by the subcritical bound.
MeanEstimate estimate_mean_cluster_size(double t, const ConnectionFunction& f,
                                        const BoxGeometry& box, long long replicates,
                                        RngSpec rng, int threads = 1,
                                        double subcritical_bound = 0.0,
                                        double boundary_warn_threshold = 0.05);

// Sample mean of 1/|C(0)| (pins {0}), the "clusters per vertex".
MeanEstimate estimate_mean_inverse_cluster_size(double t, const ConnectionFunction& f,
                                                const BoxGeometry& box, long long replicates,
                                                RngSpec rng, int threads = 1);

// Mean number of distinct clusters fully inside the box divided by the box
// volume (no pins).
MeanEstimate estimate_cluster_density(double t, const ConnectionFunction& f,
                                      const BoxGeometry& box, long long replicates, RngSpec rng,
                                      int threads = 1, double subcritical_bound = 0.0);

}  // namespace rcm
