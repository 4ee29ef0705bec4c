#pragma once

#include "rcm/grid.hpp"

namespace rcm {

struct OzeSolution {
    GridFunction Q;
    // min over grid frequencies of 1 + t * Re(P_hat); must stay above the
    // spectral floor for the division to be accepted
    double min_denominator = 0.0;
};

inline constexpr double kSpectralFloor = 1e-8;

// Spectral solve of P = Q + t Q * P: Q_hat = P_hat / (1 + t P_hat).
// Refuses (rather than regularizes) when 1 + t P_hat dips below the floor at
// any grid frequency: that signals supercritical or noisy input.
OzeSolution solve_oze_fourier(const GridFunction& P, double t,
                              double spectral_floor = kSpectralFloor);

struct NeumannSolution {
    GridFunction Q;
    int terms_used = 0;
    double last_term_sup = 0.0;
};

// Partial sums of sum_n (-t)^n P^{*(n+1)}, valid when t * ||P||_1 < 1.
NeumannSolution solve_oze_neumann(const GridFunction& P, double t, int max_terms = 200,
                                  double tol = 1e-12);

// I = int Q; asserts 0 <= I < 1/t and returns (1 - t I)^{-1}, the mean size
// of the cluster of a typical point.
double mean_cluster_from_Q(const GridFunction& Q, double t);

// Sup norm of P - Q - t Q*P, the defining-equation residual.
double oze_residual(const GridFunction& P, const GridFunction& Q, double t);

}  // namespace rcm
