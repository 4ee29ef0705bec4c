#pragma once

#include <optional>

#include "rcm/graph_integrals.hpp"

namespace rcm {

struct ExpansionOptions {
    IntegralMethod method = IntegralMethod::automatic;
    int order_max = LabeledGraph::kDefaultOrderMax;
    int kappa_edge_budget = 21;
    EliminationOptions elimination{};
    McOptions mc{};
    int threads = 1;
};

// Low-intensity coefficient p_n(.,0) or q_n(.,0) on the grid.
struct CoefficientGrid {
    int order = 0;
    GridFunction values;            // kappa/J assembly
    IntegralMethod method_used = IntegralMethod::elimination;
    // pi/I assembly, retained as a cross-check when it is feasible
    std::optional<GridFunction> cross_check;
    std::optional<GridFunction> std_error;  // MC only
};

// p_n(x,0) = (1/n!) sum_{H in G_n} kappa_n(H) J_n(H,x); the pi/I route
// (1/n!) sum_G pi_n(G) I_n(G,x) is attached as cross_check when the method
// can evaluate it (elimination handles the I integrals only for n <= 2).
CoefficientGrid assemble_p(int n, const ConnectionFunction& f, GridGeometry geom,
                           const ExpansionOptions& opts = {});

// q_n(x,0): same kappa/J sum restricted to pivotal-free graphs.
CoefficientGrid assemble_q(int n, const ConnectionFunction& f, GridGeometry geom,
                           const ExpansionOptions& opts = {});

struct SeriesTail {
    double c1 = 0.0, c2 = 0.0;      // fitted sup-norm envelope |p_n| <= c1 c2^n
    double bound = 0.0;             // c1 (c2 t)^{N+1} / (1 - c2 t), or inf
    bool inside_radius = true;      // c2 * t < 1
};

// sum_{n<=N} t^n p_n(.,0) with a geometric tail bound fitted from the
// computed coefficient norms.
GridFunction series_P(double t, const std::vector<CoefficientGrid>& coefficients,
                      SeriesTail* tail = nullptr);

// Lemma-style integral bounds on connection probabilities of small
// point sets, evaluated from the I sums; a violated bound indicates an
// integration bug.
struct BoundReport {
    int order = 0;
    // int P(Gamma(0,x_1..x_n) connected) d(x_1..x_n) and its bound n! m^n e^{n+1}
    double integral_free = 0.0;
    double bound_free = 0.0;
    // sup_x sum_G I_n(G, x) and its bound n! m^n e^{n+2}
    double sup_pinned = 0.0;
    double bound_pinned = 0.0;
    // the pinned sum integrated over x as well (weaker check, same bound
    // times m_phi)
    double integral_pinned = 0.0;
    double bound_pinned_integrated = 0.0;
    bool ok = false;
};
BoundReport bound_check_integral(int n, const ConnectionFunction& f, GridGeometry geom,
                                 const ExpansionOptions& opts = {});

// sum over all of G_n of I_n(G, .), i.e. the connection probability of the
// pinned (n+2)-point set integrated over the internal points.
GridFunction sum_I_over_graphs(int n, const ConnectionFunction& f, GridGeometry geom,
                               const ExpansionOptions& opts = {});

}  // namespace rcm
