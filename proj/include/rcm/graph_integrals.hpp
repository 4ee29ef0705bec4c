#pragma once

#include <optional>

#include "rcm/connection.hpp"
#include "rcm/graphs.hpp"
#include "rcm/grid.hpp"
#include "rcm/rng.hpp"

namespace rcm {

enum class IntegralMethod { automatic, elimination, monte_carlo };

struct EliminationOptions {
    // largest intermediate tensor, in entries (doubles)
    std::size_t max_tensor_entries = std::size_t{1} << 27;
    // per-graph multiply-accumulate guard
    double max_flops = 6e10;
};

struct McOptions {
    long long samples = 200000;
    RngSpec rng{};
    int threads = 1;
};

// Thrown when the elimination route would exceed its memory/flop budget; the
// caller is expected to fall back to Monte Carlo.
struct EliminationInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphIntegralResult {
    GridFunction value;
    std::optional<GridFunction> std_error;  // per-cell, Monte Carlo only
    IntegralMethod method_used = IntegralMethod::elimination;
    long long samples = 0;
};

// J_n(G, x) = int prod_{(i,j) in E(G)} phi(x_i - x_j) dx_1..dx_n for every
// grid x, with x_0 = 0 and x_{n+1} = x.
GraphIntegralResult eval_J(const LabeledGraph& g, const ConnectionFunction& f, GridGeometry geom,
                           IntegralMethod method = IntegralMethod::automatic,
                           const EliminationOptions& elim = {}, const McOptions& mc = {});

// Same integral with the full RCM realization probability as integrand:
// prod_{edges} phi * prod_{non-edges} (1 - phi). The non-edge factors couple
// every vertex pair, so elimination is viable only for small orders.
GraphIntegralResult eval_I(const LabeledGraph& g, const ConnectionFunction& f, GridGeometry geom,
                           IntegralMethod method = IntegralMethod::automatic,
                           const EliminationOptions& elim = {}, const McOptions& mc = {});

}  // namespace rcm
