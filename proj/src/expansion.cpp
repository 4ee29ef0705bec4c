#include "rcm/expansion.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace rcm {

namespace {

// Weighted sum of per-graph integrals, parallel over graphs with a
// deterministic ordered reduction (per-graph contributions are accumulated
// in enumeration order regardless of which thread produced them).
GridFunction weighted_graph_sum(const std::vector<LabeledGraph>& graphs,
                                const std::vector<long long>& weights, bool use_I,
                                const ConnectionFunction& f, GridGeometry geom,
                                const ExpansionOptions& opts, double scale,
                                IntegralMethod* method_used, GridFunction* variance_out) {
    std::vector<std::optional<GraphIntegralResult>> results(graphs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> used_mc{false};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            if (weights[i] == 0) continue;
            McOptions mc = opts.mc;
            // one stream family per graph so results are schedule-independent
            mc.rng.stream = mc.rng.stream ^ (graphs[i].edge_mask() * 2654435761ull + 0x9e37u);
            mc.threads = 1;
            auto r = use_I ? eval_I(graphs[i], f, geom, opts.method, opts.elimination, mc)
                           : eval_J(graphs[i], f, geom, opts.method, opts.elimination, mc);
            if (r.method_used == IntegralMethod::monte_carlo) used_mc = true;
            results[i] = std::move(r);
        }
    };
    const int threads = std::max(1, opts.threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    GridFunction out(geom);
    GridFunction var(geom);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!results[i]) continue;
        const auto& r = *results[i];
        const double w = static_cast<double>(weights[i]) * scale;
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * r.value[c];
        if (r.std_error) {
            for (std::size_t c = 0; c < var.size(); ++c) {
                const double e = w * (*r.std_error)[c];
                var[c] += e * e;
            }
        }
    }
    if (method_used)
        *method_used = used_mc ? IntegralMethod::monte_carlo : IntegralMethod::elimination;
    if (variance_out) *variance_out = std::move(var);
    return out;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

CoefficientGrid assemble(int n, const ConnectionFunction& f, GridGeometry geom,
                         const ExpansionOptions& opts, bool pivotal_free_only) {
    if (n < 0 || n > opts.order_max)
        throw std::invalid_argument("expansion order beyond the configured maximum");
    const auto graphs = enum_connected_graphs(n, opts.order_max);
    std::vector<long long> kappa(graphs.size(), 0);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (pivotal_free_only && !pivotal_free(graphs[i])) continue;
        kappa[i] = kappa_n(graphs[i], opts.kappa_edge_budget);
    }

    CoefficientGrid out;
    out.order = n;
    const double scale = 1.0 / factorial(n);
    GridFunction var(geom);
    out.values = weighted_graph_sum(graphs, kappa, /*use_I=*/false, f, geom, opts, scale,
                                    &out.method_used, &var);
    bool any_err = false;
    for (std::size_t c = 0; c < var.size(); ++c)
        if (var[c] > 0.0) {
            any_err = true;
            break;
        }
    if (any_err) {
        GridFunction err(geom);
        for (std::size_t c = 0; c < var.size(); ++c) err[c] = std::sqrt(var[c]);
        out.std_error = std::move(err);
    }

    // pi/I cross-check: the I elimination couples all pairs, so it is only
    // attempted for small orders (or when Monte Carlo was requested anyway).
    const bool cross_feasible =
        (opts.method == IntegralMethod::monte_carlo) || n <= 2;
    if (!pivotal_free_only && cross_feasible) {
        std::vector<long long> pis(graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i) pis[i] = pi_n(graphs[i]);
        try {
            out.cross_check = weighted_graph_sum(graphs, pis, /*use_I=*/true, f, geom, opts,
                                                 scale, nullptr, nullptr);
        } catch (const EliminationInfeasible&) {
            // cross-check is best-effort
        }
    }
    return out;
}

}  // namespace

CoefficientGrid assemble_p(int n, const ConnectionFunction& f, GridGeometry geom,
                           const ExpansionOptions& opts) {
    return assemble(n, f, geom, opts, /*pivotal_free_only=*/false);
}

CoefficientGrid assemble_q(int n, const ConnectionFunction& f, GridGeometry geom,
                           const ExpansionOptions& opts) {
    return assemble(n, f, geom, opts, /*pivotal_free_only=*/true);
}

GridFunction series_P(double t, const std::vector<CoefficientGrid>& coefficients,
                      SeriesTail* tail) {
    if (coefficients.empty()) throw std::invalid_argument("series needs at least p_0");
    GridFunction out(coefficients.front().values.geometry());
    double tn = 1.0;
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
        if (coefficients[n].order != static_cast<int>(n))
            throw std::invalid_argument("coefficients must be ordered p_0..p_N");
        const auto& p = coefficients[n].values;
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += tn * p[c];
        tn *= t;
    }
    if (tail) {
        // fit |p_n|_sup <= c1 c2^n from the computed norms
        std::vector<double> norms;
        for (const auto& c : coefficients) norms.push_back(c.values.sup_norm());
        double c2 = 0.0;
        for (std::size_t n = 0; n + 1 < norms.size(); ++n)
            if (norms[n] > 1e-300) c2 = std::max(c2, norms[n + 1] / norms[n]);
        if (c2 <= 0.0) c2 = 1.0;
        double c1 = 0.0;
        for (std::size_t n = 0; n < norms.size(); ++n)
            c1 = std::max(c1, norms[n] / std::pow(c2, static_cast<double>(n)));
        tail->c1 = c1;
        tail->c2 = c2;
        const double r = c2 * t;
        const int N = static_cast<int>(coefficients.size()) - 1;
        if (r < 1.0) {
            tail->inside_radius = true;
            tail->bound = c1 * std::pow(r, N + 1) / (1.0 - r);
        } else {
            tail->inside_radius = false;
            tail->bound = std::numeric_limits<double>::infinity();
        }
    }
    return out;
}

GridFunction sum_I_over_graphs(int n, const ConnectionFunction& f, GridGeometry geom,
                               const ExpansionOptions& opts) {
    const auto graphs = enum_connected_graphs(n, opts.order_max);
    std::vector<long long> ones(graphs.size(), 1);
    return weighted_graph_sum(graphs, ones, /*use_I=*/true, f, geom, opts, 1.0, nullptr,
                              nullptr);
}

BoundReport bound_check_integral(int n, const ConnectionFunction& f, GridGeometry geom,
                                 const ExpansionOptions& opts) {
    if (n < 1) throw std::invalid_argument("bound check needs n >= 1");
    BoundReport rep;
    rep.order = n;
    const double m = f.mass();
    const double e = std::exp(1.0);

    // int P(Gamma(0,x_1..x_n) connected) d(x_1..x_n): relabel x_n as the
    // output displacement, so it is the order n-1 pinned sum integrated over
    // the grid.
    const GridFunction pinned_lower = sum_I_over_graphs(n - 1, f, geom, opts);
    rep.integral_free = pinned_lower.integral();
    rep.bound_free = factorial(n) * std::pow(m, n) * std::pow(e, n + 1);

    const GridFunction pinned = sum_I_over_graphs(n, f, geom, opts);
    rep.sup_pinned = pinned.sup_norm();
    rep.bound_pinned = factorial(n) * std::pow(m, n) * std::pow(e, n + 2);
    rep.integral_pinned = pinned.integral();
    rep.bound_pinned_integrated = rep.bound_pinned * m;

    rep.ok = rep.integral_free <= rep.bound_free && rep.sup_pinned <= rep.bound_pinned &&
             rep.integral_pinned <= rep.bound_pinned_integrated;
    return rep;
}

}  // namespace rcm
