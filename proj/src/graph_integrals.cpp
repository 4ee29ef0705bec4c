#include "rcm/graph_integrals.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

namespace rcm {

namespace {

// Per-axis half-width of the phi kernel in cells: phi vanishes whenever any
// axis difference exceeds it.
int kernel_half_width(const ConnectionFunction& f, const GridGeometry& g) {
    return static_cast<int>(std::floor(f.truncation_radius() / g.spacing + 1e-9));
}

// Hop counts from vertex 0; finite for every vertex of a connected graph.
std::vector<int> hop_distance_from_start(const LabeledGraph& g) {
    const int nv = g.vertex_count();
    std::vector<int> dist(nv, -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        for (int u = 0; u < nv; ++u) {
            if (u != v && dist[u] < 0 && g.has_edge(u, v)) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

// Dense phi table over per-axis cell differences in [-K, K]^d.
struct KernelTable {
    int half_width = 0;
    int d = 1;
    int side = 1;
    std::vector<double> phi;

    double phi_at(const int* delta) const {
        std::size_t off = 0;
        for (int a = 0; a < d; ++a) {
            const int c = delta[a];
            if (c < -half_width || c > half_width) return 0.0;
            off = off * static_cast<std::size_t>(side) +
                  static_cast<std::size_t>(c + half_width);
        }
        return phi[off];
    }
};

KernelTable build_kernel_table(const ConnectionFunction& f, const GridGeometry& g) {
    KernelTable t;
    t.half_width = kernel_half_width(f, g);
    t.d = g.dimension;
    t.side = 2 * t.half_width + 1;
    std::size_t n = 1;
    for (int a = 0; a < t.d; ++a) n *= static_cast<std::size_t>(t.side);
    t.phi.resize(n);
    std::vector<int> c(t.d, -t.half_width);
    for (std::size_t flat = 0; flat < n; ++flat) {
        double r2 = 0.0;
        for (int a = 0; a < t.d; ++a) {
            const double x = c[a] * g.spacing;
            r2 += x * x;
        }
        t.phi[flat] = f.radial(std::sqrt(r2));
        for (int a = t.d - 1; a >= 0; --a) {
            if (++c[a] <= t.half_width) break;
            c[a] = -t.half_width;
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Variable elimination over support windows.
//
// Vertex 0 is pinned at the origin, so factors involving it are unary in the
// other endpoint. Coordinates are absolute cell offsets confined to
// per-vertex windows |c| <= dist(v, 0) * R_t / h per axis; outside them the
// integrand vanishes because every hop is bounded by the truncation radius.
// Internal vertices are contracted one at a time (cheapest first); the
// leftover unary profile over the end vertex is the integral as a function
// of the output displacement.
// ---------------------------------------------------------------------------

struct DenseFactor {
    std::vector<int> scope;    // vertex ids, ascending
    std::vector<double> data;  // row-major over the scope windows, d axes per vertex
};

struct KernelFactor {
    int u = 0, v = 0;         // free vertices, u < v
    bool complement = false;  // false: phi, true: 1 - phi
};

class Eliminator {
  public:
    Eliminator(const LabeledGraph& g, const ConnectionFunction& f, GridGeometry geom,
               bool include_nonedges, const EliminationOptions& opts)
        : graph_(g), geom_(geom), opts_(opts), d_(geom.dimension), n_(g.order()),
          end_(g.end_vertex()), kernel_(build_kernel_table(f, geom)) {
        const auto dist = hop_distance_from_start(graph_);
        window_half_.resize(graph_.vertex_count());
        for (int v = 0; v < graph_.vertex_count(); ++v) {
            window_half_[v] = static_cast<int>(
                std::floor(dist[v] * f.truncation_radius() / geom_.spacing + 1e-9));
        }
        if (window_half_[end_] >= geom_.cells_per_axis / 2)
            throw std::invalid_argument(
                "grid period cannot hold the graph support (wraparound guard)");

        const int nv = graph_.vertex_count();
        for (int i = 0; i < nv; ++i) {
            for (int j = i + 1; j < nv; ++j) {
                const bool edge = graph_.has_edge(i, j);
                if (!edge && !include_nonedges) continue;
                if (i == 0) {
                    dense_.push_back(unary_from_origin(j, !edge));
                } else {
                    kernels_.push_back({i, j, !edge});
                }
            }
        }
    }

    GridFunction run() {
        std::vector<int> remaining;
        for (int v = 1; v <= n_; ++v) remaining.push_back(v);
        while (!remaining.empty()) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_i = 0;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                const double c = cost_estimate(remaining[i]);
                if (c < best) {
                    best = c;
                    best_i = i;
                }
            }
            const int v = remaining[best_i];
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_i));
            eliminate(v);
        }
        return gather();
    }

  private:
    std::size_t window_volume(int v) const {
        std::size_t s = 1;
        for (int a = 0; a < d_; ++a) s *= static_cast<std::size_t>(2 * window_half_[v] + 1);
        return s;
    }

    DenseFactor unary_from_origin(int v, bool complement) const {
        DenseFactor fac;
        fac.scope = {v};
        fac.data.resize(window_volume(v));
        const int half = window_half_[v];
        std::vector<int> c(d_, -half);
        for (std::size_t flat = 0; flat < fac.data.size(); ++flat) {
            const double p = kernel_.phi_at(c.data());
            fac.data[flat] = complement ? 1.0 - p : p;
            for (int a = d_ - 1; a >= 0; --a) {
                if (++c[a] <= half) break;
                c[a] = -half;
            }
        }
        return fac;
    }

    double cost_estimate(int v) const {
        double cost = static_cast<double>(window_volume(v));
        std::vector<int> nbrs;
        for (const auto& fac : dense_)
            if (std::find(fac.scope.begin(), fac.scope.end(), v) != fac.scope.end())
                for (int u : fac.scope)
                    if (u != v) nbrs.push_back(u);
        for (const auto& k : kernels_) {
            if (k.u == v) nbrs.push_back(k.v);
            if (k.v == v) nbrs.push_back(k.u);
        }
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        for (int u : nbrs) cost *= static_cast<double>(window_volume(u));
        return cost;
    }

    void eliminate(int v) {
        std::vector<DenseFactor> dfs;
        std::vector<KernelFactor> kfs;
        for (std::size_t i = 0; i < dense_.size();) {
            if (std::find(dense_[i].scope.begin(), dense_[i].scope.end(), v) !=
                dense_[i].scope.end()) {
                dfs.push_back(std::move(dense_[i]));
                dense_.erase(dense_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        for (std::size_t i = 0; i < kernels_.size();) {
            if (kernels_[i].u == v || kernels_[i].v == v) {
                kfs.push_back(kernels_[i]);
                kernels_.erase(kernels_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }

        std::vector<int> scope;
        for (const auto& fac : dfs)
            for (int u : fac.scope)
                if (u != v) scope.push_back(u);
        for (const auto& k : kfs) {
            if (k.u != v) scope.push_back(k.u);
            if (k.v != v) scope.push_back(k.v);
        }
        std::sort(scope.begin(), scope.end());
        scope.erase(std::unique(scope.begin(), scope.end()), scope.end());

        DenseFactor result;
        result.scope = scope;
        std::size_t entries = 1;
        for (int u : scope) entries *= window_volume(u);
        if (entries > opts_.max_tensor_entries)
            throw EliminationInfeasible(
                "elimination tensor exceeds the memory budget; fall back to Monte Carlo");
        flops_ += static_cast<double>(entries) * static_cast<double>(window_volume(v));
        if (flops_ > opts_.max_flops)
            throw EliminationInfeasible(
                "elimination flop estimate exceeds the budget; fall back to Monte Carlo");
        result.data.assign(entries, 0.0);

        contract(dfs, kfs, v, result);

        if (scope.empty()) {
            scalar_ *= result.data[0];
        } else {
            dense_.push_back(std::move(result));
        }
    }

    // One (vertex, axis) pair per loop level; scope vertices first, the
    // eliminated vertex last. phi-kernels clamp the later endpoint's range
    // around the earlier one, which is what keeps dense graphs tractable.
    void contract(const std::vector<DenseFactor>& dfs, const std::vector<KernelFactor>& kfs,
                  int v, DenseFactor& result) {
        struct Level {
            int vertex, lo, hi;
            std::vector<std::pair<int, int>> clamps;  // (partner level, half width)
        };
        std::vector<Level> levels;
        std::vector<int> first_level(graph_.vertex_count(), -1);
        auto push_vertex = [&](int u) {
            first_level[u] = static_cast<int>(levels.size());
            for (int a = 0; a < d_; ++a)
                levels.push_back({u, -window_half_[u], window_half_[u], {}});
        };
        for (int u : result.scope) push_vertex(u);
        push_vertex(v);
        const int nlevels = static_cast<int>(levels.size());

        for (const auto& k : kfs) {
            if (k.complement) continue;
            const int lu = first_level[k.u], lv = first_level[k.v];
            const int late = std::max(lu, lv), early = std::min(lu, lv);
            for (int a = 0; a < d_; ++a)
                levels[static_cast<std::size_t>(late + a)].clamps.emplace_back(
                    early + a, kernel_.half_width);
        }

        struct DenseEval {
            const DenseFactor* fac;
            int level = 0;
            std::vector<std::pair<int, std::size_t>> strides;  // (level, stride)
        };
        struct KernelEval {
            const KernelFactor* fac;
            int level = 0;
            int lu = 0, lv = 0;
        };
        std::vector<DenseEval> dense_evals;
        for (const auto& fac : dfs) {
            DenseEval ev;
            ev.fac = &fac;
            std::size_t stride = 1;
            for (auto it = fac.scope.rbegin(); it != fac.scope.rend(); ++it) {
                for (int a = d_ - 1; a >= 0; --a) {
                    ev.strides.emplace_back(first_level[*it] + a, stride);
                    stride *= static_cast<std::size_t>(2 * window_half_[*it] + 1);
                }
            }
            for (const auto& [lvl, st] : ev.strides) ev.level = std::max(ev.level, lvl);
            dense_evals.push_back(std::move(ev));
        }
        std::vector<KernelEval> kernel_evals;
        for (const auto& k : kfs) {
            KernelEval ev;
            ev.fac = &k;
            ev.lu = first_level[k.u];
            ev.lv = first_level[k.v];
            ev.level = std::max(ev.lu, ev.lv) + d_ - 1;
            kernel_evals.push_back(ev);
        }

        std::vector<std::size_t> result_stride(nlevels, 0);
        {
            std::size_t stride = 1;
            for (auto it = result.scope.rbegin(); it != result.scope.rend(); ++it) {
                for (int a = d_ - 1; a >= 0; --a) {
                    result_stride[static_cast<std::size_t>(first_level[*it] + a)] = stride;
                    stride *= static_cast<std::size_t>(2 * window_half_[*it] + 1);
                }
            }
        }

        std::vector<std::vector<int>> dense_at(nlevels), kernel_at(nlevels);
        for (int i = 0; i < static_cast<int>(dense_evals.size()); ++i)
            dense_at[static_cast<std::size_t>(dense_evals[i].level)].push_back(i);
        for (int i = 0; i < static_cast<int>(kernel_evals.size()); ++i)
            kernel_at[static_cast<std::size_t>(kernel_evals[i].level)].push_back(i);

        std::vector<int> coord(nlevels, 0);
        std::vector<int> delta(d_);

        auto eval_dense = [&](const DenseEval& ev) {
            std::size_t off = 0;
            for (const auto& [lvl, st] : ev.strides)
                off += static_cast<std::size_t>(coord[lvl] + window_half_[levels[lvl].vertex]) * st;
            return ev.fac->data[off];
        };
        auto eval_kernel = [&](const KernelEval& ev) {
            for (int a = 0; a < d_; ++a) delta[a] = coord[ev.lu + a] - coord[ev.lv + a];
            const double p = kernel_.phi_at(delta.data());
            return ev.fac->complement ? 1.0 - p : p;
        };

        std::function<void(int, double, std::size_t)> walk = [&](int L, double partial,
                                                                 std::size_t offset) {
            int lo = levels[L].lo, hi = levels[L].hi;
            for (const auto& [pl, half] : levels[L].clamps) {
                lo = std::max(lo, coord[pl] - half);
                hi = std::min(hi, coord[pl] + half);
            }
            const std::size_t stride = result_stride[L];
            const int base = window_half_[levels[L].vertex];
            for (int c = lo; c <= hi; ++c) {
                coord[L] = c;
                double val = partial;
                for (int i : dense_at[L]) val *= eval_dense(dense_evals[static_cast<std::size_t>(i)]);
                for (int i : kernel_at[L])
                    val *= eval_kernel(kernel_evals[static_cast<std::size_t>(i)]);
                if (val == 0.0) continue;
                const std::size_t off = offset + static_cast<std::size_t>(c + base) * stride;
                if (L + 1 == nlevels) {
                    result.data[off] += val;
                } else {
                    walk(L + 1, val, off);
                }
            }
        };
        walk(0, 1.0, 0);
    }

    GridFunction gather() {
        if (!kernels_.empty())
            throw std::logic_error("internal: kernel factors left after elimination");
        GridFunction out(geom_);
        const int half = window_half_[end_];
        const int ext = 2 * half + 1;
        std::size_t cells = 1;
        for (int a = 0; a < d_; ++a) cells *= static_cast<std::size_t>(ext);
        const double volume_factor = std::pow(geom_.cell_volume(), n_) * scalar_;

        std::vector<int> c(d_, -half);
        for (std::size_t flat = 0; flat < cells; ++flat) {
            double val = volume_factor;
            for (const auto& fac : dense_) {
                std::size_t off = 0;
                for (int a = 0; a < d_; ++a)
                    off = off * static_cast<std::size_t>(ext) + static_cast<std::size_t>(c[a] + half);
                val *= fac.data[off];
                if (val == 0.0) break;
            }
            if (val != 0.0) {
                std::size_t grid_flat = 0;
                for (int a = 0; a < d_; ++a) {
                    int idx = c[a] % geom_.cells_per_axis;
                    if (idx < 0) idx += geom_.cells_per_axis;
                    grid_flat = grid_flat * static_cast<std::size_t>(geom_.cells_per_axis) +
                                static_cast<std::size_t>(idx);
                }
                out[grid_flat] += val;
            }
            for (int a = d_ - 1; a >= 0; --a) {
                if (++c[a] <= half) break;
                c[a] = -half;
            }
        }
        return out;
    }

    const LabeledGraph& graph_;
    GridGeometry geom_;
    EliminationOptions opts_;
    int d_, n_, end_;
    KernelTable kernel_;
    std::vector<int> window_half_;
    std::vector<DenseFactor> dense_;
    std::vector<KernelFactor> kernels_;
    double scalar_ = 1.0;
    double flops_ = 0.0;
};

// ---------------------------------------------------------------------------
// Spanning-tree importance sampling.
//
// BFS tree from vertex 0; every free vertex except the end-vertex is sampled
// along its parent edge from density phi/m_phi, and the end-vertex's parent
// edge is demoted to a weight factor. The end-vertex subtree is positioned
// relative to the end vertex, so each piece-crossing factor becomes a
// shifted function of the output displacement x and one sample updates a
// whole window of grid cells at once.
// ---------------------------------------------------------------------------

struct McAccumulator {
    std::vector<double> sum, sumsq;
};

void mc_batch(const LabeledGraph& g, const ConnectionFunction& f, const GridGeometry& geom,
              bool include_nonedges, long long samples, RngSpec rng, McAccumulator& acc) {
    const int d = geom.dimension;
    const int nv = g.vertex_count();
    const int n = g.order();
    const int end = g.end_vertex();
    const double rt = f.truncation_radius();
    const int N = geom.cells_per_axis;

    std::vector<int> parent(nv, -2);
    std::vector<int> bfs_order;
    parent[0] = -1;
    bfs_order.push_back(0);
    for (std::size_t qi = 0; qi < bfs_order.size(); ++qi) {
        const int v = bfs_order[qi];
        for (int u = 0; u < nv; ++u)
            if (parent[u] == -2 && u != v && g.has_edge(u, v)) {
                parent[u] = v;
                bfs_order.push_back(u);
            }
    }

    std::vector<char> in_x_piece(nv, 0);
    in_x_piece[end] = 1;
    for (std::size_t qi = 0; qi < bfs_order.size(); ++qi) {
        const int v = bfs_order[qi];
        if (v != 0 && v != end && in_x_piece[parent[v]]) in_x_piece[v] = 1;
    }

    // vertices sampled along their parent edge, parents first
    std::vector<int> sample_order;
    for (int v : bfs_order)
        if (v != 0 && v != end) sample_order.push_back(v);

    struct PairFactor {
        int i, j;          // i in the 0-piece when crossing
        bool complement;
        bool cross;
    };
    std::vector<PairFactor> weight_pairs;
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            const bool edge = g.has_edge(i, j);
            if (!edge && !include_nonedges) continue;
            if (edge) {
                const int child = (parent[j] == i) ? j : (parent[i] == j ? i : -1);
                if (child >= 0 && child != end) continue;  // proposal edge
            }
            PairFactor pf{i, j, !edge, in_x_piece[i] != in_x_piece[j]};
            if (pf.cross && in_x_piece[i]) std::swap(pf.i, pf.j);
            weight_pairs.push_back(pf);
        }
    }

    CounterRng stream(rng, RngPurpose::proposal);
    std::vector<std::vector<double>> pos(nv, std::vector<double>(d, 0.0));
    std::vector<double> diff(d);
    std::vector<std::pair<std::vector<double>, bool>> cross;
    const double mass_pow = std::pow(f.mass(), n);
    std::vector<int> lo(d), hi(d), cell(d);

    for (long long s = 0; s < samples; ++s) {
        for (int v : sample_order) {
            const auto delta = sample_phi_displacement(f, stream);
            for (int a = 0; a < d; ++a) pos[v][a] = pos[parent[v]][a] + delta[a];
        }

        double w0 = mass_pow;
        cross.clear();
        for (int a = 0; a < d; ++a) {
            lo[a] = std::numeric_limits<int>::min() / 2;
            hi[a] = std::numeric_limits<int>::max() / 2;
        }
        for (const auto& pf : weight_pairs) {
            if (pf.cross) {
                std::vector<double> shift(d);
                for (int a = 0; a < d; ++a) shift[a] = pos[pf.i][a] - pos[pf.j][a];
                if (!pf.complement) {
                    for (int a = 0; a < d; ++a) {
                        lo[a] = std::max(lo[a], static_cast<int>(std::ceil(
                                                    (shift[a] - rt) / geom.spacing - 1e-9)));
                        hi[a] = std::min(hi[a], static_cast<int>(std::floor(
                                                    (shift[a] + rt) / geom.spacing + 1e-9)));
                    }
                }
                cross.emplace_back(std::move(shift), pf.complement);
            } else {
                for (int a = 0; a < d; ++a) diff[a] = pos[pf.i][a] - pos[pf.j][a];
                const double p = f(diff);
                w0 *= pf.complement ? 1.0 - p : p;
                if (w0 == 0.0) break;
            }
        }
        if (w0 == 0.0) continue;
        bool empty = false;
        for (int a = 0; a < d; ++a)
            if (lo[a] > hi[a]) empty = true;
        if (empty) continue;

        for (int a = 0; a < d; ++a) cell[a] = lo[a];
        for (;;) {
            double val = w0;
            for (const auto& [shift, complement] : cross) {
                for (int a = 0; a < d; ++a) diff[a] = shift[a] - cell[a] * geom.spacing;
                const double p = f(diff);
                val *= complement ? 1.0 - p : p;
                if (val == 0.0) break;
            }
            if (val != 0.0) {
                std::size_t flat = 0;
                for (int a = 0; a < d; ++a) {
                    int idx = cell[a] % N;
                    if (idx < 0) idx += N;
                    flat = flat * static_cast<std::size_t>(N) + static_cast<std::size_t>(idx);
                }
                acc.sum[flat] += val;
                acc.sumsq[flat] += val * val;
            }
            int a = d - 1;
            while (a >= 0 && cell[a] >= hi[a]) --a;
            if (a < 0) break;
            ++cell[a];
            for (int b = a + 1; b < d; ++b) cell[b] = lo[b];
        }
    }
}

GraphIntegralResult mc_graph_integral(const LabeledGraph& g, const ConnectionFunction& f,
                                      GridGeometry geom, bool include_nonedges,
                                      const McOptions& mc) {
    // graph diameter must fit in half the period, same guard as elimination
    {
        const auto dist = hop_distance_from_start(g);
        const double reach = dist[g.end_vertex()] * f.truncation_radius();
        if (reach >= 0.5 * geom.period())
            throw std::invalid_argument(
                "grid period cannot hold the graph support (wraparound guard)");
    }

    constexpr int kBatches = 32;
    const long long per_batch = std::max<long long>(1, mc.samples / kBatches);
    const long long total = per_batch * kBatches;

    std::vector<McAccumulator> accs(kBatches);
    for (auto& a : accs) {
        a.sum.assign(geom.cell_count(), 0.0);
        a.sumsq.assign(geom.cell_count(), 0.0);
    }
    const int threads = std::max(1, mc.threads);
    std::atomic<int> next_batch{0};
    auto worker = [&]() {
        for (;;) {
            const int b = next_batch.fetch_add(1);
            if (b >= kBatches) return;
            RngSpec spec{mc.rng.seed,
                         mc.rng.stream * 1000003ull + static_cast<std::uint64_t>(b)};
            mc_batch(g, f, geom, include_nonedges, per_batch, spec,
                     accs[static_cast<std::size_t>(b)]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    GraphIntegralResult out;
    out.method_used = IntegralMethod::monte_carlo;
    out.samples = total;
    out.value = GridFunction(geom);
    GridFunction err(geom);
    const double inv_n = 1.0 / static_cast<double>(total);
    for (std::size_t i = 0; i < geom.cell_count(); ++i) {
        double sum = 0.0, sumsq = 0.0;
        for (const auto& a : accs) {
            sum += a.sum[i];
            sumsq += a.sumsq[i];
        }
        const double mean = sum * inv_n;
        out.value[i] = mean;
        const double var = std::max(0.0, sumsq * inv_n - mean * mean);
        err[i] = std::sqrt(var * inv_n);
    }
    out.std_error = std::move(err);
    return out;
}

GraphIntegralResult dispatch(const LabeledGraph& g, const ConnectionFunction& f,
                             GridGeometry geom, bool include_nonedges, IntegralMethod method,
                             const EliminationOptions& elim, const McOptions& mc) {
    if (f.dimension() != geom.dimension)
        throw std::invalid_argument("connection function and grid dimension mismatch");
    geom.validate();
    switch (method) {
        case IntegralMethod::elimination: {
            GraphIntegralResult r;
            r.value = Eliminator(g, f, geom, include_nonedges, elim).run();
            r.method_used = IntegralMethod::elimination;
            return r;
        }
        case IntegralMethod::monte_carlo:
            return mc_graph_integral(g, f, geom, include_nonedges, mc);
        case IntegralMethod::automatic:
        default:
            try {
                GraphIntegralResult r;
                r.value = Eliminator(g, f, geom, include_nonedges, elim).run();
                r.method_used = IntegralMethod::elimination;
                return r;
            } catch (const EliminationInfeasible&) {
                return mc_graph_integral(g, f, geom, include_nonedges, mc);
            }
    }
}

}  // namespace

GraphIntegralResult eval_J(const LabeledGraph& g, const ConnectionFunction& f, GridGeometry geom,
                           IntegralMethod method, const EliminationOptions& elim,
                           const McOptions& mc) {
    return dispatch(g, f, geom, false, method, elim, mc);
}

GraphIntegralResult eval_I(const LabeledGraph& g, const ConnectionFunction& f, GridGeometry geom,
                           IntegralMethod method, const EliminationOptions& elim,
                           const McOptions& mc) {
    return dispatch(g, f, geom, true, method, elim, mc);
}

}  // namespace rcm
