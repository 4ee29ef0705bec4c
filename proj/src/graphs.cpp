#include "rcm/graphs.hpp"

#include <bit>
#include <stdexcept>

namespace rcm {

namespace {

// adjacency bitmasks per vertex, restricted to vertices in `vertex_mask`
void build_adjacency(const LabeledGraph& g, std::uint32_t vertex_mask,
                     std::uint32_t adj[LabeledGraph::kMaxVertices]) {
    const int nv = g.vertex_count();
    for (int v = 0; v < nv; ++v) adj[v] = 0;
    std::uint64_t mask = g.edge_mask();
    while (mask) {
        const int bit = std::countr_zero(mask);
        mask &= mask - 1;
        // invert pair index -> (i, j)
        int i = 0, rem = bit;
        int row = nv - 1;
        while (rem >= row) {
            rem -= row;
            --row;
            ++i;
        }
        const int j = i + 1 + rem;
        if ((vertex_mask >> i & 1u) && (vertex_mask >> j & 1u)) {
            adj[i] |= 1u << j;
            adj[j] |= 1u << i;
        }
    }
}

// BFS from `start` over the restricted adjacency; returns reached set.
std::uint32_t reach(const std::uint32_t adj[], std::uint32_t vertex_mask, int start) {
    std::uint32_t seen = 1u << start;
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v];
        }
        next &= vertex_mask & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

LabeledGraph::LabeledGraph(int order, std::uint64_t edge_mask) : order_(order), edges_(edge_mask) {
    if (order < 0 || order + 2 > kMaxVertices)
        throw std::invalid_argument("graph order out of range");
    const int bits = pair_count(order + 2);
    if (bits < 64 && (edge_mask >> bits) != 0)
        throw std::invalid_argument("edge mask has bits beyond the pair range");
}

int LabeledGraph::edge_count() const { return std::popcount(edges_); }

int LabeledGraph::pair_index(int i, int j, int vertex_count) {
    if (i > j) std::swap(i, j);
    // pairs (0,1),(0,2),...,(0,nv-1),(1,2),...
    return i * (2 * vertex_count - i - 1) / 2 + (j - i - 1);
}

bool LabeledGraph::has_edge(int i, int j) const {
    return edges_ >> pair_index(i, j, vertex_count()) & 1ull;
}

LabeledGraph LabeledGraph::with_edge(int i, int j) const {
    return LabeledGraph(order_, edges_ | (1ull << pair_index(i, j, vertex_count())));
}

std::vector<std::pair<int, int>> LabeledGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    const int nv = vertex_count();
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

bool LabeledGraph::connected_all() const {
    const int nv = vertex_count();
    const std::uint32_t all = (1u << nv) - 1;
    std::uint32_t adj[kMaxVertices];
    build_adjacency(*this, all, adj);
    return reach(adj, all, 0) == all;
}

bool LabeledGraph::connects_through(std::uint32_t allowed_internal) const {
    const int nv = vertex_count();
    std::uint32_t vmask = 1u | (1u << (nv - 1));
    vmask |= (allowed_internal & ((1u << order_) - 1)) << 1;
    std::uint32_t adj[kMaxVertices];
    build_adjacency(*this, vmask, adj);
    return (reach(adj, vmask, 0) >> (nv - 1)) & 1u;
}

void for_each_connected_graph(int n, const std::function<void(const LabeledGraph&)>& fn,
                              int order_max) {
    if (n < 0 || n > order_max)
        throw std::invalid_argument("graph order beyond the enumeration budget");
    const int bits = LabeledGraph::pair_count(n + 2);
    const std::uint64_t limit = 1ull << bits;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        LabeledGraph g(n, mask);
        if (g.connected_all()) fn(g);
    }
}

std::vector<LabeledGraph> enum_connected_graphs(int n, int order_max) {
    std::vector<LabeledGraph> out;
    for_each_connected_graph(n, [&](const LabeledGraph& g) { out.push_back(g); }, order_max);
    return out;
}

long long pi_n(const LabeledGraph& g) {
    const int n = g.order();
    long long sum = 0;
    for (std::uint32_t I = 0; I < (1u << n); ++I) {
        const int parity = n - std::popcount(I);
        const long long sign = (parity & 1) ? -1 : 1;
        if (g.connects_through(I)) sum += sign;
    }
    return sum;
}

long long kappa_n(const LabeledGraph& h, int edge_budget) {
    if (h.edge_count() > edge_budget)
        throw std::invalid_argument("kappa subset stream beyond the edge budget");
    const std::uint64_t mask = h.edge_mask();
    const int total = h.edge_count();
    long long sum = 0;
    // iterate all edge subsets of H, including H itself and the empty set
    std::uint64_t sub = mask;
    for (;;) {
        LabeledGraph g(h.order(), sub);
        if (g.connected_all()) {
            const int removed = total - std::popcount(sub);
            const long long sign = (removed & 1) ? -1 : 1;
            sum += sign * pi_n(g);
        }
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
    return sum;
}

bool pivotal_free(const LabeledGraph& g) {
    const int n = g.order();
    const std::uint32_t all = (1u << n) - 1;
    for (int i = 0; i < n; ++i) {
        if (!g.connects_through(all & ~(1u << i))) return false;  // vertex i+1 is pivotal
    }
    return true;
}

LabeledGraph concat(const LabeledGraph& g1, const LabeledGraph& g2) {
    const int n = g1.order(), m = g2.order();
    LabeledGraph out(n + m + 1, 0);
    for (const auto& [i, j] : g1.edge_list()) out = out.with_edge(i, j);
    for (const auto& [i, j] : g2.edge_list()) out = out.with_edge(i + n + 1, j + n + 1);
    return out;
}

}  // namespace rcm
