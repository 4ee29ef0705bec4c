#include "rcm/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rcm {

namespace {

// Sorted-pair edge test shared by both pair-generation paths.
void try_edge(RcmSample& s, const ConnectionFunction& f, const BoxGeometry& box,
              std::uint32_t i, std::uint32_t j, std::span<double> scratch) {
    box.displacement(s.point(i), s.point(j), scratch);
    const double w = f(scratch);
    if (w <= 0.0) return;
    if (pair_unit(s.rng, i, j) < w) {
        s.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
}

}  // namespace

RcmSample sample_rcm(double t, const ConnectionFunction& f, const BoxGeometry& box,
                     const std::vector<std::vector<double>>& pins, RngSpec rng,
                     bool brute_force_pairs) {
    if (t < 0.0) throw std::invalid_argument("intensity must be nonnegative");
    box.validate_for(f);
    const int d = box.dimension;

    RcmSample s;
    s.dimension = d;
    s.rng = rng;
    s.pinned_count = pins.size();
    for (const auto& p : pins) {
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("pin dimension mismatch");
        if (!box.contains(p)) throw std::invalid_argument("pin outside box");
        s.coords.insert(s.coords.end(), p.begin(), p.end());
    }

    CounterRng count_rng(rng, RngPurpose::point_count);
    const std::uint64_t k = count_rng.next_poisson(t * box.volume());
    CounterRng coord_rng(rng, RngPurpose::point_coords);
    s.coords.reserve(s.coords.size() + k * d);
    for (std::uint64_t i = 0; i < k; ++i)
        for (int a = 0; a < d; ++a) s.coords.push_back(coord_rng.next_unit() * box.side_length);

    const std::size_t n = s.size();
    std::vector<double> scratch(d);

    if (brute_force_pairs || n < 2) {
        for (std::uint32_t i = 0; i + 1 < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) try_edge(s, f, box, i, j, scratch);
    } else {
        // Cell lists: cell edge >= truncation radius, so adjacent cells cover
        // every pair that can possibly connect.
        const double rt = f.truncation_radius();
        const int m = std::max(1, static_cast<int>(std::floor(box.side_length / rt)));
        const double cell = box.side_length / m;
        std::size_t ncells = 1;
        for (int a = 0; a < d; ++a) ncells *= static_cast<std::size_t>(m);
        std::vector<std::vector<std::uint32_t>> cells(ncells);
        auto cell_index = [&](std::span<const double> p) {
            std::size_t idx = 0;
            for (int a = 0; a < d; ++a) {
                int c = static_cast<int>(p[a] / cell);
                if (c >= m) c = m - 1;
                idx = idx * m + static_cast<std::size_t>(c);
            }
            return idx;
        };
        for (std::uint32_t i = 0; i < n; ++i) cells[cell_index(s.point(i))].push_back(i);

        // Enumerate each unordered cell pair once via lexicographic offsets.
        std::vector<int> offset(d, 0);
        std::vector<int> base(d, 0);
        auto visit_cell_pairs = [&](std::size_t ci) {
            for (int a = 0; a < d; ++a) {
                base[a] = static_cast<int>(ci % m);
                ci /= m;
            }
            std::reverse(base.begin(), base.end());
            // offsets in {-1,0,1}^d, keeping only lexicographically positive
            // ones plus the zero offset (own cell handled with i<j).
            std::vector<int> off(d, -1);
            for (;;) {
                bool positive = false, zero = true;
                for (int a = 0; a < d; ++a) {
                    if (off[a] != 0) zero = false;
                    if (off[a] > 0) { positive = true; break; }
                    if (off[a] < 0) break;
                }
                if (positive || zero) {
                    std::size_t cj = 0;
                    bool ok = true;
                    for (int a = 0; a < d; ++a) {
                        int c = base[a] + off[a];
                        if (box.boundary == Boundary::periodic) {
                            c = (c % m + m) % m;
                        } else if (c < 0 || c >= m) {
                            ok = false;
                            break;
                        }
                        cj = cj * m + static_cast<std::size_t>(c);
                    }
                    std::size_t ciflat = 0;
                    for (int a = 0; a < d; ++a) ciflat = ciflat * m + base[a];
                    if (ok && (m > 2 || cj >= ciflat)) {
                        // with m == 2 opposite offsets alias the same cell;
                        // the cj >= ci guard avoids double visits
                        const auto& A = cells[ciflat];
                        const auto& B = cells[cj];
                        if (zero) {
                            for (std::size_t u = 0; u + 1 < A.size(); ++u)
                                for (std::size_t v = u + 1; v < A.size(); ++v)
                                    try_edge(s, f, box, A[u], A[v], scratch);
                        } else if (ciflat == cj) {
                            ;  // periodic alias of own cell, already done
                        } else {
                            for (std::uint32_t u : A)
                                for (std::uint32_t v : B) try_edge(s, f, box, u, v, scratch);
                        }
                    }
                }
                int a = d - 1;
                while (a >= 0 && off[a] == 1) off[a--] = -1;
                if (a < 0) break;
                ++off[a];
            }
        };
        for (std::size_t ci = 0; ci < ncells; ++ci)
            if (!cells[ci].empty()) visit_cell_pairs(ci);
        // Keyed coins make edge outcomes order-independent, but normalize the
        // list anyway so samples compare byte-for-byte across pair paths.
        std::sort(s.edges.begin(), s.edges.end());
        s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
    }
    if (brute_force_pairs) std::sort(s.edges.begin(), s.edges.end());

    s.adjacency.assign(n, {});
    for (const auto& [i, j] : s.edges) {
        s.adjacency[i].push_back(j);
        s.adjacency[j].push_back(i);
    }
    return s;
}

std::vector<std::uint32_t> cluster_of(const RcmSample& s, std::uint32_t vertex) {
    if (vertex >= s.size()) throw std::out_of_range("vertex index out of range");
    std::vector<char> seen(s.size(), 0);
    std::vector<std::uint32_t> stack{vertex}, out;
    seen[vertex] = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (std::uint32_t w : s.adjacency[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> component_labels(const RcmSample& s) {
    std::vector<std::uint32_t> parent(s.size());
    std::iota(parent.begin(), parent.end(), 0u);
    std::vector<std::uint32_t> rank(s.size(), 0);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [i, j] : s.edges) {
        std::uint32_t a = find(i), b = find(j);
        if (a == b) continue;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
    }
    // normalize labels to the smallest member of each component
    std::vector<std::uint32_t> label(s.size());
    for (std::uint32_t v = 0; v < s.size(); ++v) label[v] = find(v);
    std::vector<std::uint32_t> smallest(s.size(), UINT32_MAX);
    for (std::uint32_t v = 0; v < s.size(); ++v)
        smallest[label[v]] = std::min(smallest[label[v]], v);
    for (std::uint32_t v = 0; v < s.size(); ++v) label[v] = smallest[label[v]];
    return label;
}

}  // namespace rcm
