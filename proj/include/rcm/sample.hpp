#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcm/connection.hpp"
#include "rcm/geometry.hpp"
#include "rcm/rng.hpp"

namespace rcm {

// A realized point configuration with its adjacency. Pinned points occupy
// the leading indices and are never removed.
struct RcmSample {
    int dimension = 1;
    std::size_t pinned_count = 0;
    std::vector<double> coords;  // row-major, size k * d
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j
    std::vector<std::vector<std::uint32_t>> adjacency;
    RngSpec rng;

    std::size_t size() const { return dimension ? coords.size() / dimension : 0; }
    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dimension, static_cast<std::size_t>(dimension)};
    }
};

// Poisson(t L^d) background points uniform in the box, plus the pins; each
// unordered pair is an edge with probability phi of its boundary-respecting
// displacement. Candidate pairs come from cell lists keyed by the truncation
// radius; brute_force_pairs enumerates all k^2 pairs instead (validation
// path, produces the identical sample because edge coins are keyed by point
// indices, not enumeration order).
RcmSample sample_rcm(double t, const ConnectionFunction& f, const BoxGeometry& box,
                     const std::vector<std::vector<double>>& pins, RngSpec rng,
                     bool brute_force_pairs = false);

// Connected component of a vertex (BFS over the adjacency lists).
std::vector<std::uint32_t> cluster_of(const RcmSample& s, std::uint32_t vertex);

// Component label per vertex (union-find), labels are the smallest member
// index of each component.
std::vector<std::uint32_t> component_labels(const RcmSample& s);

}  // namespace rcm
