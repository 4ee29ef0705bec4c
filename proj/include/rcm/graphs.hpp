#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace rcm {

// Connected graph on vertices {0, ..., n+1} with start-vertex 0 and
// end-vertex n+1, encoded as an edge bitmask over the canonical pair order:
// lexicographic (i, j) with i < j. "Order" n counts internal vertices.
class LabeledGraph {
  public:
    // Concatenations of enumerable graphs stay within 11 vertices, i.e. 55
    // pair bits.
    static constexpr int kMaxVertices = 11;
    // Default enumeration ceiling; beyond it the subset streams blow up.
    static constexpr int kDefaultOrderMax = 5;

    LabeledGraph(int order, std::uint64_t edge_mask);

    int order() const { return order_; }
    int vertex_count() const { return order_ + 2; }
    int start_vertex() const { return 0; }
    int end_vertex() const { return order_ + 1; }
    std::uint64_t edge_mask() const { return edges_; }
    int edge_count() const;

    static int pair_count(int vertex_count) { return vertex_count * (vertex_count - 1) / 2; }
    static int pair_index(int i, int j, int vertex_count);

    bool has_edge(int i, int j) const;
    LabeledGraph with_edge(int i, int j) const;
    std::vector<std::pair<int, int>> edge_list() const;

    // connectivity of the whole vertex set
    bool connected_all() const;
    // 0 <-> n+1 using internal vertices from `allowed` only (bit i of
    // `allowed` admits internal vertex i+1)
    bool connects_through(std::uint32_t allowed_internal) const;

    bool operator==(const LabeledGraph&) const = default;

  private:
    int order_;
    std::uint64_t edges_;
};

// Every connected graph on {0,...,n+1} exactly once, in increasing bitmask
// order.
std::vector<LabeledGraph> enum_connected_graphs(int n, int order_max = LabeledGraph::kDefaultOrderMax);
// Streaming variant for larger orders.
void for_each_connected_graph(int n, const std::function<void(const LabeledGraph&)>& fn,
                              int order_max = LabeledGraph::kDefaultOrderMax);

// pi_n(G) = sum over I subset [n] of (-1)^{n-|I|} 1{0 <-> n+1 in G|I}.
long long pi_n(const LabeledGraph& g);

// kappa_n(H) = sum over connected spanning subgraphs G of H of
// pi_n(G) (-1)^{|E(H)|-|E(G)|}. The inner subset stream is refused above
// `edge_budget` edges.
long long kappa_n(const LabeledGraph& h, int edge_budget = 14);

// True iff no internal vertex lies on every path from 0 to n+1.
bool pivotal_free(const LabeledGraph& g);

// G1's end-vertex identified with G2's start-vertex; G2's vertices relabeled
// upward preserving order. Result has order n + m + 1.
LabeledGraph concat(const LabeledGraph& g1, const LabeledGraph& g2);

}  // namespace rcm
