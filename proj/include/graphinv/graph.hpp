#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphinv {

// Adjacency rows are single 64-bit words, so 64 vertices is a hard cap.
inline constexpr int kMaxOrder = 64;

// Sentinel distance for unreachable vertices.
inline constexpr int kUnreachable = -1;

// Undirected simple graph on vertices 0..n-1. One adjacency bit row per
// vertex; edge tests and neighborhood scans are single-word operations.
// Values are immutable after construction: the "mutators" return new graphs.
class Graph {
public:
    Graph() : Graph(1) {}
    explicit Graph(int n);

    // Builds a graph with exactly the given edges. Duplicate pairs collapse;
    // out-of-range endpoints and self-loops throw std::invalid_argument.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept;

    bool has_edge(int u, int v) const;
    std::uint64_t neighbor_mask(int u) const;
    int degree(int u) const;
    std::vector<int> degrees() const;

    // Edges in lexicographic order (u < v, u ascending then v ascending).
    std::vector<std::pair<int, int>> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    // New graph of order n+1 whose extra vertex is joined to `neighbors`
    // (a bit mask over the existing vertices).
    Graph with_vertex_joined_to(std::uint64_t neighbors) const;

    // new_label[v] is the label of v in the returned graph; must be a
    // permutation of 0..n-1.
    Graph relabeled(std::span<const int> new_label) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint64_t> rows_;
};

// Unweighted shortest-path hop counts from `source`; kUnreachable where no
// path exists.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

}  // namespace graphinv
