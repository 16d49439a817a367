#include "graphinv/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace graphinv {

namespace {

std::uint64_t vertex_bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in [1, " +
                                    std::to_string(kMaxOrder) + "], got " +
                                    std::to_string(n));
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) + ") with n=" +
                                        std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " +
                                        std::to_string(u));
        g.rows_[static_cast<std::size_t>(u)] |= vertex_bit(v);
        g.rows_[static_cast<std::size_t>(v)] |= vertex_bit(u);
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) +
                                " outside [0, " + std::to_string(n_) + ")");
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (std::uint64_t row : rows_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[static_cast<std::size_t>(u)] & vertex_bit(v)) != 0;
}

std::uint64_t Graph::neighbor_mask(int u) const {
    check_vertex(u);
    return rows_[static_cast<std::size_t>(u)];
}

int Graph::degree(int u) const {
    check_vertex(u);
    return std::popcount(rows_[static_cast<std::size_t>(u)]);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
        d[static_cast<std::size_t>(v)] =
            std::popcount(rows_[static_cast<std::size_t>(v)]);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t above = rows_[static_cast<std::size_t>(u)] &
                              ~(full_mask(u + 1 > 64 ? 64 : u + 1));
        while (above) {
            int v = std::countr_zero(above);
            out.emplace_back(u, v);
            above &= above - 1;
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    Graph g(*this);
    g.rows_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    g.rows_[static_cast<std::size_t>(v)] |= vertex_bit(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g(*this);
    g.rows_[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
    g.rows_[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
    return g;
}

Graph Graph::with_vertex_joined_to(std::uint64_t neighbors) const {
    if (n_ + 1 > kMaxOrder) throw std::invalid_argument("graph order cap exceeded");
    if (neighbors & ~full_mask(n_))
        throw std::invalid_argument("neighbor mask references missing vertices");
    Graph g(n_ + 1);
    g.rows_ = rows_;
    g.rows_.push_back(neighbors);
    while (neighbors) {
        int v = std::countr_zero(neighbors);
        g.rows_[static_cast<std::size_t>(v)] |= vertex_bit(n_);
        neighbors &= neighbors - 1;
    }
    return g;
}

Graph Graph::relabeled(std::span<const int> new_label) const {
    if (static_cast<int>(new_label.size()) != n_)
        throw std::invalid_argument("relabeling size mismatch");
    std::uint64_t seen = 0;
    for (int lbl : new_label) {
        if (lbl < 0 || lbl >= n_ || (seen & vertex_bit(lbl)))
            throw std::invalid_argument("relabeling is not a permutation");
        seen |= vertex_bit(lbl);
    }
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t row = rows_[static_cast<std::size_t>(u)];
        std::uint64_t mapped = 0;
        while (row) {
            int v = std::countr_zero(row);
            mapped |= vertex_bit(new_label[static_cast<std::size_t>(v)]);
            row &= row - 1;
        }
        g.rows_[static_cast<std::size_t>(new_label[static_cast<std::size_t>(u)])] = mapped;
    }
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n)
        throw std::out_of_range("bfs source out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
    std::uint64_t visited = std::uint64_t{1} << source;
    std::uint64_t frontier = visited;
    int hops = 0;
    dist[static_cast<std::size_t>(source)] = 0;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            next |= g.neighbor_mask(u);
            f &= f - 1;
        }
        next &= ~visited;
        ++hops;
        std::uint64_t nf = next;
        while (nf) {
            int v = std::countr_zero(nf);
            dist[static_cast<std::size_t>(v)] = hops;
            nf &= nf - 1;
        }
        visited |= next;
        frontier = next;
    }
    return dist;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::uint64_t visited = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            next |= g.neighbor_mask(u);
            f &= f - 1;
        }
        next &= ~visited;
        visited |= next;
        frontier = next;
    }
    return visited == full_mask(n);
}

}  // namespace graphinv
