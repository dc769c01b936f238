#include "bcast/graph.hpp"

#include <algorithm>
#include <deque>

namespace bcast {

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        }
        if (u == v) {
            throw GraphError("self-loop at vertex " + std::to_string(u));
        }
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    edge_count_ = 0;
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        edge_count_ += nb.size();
    }
    edge_count_ /= 2;
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            e.emplace_back(u, v);
        }
    }
    return Graph(n, e);
}

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) {
        e.emplace_back(v - 1, v);
    }
    return Graph(n, e);
}

Graph Graph::cycle(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) {
        e.emplace_back(v - 1, v);
    }
    if (n >= 3) {
        e.emplace_back(n - 1, 0);
    }
    return Graph(n, e);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
    auto e = edges();
    e.insert(e.end(), extra.begin(), extra.end());
    return Graph(order(), e);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (order() > 64) {
        throw GraphError("adjacency masks need at most 64 vertices");
    }
    std::vector<std::uint64_t> masks(adj_.size(), 0);
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        for (Vertex u : adj_[v]) {
            masks[v] |= std::uint64_t{1} << u;
        }
    }
    return masks;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue;
    queue.reserve(dist.size());
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex u : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) {
        return false;
    }
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (set[i] == set[j] || g.adjacent(set[i], set[j])) {
                return false;
            }
        }
    }
    return true;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
    if (n_ == 0) {
        throw GraphError("empty graph");
    }
    const auto n = static_cast<std::size_t>(n_);
    dist_.resize(n * n);
    ecc_.resize(n);
    for (int s = 0; s < n_; ++s) {
        auto row = bfs_distances(g, s);
        int e = 0;
        for (int d : row) {
            if (d < 0) {
                throw DisconnectedGraphError();
            }
            e = std::max(e, d);
        }
        std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(s) * n));
        ecc_[static_cast<std::size_t>(s)] = e;
        diameter_ = std::max(diameter_, e);
    }
}

}  // namespace bcast
