#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcast {

using Vertex = int;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Graph6Error : public GraphError {
  public:
    using GraphError::GraphError;
};

class DisconnectedGraphError : public GraphError {
  public:
    DisconnectedGraphError() : GraphError("graph is not connected") {}
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
  public:
    Graph() = default;

    /// Throws GraphError on self-loops or out-of-range endpoints.
    /// Duplicate edges are collapsed.
    Graph(int n, std::span<const Edge> edges);

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] std::size_t size() const { return edge_count_; }

    [[nodiscard]] const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    /// Edges (u,v) with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Same graph with extra edges.
    [[nodiscard]] Graph with_edges(std::span<const Edge> extra) const;

    /// Neighborhood bitmask; requires order() <= 64.
    [[nodiscard]] std::vector<std::uint64_t> adjacency_masks() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

[[nodiscard]] bool is_connected(const Graph& g);

[[nodiscard]] bool is_independent(const Graph& g, std::span<const Vertex> set);

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
  public:
    /// BFS from every vertex. Throws DisconnectedGraphError.
    explicit DistanceMatrix(const Graph& g);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int operator()(Vertex u, Vertex v) const {
        return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    [[nodiscard]] int ecc(Vertex v) const { return ecc_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const std::vector<int>& eccentricities() const { return ecc_; }
    [[nodiscard]] int diameter() const { return diameter_; }

  private:
    int n_ = 0;
    std::vector<int> dist_;
    std::vector<int> ecc_;
    int diameter_ = 0;
};

/// Hop distances from one source; unreachable vertices get -1.
[[nodiscard]] std::vector<int> bfs_distances(const Graph& g, Vertex source);

// graph6 codec -------------------------------------------------------------

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" header and a
/// trailing newline. Handles the one-byte and four-byte size forms.
[[nodiscard]] Graph parse_graph6(std::string_view text);

/// Encodes g; graphs with more than 62 vertices use the four-byte size form.
[[nodiscard]] std::string write_graph6(const Graph& g);

/// Newline-delimited graph6 stream; blank lines are skipped.
[[nodiscard]] std::vector<Graph> parse_graph6_lines(std::string_view text);

// small-graph supply -------------------------------------------------------

struct EnumerateOptions {
    bool allow_n8 = false;
};

/// Calls visit for every labeled connected graph on n vertices. The upper
/// triangle, read in graph6 pair order (0,1),(0,2),(1,2),(0,3),..., is taken
/// as a binary number with the first pair as the most significant bit, and
/// graphs are produced in increasing order of that number. `start` skips
/// patterns below the given value (checkpoint resume).
void for_each_connected(int n, const std::function<void(const Graph&, std::uint64_t pattern)>& visit,
                        EnumerateOptions options = {}, std::uint64_t start = 0);

[[nodiscard]] std::vector<Graph> enumerate_connected(int n, EnumerateOptions options = {});

/// Number of edge patterns for n vertices, 2^(n(n-1)/2).
[[nodiscard]] std::uint64_t pattern_count(int n);

/// Graph for one upper-triangle pattern as described in for_each_connected.
[[nodiscard]] Graph graph_from_pattern(int n, std::uint64_t pattern);

/// Erdos-Renyi G(n,p), rejection-sampled until connected.
///
/// The generator is std::mt19937_64 seeded with `seed`. Pairs are visited in
/// graph6 order; pair (u,v) is an edge iff (draw >> 11) * 2^-53 < p, using one
/// draw per pair. A rejected graph is followed by a fresh draw of all pairs
/// from the same stream. Throws GraphError after 10^6 rejected draws.
[[nodiscard]] Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace bcast
