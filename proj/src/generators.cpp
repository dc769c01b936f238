#include <array>
#include <bit>
#include <random>

#include "bcast/graph.hpp"

namespace bcast {

namespace {

constexpr int kMaxEnumerate = 7;
constexpr int kMaxEnumerateOptIn = 8;
constexpr int kRejectionBudget = 1'000'000;

bool mask_connected(int n, const std::array<std::uint64_t, kMaxEnumerateOptIn>& adj) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
            next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace

std::uint64_t pattern_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_pattern(int n, std::uint64_t pattern) {
    const int m = n * (n - 1) / 2;
    std::vector<Edge> edges;
    int k = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++k) {
            if ((pattern >> (m - 1 - k)) & 1) {
                edges.emplace_back(row, col);
            }
        }
    }
    return Graph(n, edges);
}

void for_each_connected(int n, const std::function<void(const Graph&, std::uint64_t)>& visit,
                        EnumerateOptions options, std::uint64_t start) {
    const int limit = options.allow_n8 ? kMaxEnumerateOptIn : kMaxEnumerate;
    if (n < 1 || n > limit) {
        throw GraphError("enumeration supports 1 <= n <= " + std::to_string(limit) + ", got " + std::to_string(n));
    }
    const int m = n * (n - 1) / 2;
    const std::uint64_t total = pattern_count(n);

    std::array<std::pair<int, int>, 28> pair_of{};
    {
        int k = 0;
        for (int col = 1; col < n; ++col) {
            for (int row = 0; row < col; ++row) {
                pair_of[static_cast<std::size_t>(k++)] = {row, col};
            }
        }
    }

    for (std::uint64_t pattern = start; pattern < total; ++pattern) {
        std::array<std::uint64_t, kMaxEnumerateOptIn> adj{};
        for (int k = 0; k < m; ++k) {
            if ((pattern >> (m - 1 - k)) & 1) {
                auto [u, v] = pair_of[static_cast<std::size_t>(k)];
                adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            }
        }
        if (mask_connected(n, adj)) {
            visit(graph_from_pattern(n, pattern), pattern);
        }
    }
}

std::vector<Graph> enumerate_connected(int n, EnumerateOptions options) {
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g, std::uint64_t) { out.push_back(g); }, options);
    return out;
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) {
        throw GraphError("random_connected: n must be positive");
    }
    if (!(p > 0.0 && p <= 1.0)) {
        throw GraphError("random_connected: p must lie in (0,1]");
    }
    std::mt19937_64 rng(seed);
    constexpr double kScale = 1.0 / static_cast<double>(std::uint64_t{1} << 53);
    for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
        std::vector<Edge> edges;
        for (int col = 1; col < n; ++col) {
            for (int row = 0; row < col; ++row) {
                double u = static_cast<double>(rng() >> 11) * kScale;
                if (u < p) {
                    edges.emplace_back(row, col);
                }
            }
        }
        Graph g(n, edges);
        if (is_connected(g)) {
            return g;
        }
    }
    throw GraphError("random_connected: rejection budget exhausted");
}

}  // namespace bcast
