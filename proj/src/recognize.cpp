#include <algorithm>
#include <functional>

#include "bcast/families.hpp"

namespace bcast {

namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (!g.adjacent(s[a], s[b])) {
                return false;
            }
        }
    }
    return true;
}

bool completely_joined(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (Vertex u : a) {
        for (Vertex v : b) {
            if (!g.adjacent(u, v)) {
                return false;
            }
        }
    }
    return true;
}

int index_in(const VertexSet& layer, Vertex v) {
    return static_cast<int>(std::lower_bound(layer.begin(), layer.end(), v) - layer.begin());
}

/// Strips around the given roots: layer j of root r holds the vertices at
/// distance j from r, for j <= depth. Fails if two strips claim a vertex.
struct Layering {
    std::vector<std::vector<VertexSet>> strips;
    std::vector<int> strip_of;  // -1 when unclaimed
    std::vector<int> layer_of;
};

std::optional<Layering> layer_around(const Graph& g, const DistanceMatrix& d, const std::vector<Vertex>& roots,
                                     int depth) {
    Layering out;
    out.strip_of.assign(static_cast<std::size_t>(g.order()), -1);
    out.layer_of.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t s = 0; s < roots.size(); ++s) {
        std::vector<VertexSet> layers(static_cast<std::size_t>(depth) + 1);
        for (Vertex v = 0; v < g.order(); ++v) {
            int dist = d(roots[s], v);
            if (dist > depth) {
                continue;
            }
            if (out.strip_of[static_cast<std::size_t>(v)] >= 0) {
                return std::nullopt;
            }
            out.strip_of[static_cast<std::size_t>(v)] = static_cast<int>(s);
            out.layer_of[static_cast<std::size_t>(v)] = dist;
            layers[static_cast<std::size_t>(dist)].push_back(v);
        }
        out.strips.push_back(std::move(layers));
    }
    return out;
}

/// Checks the clique layers and even-layer joins of every strip and returns
/// the strip specs they describe.
std::optional<std::vector<StripSpec>> strip_specs(const Graph& g, const Layering& lay) {
    std::vector<StripSpec> specs;
    for (const auto& layers : lay.strips) {
        StripSpec spec;
        const int depth = static_cast<int>(layers.size()) - 1;
        for (int i = 0; i <= depth; ++i) {
            const auto& layer = layers[static_cast<std::size_t>(i)];
            if (layer.empty() || !is_clique(g, layer)) {
                return std::nullopt;
            }
            spec.layer_sizes.push_back(static_cast<int>(layer.size()));
            if (i == depth) {
                continue;
            }
            const auto& succ = layers[static_cast<std::size_t>(i) + 1];
            if (i % 2 == 0) {
                if (!completely_joined(g, layer, succ)) {
                    return std::nullopt;
                }
                continue;
            }
            std::vector<Edge> between;
            for (Vertex u : layer) {
                for (Vertex v : succ) {
                    if (g.adjacent(u, v)) {
                        between.emplace_back(index_in(layer, u), index_in(succ, v));
                    }
                }
            }
            if (between.size() != layer.size() * succ.size()) {
                spec.odd_layer_edges[i] = std::move(between);
            }
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::optional<FamilyParams> try_g2(const Graph& g, const DistanceMatrix& d, int k, Vertex u, Vertex v) {
    const int depth = 2 * k + 1;
    auto lay = layer_around(g, d, {u, v}, depth);
    if (!lay) {
        return std::nullopt;
    }
    if (std::any_of(lay->strip_of.begin(), lay->strip_of.end(), [](int s) { return s < 0; })) {
        return std::nullopt;
    }
    auto specs = strip_specs(g, *lay);
    if (!specs) {
        return std::nullopt;
    }
    const auto& t1 = lay->strips[0].back();
    const auto& t2 = lay->strips[1].back();
    std::vector<Edge> cross;
    for (auto [a, b] : g.edges()) {
        const int sa = lay->strip_of[static_cast<std::size_t>(a)];
        const int sb = lay->strip_of[static_cast<std::size_t>(b)];
        if (sa == sb) {
            continue;
        }
        if (lay->layer_of[static_cast<std::size_t>(a)] != depth || lay->layer_of[static_cast<std::size_t>(b)] != depth) {
            return std::nullopt;
        }
        Vertex first = sa == 0 ? a : b;
        Vertex second = sa == 0 ? b : a;
        cross.emplace_back(index_in(t1, first), index_in(t2, second));
    }
    if (cross.empty()) {
        return std::nullopt;
    }
    std::sort(cross.begin(), cross.end());
    FamilyParams p;
    p.family = Family::G2;
    p.k = k;
    p.l = 2;
    p.strips = std::move(*specs);
    p.cross_edges = std::move(cross);
    return p;
}

std::optional<FamilyParams> recognize_g2(const Graph& g, const DistanceMatrix& d, int k) {
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (d(u, v) == d.diameter()) {
                if (auto p = try_g2(g, d, k, u, v)) {
                    return p;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<FamilyParams> try_g0(const Graph& g, const DistanceMatrix& d, int k, const std::vector<Vertex>& roots) {
    const int depth = 2 * k;
    auto lay = layer_around(g, d, roots, depth);
    if (!lay) {
        return std::nullopt;
    }
    auto specs = strip_specs(g, *lay);
    if (!specs) {
        return std::nullopt;
    }
    VertexSet big;
    int r_size = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const int s = lay->strip_of[static_cast<std::size_t>(v)];
        if (s < 0) {
            ++r_size;
            big.push_back(v);
        } else if (lay->layer_of[static_cast<std::size_t>(v)] == depth) {
            big.push_back(v);
        }
    }
    if (!is_clique(g, big)) {
        return std::nullopt;
    }
    auto in_big = [&](Vertex v) { return std::binary_search(big.begin(), big.end(), v); };
    for (auto [a, b] : g.edges()) {
        const int sa = lay->strip_of[static_cast<std::size_t>(a)];
        const int sb = lay->strip_of[static_cast<std::size_t>(b)];
        if (sa >= 0 && sa == sb) {
            continue;
        }
        if (!in_big(a) || !in_big(b)) {
            return std::nullopt;
        }
    }
    FamilyParams p;
    p.family = Family::G0;
    p.k = k;
    p.l = static_cast<int>(roots.size());
    p.strips = std::move(*specs);
    p.r_size = r_size;
    return p;
}

/// Maximal sets of candidates at pairwise distance exactly `target`.
void maximal_spread_sets(const DistanceMatrix& d, int target, std::vector<Vertex>& current,
                         VertexSet pool, VertexSet excluded, const std::function<bool(const std::vector<Vertex>&)>& emit,
                         bool& stop) {
    if (stop) {
        return;
    }
    if (pool.empty()) {
        if (excluded.empty() && current.size() >= 2) {
            stop = emit(current);
        }
        return;
    }
    while (!pool.empty() && !stop) {
        Vertex v = pool.back();
        pool.pop_back();
        VertexSet next_pool;
        VertexSet next_excluded;
        for (Vertex u : pool) {
            if (d(u, v) == target) {
                next_pool.push_back(u);
            }
        }
        for (Vertex u : excluded) {
            if (d(u, v) == target) {
                next_excluded.push_back(u);
            }
        }
        current.push_back(v);
        maximal_spread_sets(d, target, current, next_pool, next_excluded, emit, stop);
        current.pop_back();
        excluded.push_back(v);
    }
}

std::optional<FamilyParams> recognize_g0(const Graph& g, const DistanceMatrix& d, int k) {
    VertexSet cand;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (d.ecc(v) == d.diameter()) {
            cand.push_back(v);
        }
    }
    std::optional<FamilyParams> found;
    std::vector<Vertex> current;
    bool stop = false;
    maximal_spread_sets(
        d, d.diameter(), current, cand, {},
        [&](const std::vector<Vertex>& roots) {
            std::vector<Vertex> sorted(roots);
            std::sort(sorted.begin(), sorted.end());
            found = try_g0(g, d, k, sorted);
            return found.has_value();
        },
        stop);
    return found;
}

}  // namespace

std::optional<FamilyParams> recognize(const Graph& g, RecognizeOptions options) {
    if (!is_connected(g)) {
        return std::nullopt;
    }
    DistanceMatrix d(g);
    return recognize(g, d, options);
}

std::optional<FamilyParams> recognize(const Graph& g, const DistanceMatrix& d, RecognizeOptions options) {
    const int diam = d.diameter();
    if (diam >= 3 && diam % 4 == 3) {
        const int k = (diam - 3) / 4;
        if (k >= 1 || options.allow_k0) {
            return recognize_g2(g, d, k);
        }
    }
    if (diam >= 5 && diam % 4 == 1) {
        return recognize_g0(g, d, (diam - 1) / 4);
    }
    return std::nullopt;
}

}  // namespace bcast
