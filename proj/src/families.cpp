#include "bcast/families.hpp"

#include <algorithm>

namespace bcast {

std::string to_string(Family f) {
    return f == Family::G0 ? "G0" : "G2";
}

StripSpec StripSpec::uniform(int length, int size) {
    StripSpec s;
    s.layer_sizes.assign(static_cast<std::size_t>(length) + 1, size);
    s.layer_sizes[0] = 1;
    return s;
}

StripSpec StripSpec::sparse(int length, int size) {
    StripSpec s = uniform(length, size);
    for (int i = 1; i < length; i += 2) {
        std::vector<Edge> e;
        const int below = s.layer_sizes[static_cast<std::size_t>(i)];
        for (int j = 0; j < s.layer_sizes[static_cast<std::size_t>(i) + 1]; ++j) {
            e.emplace_back(j % below, j);
        }
        s.odd_layer_edges[i] = std::move(e);
    }
    return s;
}

StripSpec StripSpec::with_sizes(std::vector<int> sizes) {
    StripSpec s;
    s.layer_sizes = std::move(sizes);
    return s;
}

Strip build_strip(const StripSpec& spec) {
    const int length = spec.length();
    if (length < 0 || spec.layer_sizes[0] != 1) {
        throw FamilyError("strip: the root layer must hold exactly one vertex");
    }
    Strip strip;
    int next = 0;
    for (int size : spec.layer_sizes) {
        if (size < 1) {
            throw FamilyError("strip: layers must be nonempty");
        }
        VertexSet layer(static_cast<std::size_t>(size));
        for (auto& v : layer) {
            v = next++;
        }
        strip.layers.push_back(std::move(layer));
    }
    for (const auto& [i, edges] : spec.odd_layer_edges) {
        if (i % 2 == 0 || i < 1 || i >= length) {
            throw FamilyError("strip: explicit edges given for layer " + std::to_string(i) +
                              ", which is not an odd layer with a successor");
        }
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= spec.layer_sizes[static_cast<std::size_t>(i)] ||
                b >= spec.layer_sizes[static_cast<std::size_t>(i) + 1]) {
                throw FamilyError("strip: edge index out of range between layers " + std::to_string(i) + " and " +
                                  std::to_string(i + 1));
            }
        }
    }

    std::vector<Edge> edges;
    for (int i = 0; i <= length; ++i) {
        const auto& layer = strip.layers[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < layer.size(); ++a) {
            for (std::size_t b = a + 1; b < layer.size(); ++b) {
                edges.emplace_back(layer[a], layer[b]);
            }
        }
        if (i == length) {
            continue;
        }
        const auto& succ = strip.layers[static_cast<std::size_t>(i) + 1];
        auto explicit_edges = spec.odd_layer_edges.find(i);
        if (i % 2 == 1 && explicit_edges != spec.odd_layer_edges.end()) {
            std::vector<bool> reached(succ.size(), false);
            for (auto [a, b] : explicit_edges->second) {
                edges.emplace_back(layer[static_cast<std::size_t>(a)], succ[static_cast<std::size_t>(b)]);
                reached[static_cast<std::size_t>(b)] = true;
            }
            for (std::size_t b = 0; b < succ.size(); ++b) {
                if (!reached[b]) {
                    throw FamilyError("strip: vertex " + std::to_string(succ[b]) + " of layer " +
                                      std::to_string(i + 1) + " has no neighbor in layer " + std::to_string(i));
                }
            }
        } else {
            for (Vertex a : layer) {
                for (Vertex b : succ) {
                    edges.emplace_back(a, b);
                }
            }
        }
    }
    strip.graph = Graph(next, edges);

    auto dist = bfs_distances(strip.graph, 0);
    for (int i = 0; i <= length; ++i) {
        for (Vertex v : strip.layers[static_cast<std::size_t>(i)]) {
            if (dist[static_cast<std::size_t>(v)] != i) {
                throw FamilyError("strip: vertex " + std::to_string(v) + " is not at distance " + std::to_string(i) +
                                  " from the root");
            }
        }
    }
    return strip;
}

namespace {

struct Assembly {
    std::vector<Edge> edges;
    int next = 0;
    std::vector<Vertex> roots;
    std::vector<VertexSet> terminals;

    void add(const Strip& s) {
        const int offset = next;
        for (auto [u, v] : s.graph.edges()) {
            edges.emplace_back(u + offset, v + offset);
        }
        roots.push_back(offset);
        VertexSet term;
        for (Vertex v : s.layers.back()) {
            term.push_back(v + offset);
        }
        terminals.push_back(std::move(term));
        next += s.graph.order();
    }
};

}  // namespace

FamilyMember build_G2(int k, const StripSpec& first, const StripSpec& second, std::span<const Edge> cross_edges,
                      BuildOptions options) {
    if (k < 0 || (k == 0 && !options.allow_k0)) {
        throw FamilyError("G2: k must be positive (k = 0 needs the allow-k0 option)");
    }
    const int length = 2 * k + 1;
    if (first.length() != length || second.length() != length) {
        throw FamilyError("G2: both strips must have " + std::to_string(length) + " layers beyond the root");
    }
    if (cross_edges.empty()) {
        throw FamilyError("G2: at least one cross edge is required");
    }
    Assembly as;
    as.add(build_strip(first));
    as.add(build_strip(second));
    for (auto [a, b] : cross_edges) {
        if (a < 0 || b < 0 || a >= static_cast<int>(as.terminals[0].size()) ||
            b >= static_cast<int>(as.terminals[1].size())) {
            throw FamilyError("G2: cross edge index out of range");
        }
        as.edges.emplace_back(as.terminals[0][static_cast<std::size_t>(a)],
                              as.terminals[1][static_cast<std::size_t>(b)]);
    }
    FamilyMember m;
    m.graph = Graph(as.next, as.edges);
    m.roots = as.roots;
    m.params.family = Family::G2;
    m.params.k = k;
    m.params.l = 2;
    m.params.strips = {first, second};
    m.params.cross_edges.assign(cross_edges.begin(), cross_edges.end());
    std::sort(m.params.cross_edges.begin(), m.params.cross_edges.end());
    m.params.cross_edges.erase(std::unique(m.params.cross_edges.begin(), m.params.cross_edges.end()),
                               m.params.cross_edges.end());
    return m;
}

FamilyMember build_G0(int k, int l, std::span<const StripSpec> strips, int r_size) {
    if (k < 1) {
        throw FamilyError("G0: k must be positive");
    }
    if (l < 2) {
        throw FamilyError("G0: at least two strips are required");
    }
    if (static_cast<int>(strips.size()) != l) {
        throw FamilyError("G0: expected " + std::to_string(l) + " strip specs");
    }
    if (r_size < 0) {
        throw FamilyError("G0: negative R size");
    }
    Assembly as;
    for (const auto& spec : strips) {
        if (spec.length() != 2 * k) {
            throw FamilyError("G0: every strip must have " + std::to_string(2 * k) + " layers beyond the root");
        }
        as.add(build_strip(spec));
    }
    VertexSet clique;
    for (const auto& t : as.terminals) {
        clique.insert(clique.end(), t.begin(), t.end());
    }
    for (int i = 0; i < r_size; ++i) {
        clique.push_back(as.next++);
    }
    for (std::size_t a = 0; a < clique.size(); ++a) {
        for (std::size_t b = a + 1; b < clique.size(); ++b) {
            as.edges.emplace_back(clique[a], clique[b]);
        }
    }
    FamilyMember m;
    m.graph = Graph(as.next, as.edges);
    m.roots = as.roots;
    m.params.family = Family::G0;
    m.params.k = k;
    m.params.l = l;
    m.params.strips.assign(strips.begin(), strips.end());
    m.params.r_size = r_size;
    return m;
}

FamilyParams FamilyParams::g2_uniform(int k, int size, bool complete_cross) {
    FamilyParams p;
    p.family = Family::G2;
    p.k = k;
    p.l = 2;
    p.strips = {StripSpec::uniform(2 * k + 1, size), StripSpec::uniform(2 * k + 1, size)};
    if (complete_cross) {
        for (int a = 0; a < size; ++a) {
            for (int b = 0; b < size; ++b) {
                p.cross_edges.emplace_back(a, b);
            }
        }
    } else {
        p.cross_edges = {{0, 0}};
    }
    return p;
}

FamilyParams FamilyParams::g0_uniform(int k, int l, int size, int r_size) {
    FamilyParams p;
    p.family = Family::G0;
    p.k = k;
    p.l = l;
    p.strips.assign(static_cast<std::size_t>(l), StripSpec::uniform(2 * k, size));
    p.r_size = r_size;
    return p;
}

FamilyMember build_family(const FamilyParams& params, BuildOptions options) {
    if (params.family == Family::G2) {
        if (params.strips.size() != 2) {
            throw FamilyError("G2: exactly two strip specs are required");
        }
        return build_G2(params.k, params.strips[0], params.strips[1], params.cross_edges, options);
    }
    return build_G0(params.k, params.l, params.strips, params.r_size);
}

}  // namespace bcast
