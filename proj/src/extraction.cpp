#include "bcast/extraction.hpp"

#include <algorithm>

namespace bcast {

std::string to_string(ExtractionCase c) {
    switch (c) {
        case ExtractionCase::Case1:
            return "Case1";
        case ExtractionCase::Case2:
            return "Case2";
        case ExtractionCase::Case3:
            return "Case3";
    }
    return "?";
}

SupportClasses classify_support(const Broadcast& f) {
    SupportClasses out;
    for (Vertex x : f.support()) {
        out.classes[static_cast<std::size_t>(f[x] % 4)].push_back(x);
    }
    return out;
}

Anchor choose_anchor(const Graph& g, const DistanceMatrix& d, const Broadcast& f, Vertex x,
                     bool needs_outside_neighbor) {
    if (f[x] <= 0) {
        throw ExtractionError("choose_anchor: vertex " + std::to_string(x) + " is not in the support");
    }
    const int radius = f[x] / 2;
    std::optional<Vertex> anchor;
    for (Vertex v = 0; v < g.order() && !anchor; ++v) {
        if (d(x, v) != radius) {
            continue;
        }
        if (needs_outside_neighbor) {
            const auto& nb = g.neighbors(v);
            bool escapes = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return d(x, w) > radius; });
            if (!escapes) {
                continue;
            }
        }
        anchor = v;
    }
    if (!anchor) {
        throw ExtractionError("choose_anchor: no qualifying boundary vertex around " + std::to_string(x));
    }

    VertexSet path{*anchor};
    Vertex cur = *anchor;
    while (cur != x) {
        // Neighbors are sorted, so the first hit is the smallest id.
        for (Vertex u : g.neighbors(cur)) {
            if (d(x, u) == d(x, cur) - 1) {
                cur = u;
                break;
            }
        }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return {*anchor, std::move(path)};
}

VertexSet build_path_set(int value, std::span<const Vertex> path) {
    const auto expected = static_cast<std::size_t>((value + 2) / 2);
    if (value < 1 || path.size() != expected) {
        throw ExtractionError("build_path_set: path of order " + std::to_string(path.size()) + " for value " +
                              std::to_string(value) + ", expected " + std::to_string(expected));
    }
    const int last = static_cast<int>(path.size()) - 1;
    VertexSet out;
    for (int i = (value % 4 <= 1) ? last : last - 1; i >= 0; i -= 2) {
        out.push_back(path[static_cast<std::size_t>(i)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long ExtractionCertificate::required_times_four() const {
    switch (which) {
        case ExtractionCase::Case1:
            return weight + 2LL * support_size;
        case ExtractionCase::Case2:
            return 4 + weight + support_size;
        case ExtractionCase::Case3:
            return 4 + weight;
    }
    return weight;
}

bool ExtractionCertificate::meets_case_bound() const {
    return 4 * static_cast<long long>(independent_set.size()) >= required_times_four();
}

namespace {

// Larger value first, then smaller id.
Vertex pick_pivot(const Broadcast& f, const VertexSet& candidates) {
    return *std::min_element(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
        return f[a] != f[b] ? f[a] > f[b] : a < b;
    });
}

}  // namespace

ExtractionCertificate extract_independent_set(const Graph& g, const DistanceMatrix& d, const Broadcast& f) {
    const BallSystem balls = ball_system(g, d, f);
    ExtractionCertificate cert;
    cert.classes = classify_support(f);
    cert.weight = weight(f);
    const VertexSet support = f.support();
    cert.support_size = static_cast<int>(support.size());
    if (support.empty()) {
        throw BroadcastError("extraction needs a broadcast with nonempty support");
    }

    const bool has0 = !cert.classes[0].empty();
    const bool has3 = !cert.classes[3].empty();
    if (!has0 && !has3) {
        cert.which = ExtractionCase::Case1;
    } else if (!has0) {
        cert.which = ExtractionCase::Case2;
        cert.pivot = pick_pivot(f, cert.classes[3]);
    } else {
        cert.which = ExtractionCase::Case3;
        cert.pivot = pick_pivot(f, cert.classes[0]);
    }

    VertexSet chosen;
    for (Vertex x : support) {
        const bool outside = cert.which == ExtractionCase::Case2 && x == *cert.pivot;
        AnchorRecord rec{x, f[x], choose_anchor(g, d, f, x, outside), {}};
        rec.path_set = build_path_set(f[x], rec.anchor.path);

        const bool drop_anchor = cert.which == ExtractionCase::Case3 && f[x] % 4 == 0 && x != *cert.pivot;
        for (Vertex v : rec.path_set) {
            if (!(drop_anchor && v == rec.anchor.anchor)) {
                chosen.push_back(v);
            }
        }
        if (outside) {
            const Vertex p = rec.anchor.anchor;
            for (Vertex w : g.neighbors(p)) {
                if (d(x, w) > d(x, p)) {
                    cert.outside_vertex = w;
                    break;
                }
            }
            if (!cert.outside_vertex || !balls.in_residue(*cert.outside_vertex)) {
                throw ExtractionError("outside neighbor of the anchor of " + std::to_string(x) +
                                      " is not in the residue");
            }
            chosen.push_back(*cert.outside_vertex);
        }
        cert.anchors.push_back(std::move(rec));
    }

    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end()) {
        throw ExtractionError("extracted vertices repeat across balls");
    }
    if (!is_independent(g, chosen)) {
        throw ExtractionError("extracted set is not independent");
    }
    cert.independent_set = std::move(chosen);
    return cert;
}

}  // namespace bcast
