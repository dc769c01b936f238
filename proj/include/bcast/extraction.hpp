#pragma once

#include <array>
#include <optional>
#include <string>

#include "bcast/broadcast.hpp"

namespace bcast {

class ExtractionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ExtractionCase { Case1, Case2, Case3 };

[[nodiscard]] std::string to_string(ExtractionCase c);

/// Support vertices split by f(x) mod 4; classes[i] holds residue i.
struct SupportClasses {
    std::array<VertexSet, 4> classes;
    [[nodiscard]] const VertexSet& operator[](int residue) const { return classes[static_cast<std::size_t>(residue)]; }
};

[[nodiscard]] SupportClasses classify_support(const Broadcast& f);

struct Anchor {
    Vertex anchor;      // p(x), on the boundary of the ball around x
    VertexSet path;     // shortest path x = path.front(), ..., path.back() = anchor
};

/// Picks the smallest-id boundary vertex of the ball around x (restricted to
/// boundary vertices with a neighbor outside the ball when requested) and a
/// shortest path to it that steps to the smallest-id predecessor.
[[nodiscard]] Anchor choose_anchor(const Graph& g, const DistanceMatrix& d, const Broadcast& f, Vertex x,
                                   bool needs_outside_neighbor);

/// Alternating independent subset of an anchor path, taken from the anchor
/// end. Residues 0 and 1 keep the anchor, residues 2 and 3 skip it.
[[nodiscard]] VertexSet build_path_set(int value, std::span<const Vertex> path);

struct AnchorRecord {
    Vertex center;
    int value;
    Anchor anchor;
    VertexSet path_set;  // I(x)
};

struct ExtractionCertificate {
    ExtractionCase which = ExtractionCase::Case1;
    SupportClasses classes;
    std::vector<AnchorRecord> anchors;  // by ascending center
    std::optional<Vertex> outside_vertex;  // y3 in Case 2
    std::optional<Vertex> pivot;           // x3 in Case 2, x0 in Case 3
    VertexSet independent_set;             // ascending
    long long weight = 0;
    int support_size = 0;

    /// Case-specific guarantee, scaled by 4 to stay integral:
    /// Case 1: 4|I| >= w + 2|X|; Case 2: 4|I| >= 4 + w + |X|; Case 3: 4|I| >= 4 + w.
    [[nodiscard]] long long required_times_four() const;
    [[nodiscard]] bool meets_case_bound() const;
    [[nodiscard]] bool meets_quarter_bound() const {
        return 4 * static_cast<long long>(independent_set.size()) >= weight;
    }
};

/// Builds an independent set from a valid broadcast with a nonempty support.
/// Throws BroadcastError on invalid input and ExtractionError if an internal
/// guarantee fails.
[[nodiscard]] ExtractionCertificate extract_independent_set(const Graph& g, const DistanceMatrix& d,
                                                            const Broadcast& f);

}  // namespace bcast
