#pragma once

#include <map>
#include <optional>
#include <string>

#include "bcast/graph.hpp"

namespace bcast {

class FamilyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Layered clique strip rooted at a single vertex.
///
/// layer_sizes[0] must be 1. Layer i is a clique; for even i it is completely
/// joined to layer i+1. For odd i the edges to layer i+1 come from
/// odd_layer_edges[i] as (index in layer i, index in layer i+1) pairs, or the
/// complete join when no entry exists.
struct StripSpec {
    std::vector<int> layer_sizes;
    std::map<int, std::vector<Edge>> odd_layer_edges;

    [[nodiscard]] int length() const { return static_cast<int>(layer_sizes.size()) - 1; }

    /// Root plus `length` layers of `size` vertices, complete joins throughout.
    static StripSpec uniform(int length, int size);
    /// As uniform, but vertex j of layer i+1 (i odd) only sees vertex
    /// j mod |layer i| of layer i.
    static StripSpec sparse(int length, int size);
    /// Explicit layer sizes (root included), complete joins.
    static StripSpec with_sizes(std::vector<int> sizes);

    friend bool operator==(const StripSpec&, const StripSpec&) = default;
};

struct Strip {
    Graph graph;
    std::vector<VertexSet> layers;
};

/// Throws FamilyError if the spec breaks the layering, naming the vertex
/// that would not sit at its layer distance.
[[nodiscard]] Strip build_strip(const StripSpec& spec);

enum class Family { G0, G2 };

[[nodiscard]] std::string to_string(Family f);

struct FamilyParams {
    Family family = Family::G2;
    int k = 1;
    int l = 2;  // number of strips; always 2 for G2
    std::vector<StripSpec> strips;
    std::vector<Edge> cross_edges;  // G2: (index in terminal layer 1, index in terminal layer 2)
    int r_size = 0;                 // G0 only

    /// Both strips uniform with `size`; cross edges are either the single
    /// pair (0,0) or the complete join of the terminal layers.
    static FamilyParams g2_uniform(int k, int size, bool complete_cross);
    static FamilyParams g0_uniform(int k, int l, int size, int r_size);

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct FamilyMember {
    Graph graph;
    std::vector<Vertex> roots;
    FamilyParams params;
};

struct BuildOptions {
    bool allow_k0 = false;
};

/// Two (2k+1)-strips joined by cross edges between their terminal layers.
/// Vertices of strip 1 come first. k = 0 requires allow_k0.
[[nodiscard]] FamilyMember build_G2(int k, const StripSpec& first, const StripSpec& second,
                                    std::span<const Edge> cross_edges, BuildOptions options = {});

/// l 2k-strips plus r_size extra vertices, with a clique on the extra vertices
/// and all terminal layers. The extra vertices are numbered last.
[[nodiscard]] FamilyMember build_G0(int k, int l, std::span<const StripSpec> strips, int r_size);

[[nodiscard]] FamilyMember build_family(const FamilyParams& params, BuildOptions options = {});

struct RecognizeOptions {
    bool allow_k0 = false;
};

/// Exact membership test for the two extremal families, reconstructing the
/// layering from the distance structure. Returns std::nullopt on non-members.
[[nodiscard]] std::optional<FamilyParams> recognize(const Graph& g, RecognizeOptions options = {});
[[nodiscard]] std::optional<FamilyParams> recognize(const Graph& g, const DistanceMatrix& d,
                                                    RecognizeOptions options = {});

}  // namespace bcast
