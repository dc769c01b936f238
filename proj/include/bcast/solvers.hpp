#pragma once

#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"

namespace bcast {

class SolverLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kAlphaMaxOrder = 60;
inline constexpr int kAlphaBMaxOrder = 40;
inline constexpr long long kNaiveBudget = 10'000'000;

struct IndependenceResult {
    int value = 0;
    VertexSet witness;  // a maximum independent set, ascending
};

struct BroadcastSolution {
    int value = 0;
    Broadcast witness;               // optimal broadcast on the lexicographically smallest optimal support
    std::vector<VertexSet> supports;  // every optimal support, ascending, lexicographically sorted
    std::vector<int> optimal_fmax;   // distinct f_max over all optimal broadcasts, ascending
};

/// Maximum independent set by branch and bound over vertex bitsets.
/// Throws SolverLimitError above kAlphaMaxOrder vertices.
[[nodiscard]] IndependenceResult alpha(const Graph& g);

/// Largest admissible f(x) once the support is fixed to `support`:
/// min(ecc(x), min over other y in support of dist(x,y) - 1).
/// Throws BroadcastError if x is not in the support or the support has two
/// vertices at distance < 2.
[[nodiscard]] int value_cap(const DistanceMatrix& d, std::span<const Vertex> support, Vertex x);

/// Exact broadcast independence number. An optimal broadcast puts value_cap on
/// each support vertex, so the search runs over nonempty independent sets.
/// Throws SolverLimitError above kAlphaBMaxOrder vertices.
[[nodiscard]] BroadcastSolution alpha_b(const Graph& g);
[[nodiscard]] BroadcastSolution alpha_b(const Graph& g, const DistanceMatrix& d);

/// Optimal supports of alpha_b(g); each determines a unique optimal broadcast.
[[nodiscard]] std::vector<VertexSet> enumerate_optimal_supports(const Graph& g);

/// Broadcast with f = value_cap on every vertex of `support`.
[[nodiscard]] Broadcast capped_broadcast(const DistanceMatrix& d, std::span<const Vertex> support);

/// Definitional optimum over every f with 0 <= f(x) <= ecc(x). Throws
/// SolverLimitError when the product of (ecc(x)+1) exceeds kNaiveBudget.
[[nodiscard]] int naive_alpha_b(const Graph& g);

}  // namespace bcast
