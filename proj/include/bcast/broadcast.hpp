#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

class BroadcastError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A function f: V -> N0 stored densely by vertex id.
class Broadcast {
  public:
    Broadcast() = default;
    explicit Broadcast(std::vector<int> values);
    static Broadcast zero(int n) { return Broadcast(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    /// f = value on every vertex of `support`, 0 elsewhere.
    static Broadcast on_support(int n, std::span<const Vertex> support, std::span<const int> values);

    [[nodiscard]] int order() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] int operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const std::vector<int>& values() const { return values_; }

    /// Vertices with f(x) > 0, ascending.
    [[nodiscard]] VertexSet support() const;
    [[nodiscard]] int max_value() const;

    friend bool operator==(const Broadcast&, const Broadcast&) = default;

  private:
    std::vector<int> values_;
};

[[nodiscard]] long long weight(const Broadcast& f);

/// Whitespace-separated nonnegative integers, one value per vertex.
[[nodiscard]] Broadcast parse_broadcast(std::string_view text);
[[nodiscard]] std::string format_broadcast(const Broadcast& f);

struct EccentricityViolation {
    Vertex vertex;
    int value;
    int ecc;
};

struct PairViolation {
    Vertex first;
    Vertex second;
    int distance;
    int max_value;
};

struct ValidationResult {
    std::vector<EccentricityViolation> ecc_violations;
    std::vector<PairViolation> pair_violations;

    [[nodiscard]] bool valid() const { return ecc_violations.empty() && pair_violations.empty(); }
    explicit operator bool() const { return valid(); }
    [[nodiscard]] std::string describe() const;
};

/// Checks f(x) <= ecc(x) for every x, and dist(x,y) > max{f(x),f(y)} for every
/// pair of distinct support vertices. Lists every violation.
[[nodiscard]] ValidationResult validate(const Graph& g, const DistanceMatrix& d, const Broadcast& f);

/// Radius-floor(f(x)/2) balls around the support of a valid broadcast.
struct Ball {
    Vertex center;
    int radius;
    VertexSet members;   // ascending
    VertexSet boundary;  // members at distance exactly radius, ascending
};

struct BallSystem {
    std::vector<Ball> balls;  // one per support vertex, by ascending center
    VertexSet residue;        // vertices in no ball
    std::vector<int> owner;   // ball index per vertex, -1 for residue

    [[nodiscard]] const Ball* ball_of(Vertex center) const;
    [[nodiscard]] bool in_residue(Vertex v) const { return owner[static_cast<std::size_t>(v)] < 0; }
};

/// Throws BroadcastError naming the offending pair if two balls overlap.
[[nodiscard]] BallSystem ball_system(const Graph& g, const DistanceMatrix& d, const Broadcast& f);

}  // namespace bcast
