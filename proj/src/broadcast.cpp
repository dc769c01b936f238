#include "bcast/broadcast.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace bcast {

Broadcast::Broadcast(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v) {
        if (values_[v] < 0) {
            throw BroadcastError("negative broadcast value at vertex " + std::to_string(v));
        }
    }
}

Broadcast Broadcast::on_support(int n, std::span<const Vertex> support, std::span<const int> values) {
    if (support.size() != values.size()) {
        throw BroadcastError("support and value lists differ in length");
    }
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < support.size(); ++i) {
        f.at(static_cast<std::size_t>(support[i])) = values[i];
    }
    return Broadcast(std::move(f));
}

VertexSet Broadcast::support() const {
    VertexSet out;
    for (std::size_t v = 0; v < values_.size(); ++v) {
        if (values_[v] > 0) {
            out.push_back(static_cast<Vertex>(v));
        }
    }
    return out;
}

int Broadcast::max_value() const {
    return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

long long weight(const Broadcast& f) {
    return std::accumulate(f.values().begin(), f.values().end(), 0LL);
}

Broadcast parse_broadcast(std::string_view text) {
    std::vector<int> values;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r' || *p == ',')) {
            ++p;
        }
        if (p == end) {
            break;
        }
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || value < 0) {
            throw BroadcastError("broadcast: expected a nonnegative integer near '" +
                                 std::string(p, static_cast<std::size_t>(std::min<std::ptrdiff_t>(end - p, 8))) + "'");
        }
        values.push_back(value);
        p = next;
    }
    return Broadcast(std::move(values));
}

std::string format_broadcast(const Broadcast& f) {
    std::string out;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        if (i > 0) {
            out.push_back(' ');
        }
        out += std::to_string(f.values()[i]);
    }
    return out;
}

std::string ValidationResult::describe() const {
    if (valid()) {
        return "valid";
    }
    std::ostringstream os;
    os << "invalid:";
    for (const auto& e : ecc_violations) {
        os << " f(" << e.vertex << ")=" << e.value << ">ecc=" << e.ecc << ";";
    }
    for (const auto& p : pair_violations) {
        os << " dist(" << p.first << "," << p.second << ")=" << p.distance << "<=" << p.max_value << ";";
    }
    return os.str();
}

ValidationResult validate(const Graph& g, const DistanceMatrix& d, const Broadcast& f) {
    if (f.order() != g.order() || d.order() != g.order()) {
        throw BroadcastError("broadcast has " + std::to_string(f.order()) + " values for a graph on " +
                             std::to_string(g.order()) + " vertices");
    }
    ValidationResult result;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f[v] > d.ecc(v)) {
            result.ecc_violations.push_back({v, f[v], d.ecc(v)});
        }
    }
    auto support = f.support();
    for (std::size_t i = 0; i < support.size(); ++i) {
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            Vertex x = support[i];
            Vertex y = support[j];
            int m = std::max(f[x], f[y]);
            if (d(x, y) <= m) {
                result.pair_violations.push_back({x, y, d(x, y), m});
            }
        }
    }
    return result;
}

const Ball* BallSystem::ball_of(Vertex center) const {
    auto it = std::lower_bound(balls.begin(), balls.end(), center,
                               [](const Ball& b, Vertex c) { return b.center < c; });
    return (it != balls.end() && it->center == center) ? &*it : nullptr;
}

BallSystem ball_system(const Graph& g, const DistanceMatrix& d, const Broadcast& f) {
    if (auto check = validate(g, d, f); !check) {
        throw BroadcastError("ball system needs a valid broadcast, " + check.describe());
    }
    BallSystem sys;
    sys.owner.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex x : f.support()) {
        Ball b{x, f[x] / 2, {}, {}};
        for (Vertex v = 0; v < g.order(); ++v) {
            int dist = d(x, v);
            if (dist > b.radius) {
                continue;
            }
            int& owner = sys.owner[static_cast<std::size_t>(v)];
            if (owner >= 0) {
                Vertex other = sys.balls[static_cast<std::size_t>(owner)].center;
                throw BroadcastError("balls of " + std::to_string(other) + " and " + std::to_string(x) +
                                     " overlap at vertex " + std::to_string(v) + ": pair (" + std::to_string(other) +
                                     "," + std::to_string(x) + ") violates the distance axiom");
            }
            owner = static_cast<int>(sys.balls.size());
            b.members.push_back(v);
            if (dist == b.radius) {
                b.boundary.push_back(v);
            }
        }
        sys.balls.push_back(std::move(b));
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (sys.owner[static_cast<std::size_t>(v)] < 0) {
            sys.residue.push_back(v);
        }
    }
    return sys;
}

}  // namespace bcast
