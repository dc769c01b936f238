#include "bcast/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace bcast {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

int lowest(Mask m) { return std::countr_zero(m); }

class MaxIndependentSet {
  public:
    explicit MaxIndependentSet(const Graph& g) : adj_(g.adjacency_masks()) {}

    IndependenceResult run(int n) {
        Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
        search(all, 0);
        IndependenceResult r;
        r.value = best_size_;
        for (Mask m = best_; m != 0; m &= m - 1) {
            r.witness.push_back(lowest(m));
        }
        return r;
    }

  private:
    int clique_cover(Mask rem) const {
        int count = 0;
        while (rem != 0) {
            int v = lowest(rem);
            Mask clique = bit(v);
            Mask cand = rem & adj_[static_cast<std::size_t>(v)];
            while (cand != 0) {
                int u = lowest(cand);
                clique |= bit(u);
                cand &= adj_[static_cast<std::size_t>(u)];
            }
            rem &= ~clique;
            ++count;
        }
        return count;
    }

    void search(Mask cand, Mask chosen) {
        // Vertices of degree <= 1 in the remaining graph can always be taken.
        bool changed = true;
        while (changed) {
            changed = false;
            for (Mask m = cand; m != 0; m &= m - 1) {
                int v = lowest(m);
                Mask nb = adj_[static_cast<std::size_t>(v)] & cand;
                if (std::popcount(nb) <= 1) {
                    chosen |= bit(v);
                    cand &= ~(nb | bit(v));
                    changed = true;
                    break;
                }
            }
        }
        int size = std::popcount(chosen);
        if (cand == 0) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = chosen;
            }
            return;
        }
        if (size + clique_cover(cand) <= best_size_) {
            return;
        }
        int pivot = -1;
        int pivot_degree = -1;
        for (Mask m = cand; m != 0; m &= m - 1) {
            int v = lowest(m);
            int deg = std::popcount(adj_[static_cast<std::size_t>(v)] & cand);
            if (deg > pivot_degree) {
                pivot = v;
                pivot_degree = deg;
            }
        }
        search(cand & ~(adj_[static_cast<std::size_t>(pivot)] | bit(pivot)), chosen | bit(pivot));
        search(cand & ~bit(pivot), chosen);
    }

    std::vector<Mask> adj_;
    Mask best_ = 0;
    int best_size_ = -1;
};

/// Enumerates independent sets in a fixed vertex order, tracking the value cap
/// of every chosen vertex incrementally. Caps never grow as the support grows,
/// so the current cap sum plus an optimistic cap for every remaining candidate
/// bounds every extension.
class BroadcastSearch {
  public:
    BroadcastSearch(const Graph& g, const DistanceMatrix& d) : d_(d), n_(g.order()) {
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return d.ecc(a) > d.ecc(b); });
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
        }
        closed_.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            Vertex v = order_[static_cast<std::size_t>(i)];
            Mask m = bit(i);
            for (Vertex u : g.neighbors(v)) {
                m |= bit(pos[static_cast<std::size_t>(u)]);
            }
            closed_[static_cast<std::size_t>(i)] = m;
        }
        ecc_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            ecc_[static_cast<std::size_t>(i)] = d.ecc(order_[static_cast<std::size_t>(i)]);
        }
    }

    void run() {
        Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        std::vector<int> optimistic(ecc_);
        extend(all, optimistic);
    }

    int best() const { return best_; }
    std::vector<VertexSet> optimal_supports() const {
        std::vector<VertexSet> out;
        for (const auto& s : optimal_) {
            VertexSet vs;
            for (int i : s) {
                vs.push_back(order_[static_cast<std::size_t>(i)]);
            }
            std::sort(vs.begin(), vs.end());
            out.push_back(std::move(vs));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    int dist(int i, int j) const { return d_(order_[static_cast<std::size_t>(i)], order_[static_cast<std::size_t>(j)]); }

    // optimistic[i] bounds the cap of candidate i given the current support.
    void extend(Mask cand, const std::vector<int>& optimistic) {
        while (cand != 0) {
            int upper = cap_sum_;
            for (Mask m = cand; m != 0; m &= m - 1) {
                upper += optimistic[static_cast<std::size_t>(lowest(m))];
            }
            if (upper < best_) {
                return;
            }
            int v = lowest(cand);
            cand &= ~bit(v);
            include(v, cand, optimistic);
        }
    }

    void include(int v, Mask cand, const std::vector<int>& optimistic) {
        const std::vector<int> saved_caps = caps_;
        const int saved_sum = cap_sum_;
        int cap_v = ecc_[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < chosen_.size(); ++k) {
            int limit = dist(chosen_[k], v) - 1;
            cap_v = std::min(cap_v, limit);
            if (caps_[k] > limit) {
                cap_sum_ -= caps_[k] - limit;
                caps_[k] = limit;
            }
        }
        chosen_.push_back(v);
        caps_.push_back(cap_v);
        cap_sum_ += cap_v;

        if (cap_sum_ > best_) {
            best_ = cap_sum_;
            optimal_.clear();
        }
        if (cap_sum_ == best_) {
            optimal_.push_back(chosen_);
        }

        Mask next = cand & ~closed_[static_cast<std::size_t>(v)];
        if (next != 0) {
            std::vector<int> tighter(optimistic);
            for (Mask m = next; m != 0; m &= m - 1) {
                int u = lowest(m);
                tighter[static_cast<std::size_t>(u)] = std::min(tighter[static_cast<std::size_t>(u)], dist(u, v) - 1);
            }
            extend(next, tighter);
        }

        chosen_.pop_back();
        caps_ = saved_caps;
        cap_sum_ = saved_sum;
    }

    const DistanceMatrix& d_;
    int n_;
    std::vector<Vertex> order_;
    std::vector<Mask> closed_;
    std::vector<int> ecc_;

    std::vector<int> chosen_;
    std::vector<int> caps_;
    int cap_sum_ = 0;

    int best_ = 0;
    std::vector<std::vector<int>> optimal_;
};

}  // namespace

IndependenceResult alpha(const Graph& g) {
    if (g.order() > kAlphaMaxOrder) {
        throw SolverLimitError("alpha: graph has " + std::to_string(g.order()) + " vertices, limit " +
                               std::to_string(kAlphaMaxOrder));
    }
    if (g.order() == 0) {
        return {};
    }
    return MaxIndependentSet(g).run(g.order());
}

int value_cap(const DistanceMatrix& d, std::span<const Vertex> support, Vertex x) {
    if (std::find(support.begin(), support.end(), x) == support.end()) {
        throw BroadcastError("value_cap: vertex " + std::to_string(x) + " is not in the support");
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            if (d(support[i], support[j]) < 2) {
                throw BroadcastError("value_cap: support is not independent (" + std::to_string(support[i]) + "," +
                                     std::to_string(support[j]) + ")");
            }
        }
    }
    int cap = d.ecc(x);
    for (Vertex y : support) {
        if (y != x) {
            cap = std::min(cap, d(x, y) - 1);
        }
    }
    return cap;
}

Broadcast capped_broadcast(const DistanceMatrix& d, std::span<const Vertex> support) {
    std::vector<int> values(static_cast<std::size_t>(d.order()), 0);
    for (Vertex x : support) {
        values[static_cast<std::size_t>(x)] = value_cap(d, support, x);
    }
    return Broadcast(std::move(values));
}

BroadcastSolution alpha_b(const Graph& g) {
    DistanceMatrix d(g);
    return alpha_b(g, d);
}

BroadcastSolution alpha_b(const Graph& g, const DistanceMatrix& d) {
    if (g.order() > kAlphaBMaxOrder) {
        throw SolverLimitError("alpha_b: graph has " + std::to_string(g.order()) + " vertices, limit " +
                               std::to_string(kAlphaBMaxOrder));
    }
    BroadcastSolution sol;
    if (g.order() == 1) {
        // ecc = 0 forces the zero broadcast.
        sol.value = 0;
        sol.witness = Broadcast::zero(1);
        sol.supports = {VertexSet{}};
        sol.optimal_fmax = {0};
        return sol;
    }
    BroadcastSearch search(g, d);
    search.run();
    sol.value = search.best();
    sol.supports = search.optimal_supports();
    sol.witness = capped_broadcast(d, sol.supports.front());
    for (const auto& s : sol.supports) {
        sol.optimal_fmax.push_back(capped_broadcast(d, s).max_value());
    }
    std::sort(sol.optimal_fmax.begin(), sol.optimal_fmax.end());
    sol.optimal_fmax.erase(std::unique(sol.optimal_fmax.begin(), sol.optimal_fmax.end()), sol.optimal_fmax.end());
    return sol;
}

std::vector<VertexSet> enumerate_optimal_supports(const Graph& g) {
    return alpha_b(g).supports;
}

int naive_alpha_b(const Graph& g) {
    DistanceMatrix d(g);
    const int n = g.order();
    long long space = 1;
    for (int v = 0; v < n; ++v) {
        space *= d.ecc(v) + 1;
        if (space > kNaiveBudget) {
            throw SolverLimitError("naive_alpha_b: search space exceeds budget");
        }
    }
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    long long best = 0;
    while (true) {
        Broadcast b(f);
        if (validate(g, d, b)) {
            best = std::max(best, weight(b));
        }
        int v = 0;
        while (v < n && f[static_cast<std::size_t>(v)] == d.ecc(v)) {
            f[static_cast<std::size_t>(v)] = 0;
            ++v;
        }
        if (v == n) {
            break;
        }
        ++f[static_cast<std::size_t>(v)];
    }
    return static_cast<int>(best);
}

}  // namespace bcast
