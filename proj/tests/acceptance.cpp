// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "bcast/extraction.hpp"
#include "bcast/families.hpp"
#include "bcast/harness.hpp"
#include "bcast/parallel.hpp"
#include "bcast/solvers.hpp"

namespace {

using namespace bcast;
using Clock = std::chrono::steady_clock;

// Pinned limits. Every numeric check below is exact integer equality; the
// only tolerances are wall-clock budgets and sample sizes.
constexpr double kBudgetG2Seconds = 60.0;
constexpr double kBudgetG0Seconds = 120.0;
constexpr double kBudgetNaiveSeconds = 60.0;
constexpr int kSweepMaxOrder = 7;
constexpr int kNaiveMaxOrder = 5;
constexpr int kFamilyMaxOrder = 12;
constexpr int kRandomBroadcasts = 1000;
constexpr int kRandomMaxOrder = 12;
constexpr std::uint64_t kRandomSeed = 20240917;

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += pass ? 0 : 1;
}

// Criterion 1 ---------------------------------------------------------------

void g2_values() {
    const auto start = Clock::now();
    int members = 0;
    std::string bad;
    for (int k = 1; k <= 2; ++k) {
        for (int size = 1; size <= 2; ++size) {
            for (bool complete : {false, true}) {
                auto m = build_family(FamilyParams::g2_uniform(k, size, complete));
                const DistanceMatrix d(m.graph);
                const int a = alpha(m.graph).value;
                const auto sol = alpha_b(m.graph, d);
                ++members;
                if (a != 2 * k + 2 || sol.value != 8 * k + 4 || sol.optimal_fmax != std::vector<int>{4 * k + 2}) {
                    bad += " " + write_graph6(m.graph);
                }
            }
        }
    }
    const double t = seconds_since(start);
    report(1, bad.empty() && t < kBudgetG2Seconds,
           std::to_string(members) + " G2 members, alpha=2k+2, alpha_b=8k+4, all f_max=4k+2" +
               (bad.empty() ? "" : "; wrong on" + bad) + "; " + std::to_string(t) + " s");
}

// Criterion 2 ---------------------------------------------------------------

void g0_values() {
    const auto start = Clock::now();
    int members = 0;
    std::string bad;
    for (int k = 1; k <= 2; ++k) {
        for (int l = 2; l <= 3; ++l) {
            for (int r = 0; r <= 2; ++r) {
                for (int size = 1; size <= 2; ++size) {
                    auto m = build_family(FamilyParams::g0_uniform(k, l, size, r));
                    const DistanceMatrix d(m.graph);
                    const int a = alpha(m.graph).value;
                    const auto sol = alpha_b(m.graph, d);
                    ++members;
                    const bool ok = a == k * l + 1 && sol.value == 4 * k * l &&
                                    sol.optimal_fmax == std::vector<int>{4 * k} && sol.supports.size() == 1 &&
                                    sol.supports[0] == m.roots;
                    if (!ok) {
                        bad += " " + write_graph6(m.graph);
                    }
                }
            }
        }
    }
    const double t = seconds_since(start);
    report(2, bad.empty() && t < kBudgetG0Seconds,
           std::to_string(members) + " G0 members, alpha=kl+1, alpha_b=4kl, f_max=4k, unique support at the roots" +
               (bad.empty() ? "" : "; wrong on" + bad) + "; " + std::to_string(t) + " s");
}

// Criteria 3, 4, 5 (first half), 7: one pass over every connected graph -----

struct GraphOutcome {
    bool sandwich_ok = true;
    bool bound_ok = true;
    bool equal_large = false;  // equality at some f_max >= 4
    bool equal_small = false;  // equality at some f_max < 4
    bool equal_at_three = false;
    bool recognized = false;
    bool recognized_without_equality = false;
    int broadcasts = 0;
    int extraction_failures = 0;
    bool roundtrip_ok = true;
    std::string graph6;
};

bool certificate_ok(const Graph& g, const ExtractionCertificate& c) {
    return is_independent(g, c.independent_set) && c.meets_quarter_bound() && c.meets_case_bound();
}

GraphOutcome examine(const Graph& g) {
    GraphOutcome o;
    o.graph6 = write_graph6(g);
    o.roundtrip_ok = parse_graph6(o.graph6) == g;
    if (g.order() == 1) {
        return o;  // ecc = 0 forces f = 0; nothing to bound or extract
    }
    const DistanceMatrix d(g);
    const int a = alpha(g).value;
    const auto sol = alpha_b(g, d);
    o.sandwich_ok = a <= sol.value && sol.value <= 4 * a;

    if (d.diameter() <= 2 && a <= 2) {
        o.bound_ok = sol.value == a;
    } else {
        for (int f : sol.optimal_fmax) {
            const auto c = check_bound(a, sol.value, f);
            o.bound_ok = o.bound_ok && c.holds;
            if (c.equal) {
                (f >= 4 ? o.equal_large : o.equal_small) = true;
                o.equal_at_three = o.equal_at_three || f == 3;
            }
        }
        if (auto fam = recognize(g, d)) {
            o.recognized = true;
            const int expected = fam->family == Family::G0 ? 4 * fam->k : 4 * fam->k + 2;
            bool hit = false;
            for (int f : sol.optimal_fmax) {
                hit = hit || (f == expected && check_bound(a, sol.value, f).equal);
            }
            o.recognized_without_equality = !hit;
        }
    }

    for (const auto& support : sol.supports) {
        ++o.broadcasts;
        try {
            if (!certificate_ok(g, extract_independent_set(g, d, capped_broadcast(d, support)))) {
                ++o.extraction_failures;
            }
        } catch (const std::exception&) {
            ++o.extraction_failures;
        }
    }
    return o;
}

struct SweepTotals {
    std::size_t graphs = 0;
    std::size_t sandwich_failures = 0;
    std::size_t bound_failures = 0;
    std::size_t equal_large = 0;
    std::size_t equal_large_unrecognized = 0;
    std::size_t recognized_without_equality = 0;
    std::size_t k0_anomalies = 0;
    std::size_t equal_at_three = 0;
    std::size_t broadcasts = 0;
    std::size_t extraction_failures = 0;
    std::size_t roundtrip_failures = 0;
    std::string first_bad;

    void add(const GraphOutcome& o) {
        ++graphs;
        const bool bad = !o.sandwich_ok || !o.bound_ok || (o.equal_large && !o.recognized) ||
                         o.recognized_without_equality || o.extraction_failures > 0 || !o.roundtrip_ok;
        if (bad && first_bad.empty()) {
            first_bad = o.graph6;
        }
        sandwich_failures += o.sandwich_ok ? 0 : 1;
        bound_failures += o.bound_ok ? 0 : 1;
        equal_large += o.equal_large ? 1 : 0;
        equal_large_unrecognized += (o.equal_large && !o.recognized) ? 1 : 0;
        recognized_without_equality += o.recognized_without_equality ? 1 : 0;
        k0_anomalies += o.equal_small ? 1 : 0;
        equal_at_three += o.equal_at_three ? 1 : 0;
        broadcasts += static_cast<std::size_t>(o.broadcasts);
        extraction_failures += static_cast<std::size_t>(o.extraction_failures);
        roundtrip_failures += o.roundtrip_ok ? 0 : 1;
    }
};

SweepTotals sweep() {
    SweepTotals totals;
    std::vector<Graph> batch;
    const auto flush = [&] {
        std::vector<GraphOutcome> out(batch.size());
        parallel_for(batch.size(), 0, [&](std::size_t i) { out[i] = examine(batch[i]); });
        for (const auto& o : out) {
            totals.add(o);
        }
        batch.clear();
    };
    for (int n = 1; n <= kSweepMaxOrder; ++n) {
        for_each_connected(n, [&](const Graph& g, std::uint64_t) {
            batch.push_back(g);
            if (batch.size() == 8192) {
                flush();
            }
        });
    }
    flush();
    return totals;
}

// Criterion 4, second half: every small family member attains equality. ----

struct MemberTally {
    int built = 0;
    std::string bad;
};

void check_member(const FamilyMember& m, MemberTally& t) {
    if (m.graph.order() > kFamilyMaxOrder) {
        return;
    }
    ++t.built;
    const DistanceMatrix d(m.graph);
    const int a = alpha(m.graph).value;
    const auto sol = alpha_b(m.graph, d);
    const int expected = m.params.family == Family::G0 ? 4 * m.params.k : 4 * m.params.k + 2;
    bool hit = false;
    for (int f : sol.optimal_fmax) {
        hit = hit || (f == expected && check_bound(a, sol.value, f).equal);
    }
    if (!hit) {
        t.bad += " " + write_graph6(m.graph);
    }
}

// All layer-size vectors for a strip of `length` with sizes in 1..3 whose
// total order stays within `budget`.
void size_vectors(int length, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == length + 1) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int s : cur) {
        used += s;
    }
    for (int s = 1; s <= 3 && used + s + (length - static_cast<int>(cur.size())) <= budget; ++s) {
        cur.push_back(s);
        size_vectors(length, budget, cur, out);
        cur.pop_back();
    }
}

std::vector<StripSpec> strip_variants(int length, int budget) {
    std::vector<std::vector<int>> sizes;
    std::vector<int> cur{1};
    size_vectors(length, budget, cur, sizes);
    std::vector<StripSpec> out;
    for (const auto& s : sizes) {
        auto spec = StripSpec::with_sizes(s);
        out.push_back(spec);
        bool thin = false;
        for (int i = 1; i < length; i += 2) {
            std::vector<Edge> e;
            for (int j = 0; j < s[static_cast<std::size_t>(i) + 1]; ++j) {
                e.emplace_back(j % s[static_cast<std::size_t>(i)], j);
            }
            thin = thin || e.size() < static_cast<std::size_t>(s[static_cast<std::size_t>(i)]) *
                                          static_cast<std::size_t>(s[static_cast<std::size_t>(i) + 1]);
            spec.odd_layer_edges[i] = e;
        }
        if (thin) {
            out.push_back(spec);
        }
    }
    return out;
}

int total_order(const StripSpec& s) {
    int n = 0;
    for (int v : s.layer_sizes) {
        n += v;
    }
    return n;
}

MemberTally small_members() {
    MemberTally t;
    for (int k = 1; 2 * (2 * k + 2) <= kFamilyMaxOrder; ++k) {
        const int length = 2 * k + 1;
        const auto variants = strip_variants(length, kFamilyMaxOrder - (length + 1));
        for (std::size_t i = 0; i < variants.size(); ++i) {
            for (std::size_t j = i; j < variants.size(); ++j) {
                const auto& s1 = variants[i];
                const auto& s2 = variants[j];
                if (total_order(s1) + total_order(s2) > kFamilyMaxOrder) {
                    continue;
                }
                const int t1 = s1.layer_sizes.back();
                const int t2 = s2.layer_sizes.back();
                std::vector<std::vector<Edge>> crosses{{{0, 0}}};
                std::vector<Edge> all;
                std::vector<Edge> matching;
                for (int a = 0; a < t1; ++a) {
                    for (int b = 0; b < t2; ++b) {
                        all.emplace_back(a, b);
                    }
                    matching.emplace_back(a, a % t2);
                }
                if (all.size() > 1) {
                    crosses.push_back(all);
                }
                if (matching.size() > 1 && matching.size() < all.size()) {
                    crosses.push_back(matching);
                }
                for (const auto& c : crosses) {
                    check_member(build_G2(k, s1, s2, c), t);
                }
            }
        }
    }
    for (int k = 1; 2 * (2 * k + 1) <= kFamilyMaxOrder; ++k) {
        const int length = 2 * k;
        for (int l = 2; l * (length + 1) <= kFamilyMaxOrder; ++l) {
            const int spare = kFamilyMaxOrder - l * (length + 1);
            const auto variants = strip_variants(length, length + 1 + spare);
            // Strips in nondecreasing variant order; the order is irrelevant
            // up to relabeling.
            std::vector<std::size_t> pick(static_cast<std::size_t>(l), 0);
            while (true) {
                std::vector<StripSpec> strips;
                int n = 0;
                for (auto p : pick) {
                    strips.push_back(variants[p]);
                    n += total_order(variants[p]);
                }
                for (int r = 0; n + r <= kFamilyMaxOrder; ++r) {
                    check_member(build_G0(k, l, strips, r), t);
                }
                int pos = l - 1;
                while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == variants.size()) {
                    --pos;
                }
                if (pos < 0) {
                    break;
                }
                const auto next = pick[static_cast<std::size_t>(pos)] + 1;
                for (int q = pos; q < l; ++q) {
                    pick[static_cast<std::size_t>(q)] = next;
                }
            }
        }
    }
    return t;
}

// Criterion 5, second half ----------------------------------------------------

// Random independent support with values drawn uniformly from 1..cap, which
// keeps every pair at distance > max value.
Broadcast random_valid_broadcast(const Graph& g, const DistanceMatrix& d, std::mt19937_64& rng) {
    const int n = g.order();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        order[static_cast<std::size_t>(v)] = v;
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution take(0.5);
    VertexSet support;
    for (Vertex v : order) {
        bool free = true;
        for (Vertex s : support) {
            free = free && d(s, v) >= 2;
        }
        if (free && (support.empty() || take(rng))) {
            support.push_back(v);
        }
    }
    std::sort(support.begin(), support.end());
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (Vertex x : support) {
        std::uniform_int_distribution<int> value(1, value_cap(d, support, x));
        f[static_cast<std::size_t>(x)] = value(rng);
    }
    return Broadcast(f);
}

void random_extraction(const SweepTotals& totals) {
    std::mt19937_64 rng(kRandomSeed);
    std::uniform_int_distribution<int> order(2, kRandomMaxOrder);
    std::uniform_real_distribution<double> density(0.15, 0.7);
    std::array<int, 3> cases{};
    int failures_here = 0;
    for (int i = 0; i < kRandomBroadcasts; ++i) {
        const Graph g = random_connected(order(rng), density(rng), rng());
        const DistanceMatrix d(g);
        const Broadcast f = random_valid_broadcast(g, d, rng);
        try {
            const auto c = extract_independent_set(g, d, f);
            ++cases[static_cast<std::size_t>(c.which)];
            failures_here += certificate_ok(g, c) ? 0 : 1;
        } catch (const std::exception&) {
            ++failures_here;
        }
    }
    const bool pass = totals.extraction_failures == 0 && failures_here == 0;
    report(5, pass,
           std::to_string(totals.broadcasts) + " optimal broadcasts on n<=" + std::to_string(kSweepMaxOrder) + ", " +
               std::to_string(totals.extraction_failures) + " failures; " + std::to_string(kRandomBroadcasts) +
               " random broadcasts on n<=" + std::to_string(kRandomMaxOrder) + " (cases " + std::to_string(cases[0]) +
               "/" + std::to_string(cases[1]) + "/" + std::to_string(cases[2]) + "), " +
               std::to_string(failures_here) + " failures");
}

// Criterion 6 ---------------------------------------------------------------

void naive_agreement() {
    const auto start = Clock::now();
    int graphs = 0;
    std::string bad;
    for (int n = 1; n <= kNaiveMaxOrder; ++n) {
        for (const auto& g : enumerate_connected(n)) {
            ++graphs;
            if (alpha_b(g).value != naive_alpha_b(g)) {
                bad += " " + write_graph6(g);
            }
        }
    }
    const double t = seconds_since(start);
    report(6, bad.empty() && t < kBudgetNaiveSeconds,
           std::to_string(graphs) + " graphs with n<=" + std::to_string(kNaiveMaxOrder) +
               ", reduction equals exhaustive search" + (bad.empty() ? "" : "; differs on" + bad) + "; " +
               std::to_string(t) + " s");
}

// Criterion 7 ---------------------------------------------------------------

void graph6_codec(const SweepTotals& totals) {
    const std::vector<Edge> c4_edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    const bool hand = write_graph6(Graph::complete(4)) == "C~" && write_graph6(Graph::path(4)) == "Ch" &&
                      write_graph6(Graph(4, c4_edges)) == "Cl" && parse_graph6("C~") == Graph::complete(4) &&
                      parse_graph6("Ch") == Graph::path(4) && parse_graph6("Cl") == Graph(4, c4_edges);
    report(7, hand && totals.roundtrip_failures == 0,
           std::to_string(totals.graphs) + " round trips, " + std::to_string(totals.roundtrip_failures) +
               " failures; K4/P4/C4 encodings " + (hand ? "match" : "differ"));
}

}  // namespace

int main() {
    g2_values();
    g0_values();

    const auto start = Clock::now();
    const SweepTotals totals = sweep();
    const double t = seconds_since(start);

    report(3, totals.sandwich_failures == 0 && totals.bound_failures == 0,
           std::to_string(totals.graphs) + " connected graphs with n<=" + std::to_string(kSweepMaxOrder) + ", " +
               std::to_string(totals.bound_failures) + " bound violations, " +
               std::to_string(totals.sandwich_failures) + " sandwich violations; " + std::to_string(t) + " s" +
               (totals.first_bad.empty() ? "" : "; first offender " + totals.first_bad));

    const auto members = small_members();
    report(4,
           totals.equal_large_unrecognized == 0 && totals.recognized_without_equality == 0 && members.bad.empty() &&
               members.built > 0,
           std::to_string(totals.equal_large) + " equality graphs with f_max>=4, " +
               std::to_string(totals.equal_large_unrecognized) + " unrecognized, " +
               std::to_string(totals.recognized_without_equality) + " recognized without equality; " +
               std::to_string(members.built) + " family members with n<=" + std::to_string(kFamilyMaxOrder) +
               " all extremal" + (members.bad.empty() ? "" : " except" + members.bad) + "; k0_anomaly " +
               std::to_string(totals.k0_anomalies) + " (f_max=3 equalities: " +
               std::to_string(totals.equal_at_three) + ")");

    random_extraction(totals);
    naive_agreement();
    graph6_codec(totals);

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass" : "acceptance: FAILURES");
    return failures == 0 ? 0 : 1;
}
