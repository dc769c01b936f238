#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bcast/families.hpp"
#include "bcast/harness.hpp"
#include "bcast/solvers.hpp"

namespace bcast {
namespace {

bool equality_at_large_fmax(const Graph& g) {
    const DistanceMatrix d(g);
    const int a = alpha(g).value;
    const auto sol = alpha_b(g, d);
    return std::any_of(sol.optimal_fmax.begin(), sol.optimal_fmax.end(),
                       [&](int f) { return f >= 4 && check_bound(a, sol.value, f).equal; });
}

std::vector<int> sorted_sizes(const FamilyParams& p) {
    std::vector<int> out;
    for (const auto& s : p.strips) {
        out.insert(out.end(), s.layer_sizes.begin(), s.layer_sizes.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FamilyParams> member_grid() {
    std::vector<FamilyParams> out;
    for (int k = 1; k <= 3; ++k) {
        for (int size = 1; size <= 2; ++size) {
            out.push_back(FamilyParams::g2_uniform(k, size, false));
            out.push_back(FamilyParams::g2_uniform(k, size, true));
            auto sparse = FamilyParams::g2_uniform(k, size, false);
            sparse.strips = {StripSpec::sparse(2 * k + 1, size), StripSpec::sparse(2 * k + 1, size)};
            out.push_back(sparse);
            for (int l = 2; l <= 4; ++l) {
                out.push_back(FamilyParams::g0_uniform(k, l, size, size - 1));
                auto g0s = FamilyParams::g0_uniform(k, l, size, 1);
                g0s.strips.assign(static_cast<std::size_t>(l), StripSpec::sparse(2 * k, size));
                out.push_back(g0s);
            }
        }
    }
    return out;
}

TEST(Recognize, Paths) {
    auto p6 = recognize(Graph::path(6));
    ASSERT_TRUE(p6);
    EXPECT_EQ(p6->family, Family::G0);
    EXPECT_EQ(p6->k, 1);
    EXPECT_EQ(p6->l, 2);
    EXPECT_EQ(p6->r_size, 0);

    auto p8 = recognize(Graph::path(8));
    ASSERT_TRUE(p8);
    EXPECT_EQ(p8->family, Family::G2);
    EXPECT_EQ(p8->k, 1);

    EXPECT_FALSE(recognize(Graph::path(4)));
    auto p4 = recognize(Graph::path(4), {true});
    ASSERT_TRUE(p4);
    EXPECT_EQ(p4->k, 0);

    EXPECT_FALSE(recognize(Graph::path(7)));
    EXPECT_FALSE(recognize(Graph::path(5)));
}

TEST(Recognize, NonMembers) {
    EXPECT_FALSE(recognize(Graph::cycle(6)));
    EXPECT_FALSE(recognize(Graph::cycle(8)));
    EXPECT_FALSE(recognize(Graph::complete(5)));
    EXPECT_FALSE(recognize(Graph(1, {})));
}

TEST(Recognize, RoundTripOverGrid) {
    for (const auto& params : member_grid()) {
        auto m = build_family(params);
        auto got = recognize(m.graph);
        ASSERT_TRUE(got) << write_graph6(m.graph);
        EXPECT_EQ(got->family, params.family);
        EXPECT_EQ(got->k, params.k);
        EXPECT_EQ(got->l, params.l);
        EXPECT_EQ(got->r_size, params.r_size);
        EXPECT_EQ(sorted_sizes(*got), sorted_sizes(params));
        auto again = build_family(*got);
        EXPECT_EQ(again.graph.order(), m.graph.order());
        EXPECT_EQ(again.graph.size(), m.graph.size());
        EXPECT_EQ(recognize(again.graph), got);
    }
}

TEST(Recognize, SurvivesRelabeling) {
    std::mt19937_64 rng(7);
    for (const auto& params : member_grid()) {
        auto m = build_family(params);
        std::vector<Vertex> perm(static_cast<std::size_t>(m.graph.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (auto [u, v] : m.graph.edges()) {
            edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        }
        auto got = recognize(Graph(m.graph.order(), edges));
        ASSERT_TRUE(got);
        EXPECT_EQ(got->family, params.family);
        EXPECT_EQ(got->k, params.k);
        EXPECT_EQ(sorted_sizes(*got), sorted_sizes(params));
    }
}

TEST(Recognize, AgreesWithEqualityUnderEdgeAdditions) {
    std::mt19937_64 rng(2024);
    int members = 0;
    int others = 0;
    for (const auto& params : member_grid()) {
        auto m = build_family(params);
        if (m.graph.order() > 24) {
            continue;
        }
        const int n = m.graph.order();
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Edge> missing;
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    if (!m.graph.adjacent(u, v)) {
                        missing.emplace_back(u, v);
                    }
                }
            }
            if (missing.empty()) {
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
            std::array<Edge, 1> extra{missing[pick(rng)]};
            Graph h = m.graph.with_edges(extra);
            const bool recognized = recognize(h).has_value();
            ASSERT_EQ(recognized, equality_at_large_fmax(h)) << write_graph6(h);
            (recognized ? members : others) += 1;
        }
    }
    EXPECT_GT(others, 0);
}

}  // namespace
}  // namespace bcast
