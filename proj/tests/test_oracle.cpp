#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meqsim/oracle/oracle.hpp"

using namespace meqsim;
using namespace meqsim::oracle;

namespace {

BitString bits(const char* s) { return BitString::from_string(s); }

Graph path(int k) {
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int k) {
    Graph g = path(k);
    g.add_edge(k - 1, 0);
    return g;
}

Graph complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// Triangle {0,1,2} plus node 3 attached to node 2.
Graph paw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

bool has_induced_p4(const Graph& g) {
    const int k = g.node_count();
    std::vector<int> perm(4);
    for (perm[0] = 0; perm[0] < k; ++perm[0])
        for (perm[1] = 0; perm[1] < k; ++perm[1])
            for (perm[2] = 0; perm[2] < k; ++perm[2])
                for (perm[3] = 0; perm[3] < k; ++perm[3]) {
                    if (perm[0] == perm[1] || perm[0] == perm[2] || perm[0] == perm[3] ||
                        perm[1] == perm[2] || perm[1] == perm[3] || perm[2] == perm[3])
                        continue;
                    if (g.has_edge(perm[0], perm[1]) && g.has_edge(perm[1], perm[2]) &&
                        g.has_edge(perm[2], perm[3]) && !g.has_edge(perm[0], perm[2]) &&
                        !g.has_edge(perm[0], perm[3]) && !g.has_edge(perm[1], perm[3]))
                        return true;
                }
    return false;
}

} // namespace

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(bits("0011"), bits("0000")) == 2);
    CHECK(hamming_distance(bits("0101"), bits("0101")) == 0);
    CHECK(hamming_distance(bits("0000"), bits("1111")) == 4);
}

TEST_CASE("classical answerer evaluates queries directly") {
    ClassicalAnswerer ans({bits("0011"), bits("0110")});
    CHECK(ans.answer(meq::MeqQuery::pair(0, 1, bits("0101"), bits("0000"))).outcome == 1);
    CHECK(ans.answer(meq::MeqQuery::pair(0, 1, bits("0000"), bits("0000"))).outcome == 0);
    CHECK(ans.answer(meq::MeqQuery::single(0, bits("0000"), bits("0011"))).outcome == 1);
    CHECK(ans.answer(meq::MeqQuery::single(1, bits("0110"), bits("0001"))).outcome == 0);
}

TEST_CASE("twin classification") {
    Graph k3 = complete(3);
    CHECK(twins_test(k3, 0, 1) == TwinKind::TrueTwin);
    CHECK(twins_test(k3, 1, 2) == TwinKind::TrueTwin);

    Graph s3 = star(3);
    CHECK(twins_test(s3, 1, 2) == TwinKind::FalseTwin);
    CHECK(twins_test(s3, 0, 1) == TwinKind::None);

    Graph p4 = path(4);
    CHECK(twins_test(p4, 1, 2) == TwinKind::None);
    CHECK_THROWS_AS(twins_test(p4, 1, 1), std::invalid_argument);
}

TEST_CASE("valid representation checker") {
    Rng rng = make_stream(41, "validrep");
    for (int k = 2; k <= 5; ++k) {
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = Graph::random(k, rng);
            std::vector<int> alive;
            std::vector<BitString> a, b;
            for (int v = 0; v < k; ++v) {
                alive.push_back(v);
                a.push_back(BitString::unit(k, v));
                b.push_back(g.neighborhood(v));
            }
            CHECK(check_valid_representation(g, alive, a, b));

            auto dup = a;
            dup[1] = dup[0];
            CHECK_FALSE(check_valid_representation(g, alive, dup, b));

            auto off = b;
            off[0].set_bit(0, !off[0].bit(0));
            CHECK_FALSE(check_valid_representation(g, alive, a, off));
        }
    }
}

TEST_CASE("dh oracle accepts and rejects correctly") {
    CHECK(dh_test_and_decompose(complete(2)).accepted);
    CHECK_FALSE(dh_test_and_decompose(cycle(5)).accepted);
    CHECK(dh_test_and_decompose(path(4)).accepted);

    // Every P4-free graph is distance-hereditary; exhaustive for k <= 5.
    for (int k = 1; k <= 5; ++k) {
        for (std::uint64_t mask = 0; mask <= Graph::max_edge_mask(k); ++mask) {
            Graph g = Graph::from_edge_mask(k, mask);
            if (k >= 4 && has_induced_p4(g)) continue;
            CAPTURE(k);
            CAPTURE(mask);
            CHECK(dh_test_and_decompose(g).accepted);
        }
    }
}

TEST_CASE("grouping problems") {
    std::vector<BitString> inputs{bits("00"), bits("00"), bits("01")};
    auto partition = group_by_eq(inputs);
    CHECK(partition.groups == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK_FALSE(all_eq(inputs));
    CHECK(exists_eq(inputs));
    CHECK(all_eq({bits("1"), bits("1"), bits("1")}));

    CHECK(frequency_moment(inputs, 2) == 5);
    CHECK(frequency_moment(inputs, 0) == 2);
    CHECK(frequency_moment(inputs, 1) == 3);
}

TEST_CASE("p3 freeness and neighborhood diversity") {
    CHECK(p3_free(complete(3)));
    CHECK_FALSE(p3_free(path(3)));
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK(p3_free(two_edges));

    CHECK(neighborhood_diversity(complete(4)) == 1);
    CHECK(neighborhood_diversity(path(4)) == 4);
    CHECK(neighborhood_diversity(star(3)) == 2);
}

TEST_CASE("isolated cliques on the paw graph") {
    Graph g = paw();
    auto d1 = isolated_cliques(g, 1, true);
    bool has_triangle = false;
    bool has_pair = false;
    for (const auto& s : d1.sets) {
        if (s == std::vector<int>{0, 1, 2}) has_triangle = true;
        if (s == std::vector<int>{2, 3}) has_pair = true;
    }
    CHECK(has_triangle);
    CHECK_FALSE(has_pair); // node 2 has two edges leaving {2,3}

    auto d2 = isolated_cliques(g, 2, true);
    has_triangle = false;
    has_pair = false;
    for (const auto& s : d2.sets) {
        if (s == std::vector<int>{0, 1, 2}) has_triangle = true;
        if (s == std::vector<int>{2, 3}) has_pair = true;
    }
    CHECK(has_triangle);
    CHECK(has_pair);

    // Singletons obey the degree rule, and the flag removes them.
    auto with_singles = isolated_cliques(g, 1, true);
    for (const auto& s : with_singles.sets) {
        if (s.size() == 1) CHECK(g.degree(s[0]) <= 1);
    }
    auto without = isolated_cliques(g, 1, false);
    for (const auto& s : without.sets) CHECK(s.size() >= 2);
}

TEST_CASE("listed sets satisfy the 2d distance bound") {
    for (int k = 2; k <= 5; ++k) {
        for (std::uint64_t mask = 0; mask <= Graph::max_edge_mask(k); ++mask) {
            Graph g = Graph::from_edge_mask(k, mask);
            for (int d = 1; d <= 2; ++d) {
                for (const auto& s : isolated_cliques(g, d, true).sets) {
                    for (std::size_t a = 0; a < s.size(); ++a) {
                        for (std::size_t b = a + 1; b < s.size(); ++b) {
                            int dist = hamming_distance(g.closed_neighborhood(s[a]),
                                                        g.closed_neighborhood(s[b]));
                            CHECK(dist <= 2 * d);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("edge test identity holds for every pair of every small graph") {
    for (int k = 2; k <= 5; ++k) {
        for (std::uint64_t mask = 0; mask <= Graph::max_edge_mask(k); ++mask) {
            Graph g = Graph::from_edge_mask(k, mask);
            for (int u = 0; u < k; ++u) {
                for (int v = u + 1; v < k; ++v) {
                    CHECK(edge_test_check(g, u, v));
                }
            }
        }
    }
}

TEST_CASE("generated dh graphs are always accepted") {
    Rng rng = make_stream(42, "gen-dh");
    for (int k = 1; k <= 8; ++k) {
        for (int trial = 0; trial < 25; ++trial) {
            Graph g = gen_dh_graph(k, rng);
            CHECK(dh_test_and_decompose(g).accepted);
        }
    }
}
