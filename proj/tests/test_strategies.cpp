#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meqsim/oracle/oracle.hpp"
#include "meqsim/strategies/cliques.hpp"
#include "meqsim/strategies/dh.hpp"
#include "meqsim/strategies/grouping.hpp"

using namespace meqsim;
using namespace meqsim::strategies;
using oracle::ClassicalAnswerer;

namespace {

BitString bits(const char* s) { return BitString::from_string(s); }

struct ClassicalRun {
    meq::ProtocolOutput output;
    long long queries;
};

ClassicalRun run_classical(meq::QueryStrategy& strategy, meq::QueryAnswerer& answerer) {
    long long used = 0;
    while (auto q = strategy.next_query()) {
        ++used;
        REQUIRE(used <= strategy.declared_depth());
        strategy.absorb(answerer.answer(*q).outcome);
    }
    return {strategy.output(), used};
}

std::vector<BitString> all_strings(int n) {
    std::vector<BitString> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        out.push_back(BitString::from_value(n, v));
    }
    return out;
}

// All k-tuples of n-bit strings, as flat indices.
std::vector<std::vector<BitString>> all_tuples(int k, int n) {
    auto alphabet = all_strings(n);
    std::vector<std::vector<BitString>> tuples;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    for (;;) {
        std::vector<BitString> t;
        for (auto i : idx) t.push_back(alphabet[i]);
        tuples.push_back(std::move(t));
        int pos = k - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == alphabet.size()) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return tuples;
}

Graph path(int k) {
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

ClassicalAnswerer graph_answerer(const Graph& g) {
    std::vector<BitString> inputs;
    for (int v = 0; v < g.node_count(); ++v) inputs.push_back(g.neighborhood(v));
    return ClassicalAnswerer(inputs);
}

} // namespace

TEST_CASE("group-by-equality walks representatives") {
    {
        std::vector<BitString> inputs{bits("00"), bits("00"), bits("01")};
        ClassicalAnswerer ans(inputs);
        GroupByEqStrategy s(3, 2);
        auto run = run_classical(s, ans);
        CHECK(run.queries == 2);
        CHECK(std::get<meq::Partition>(run.output).groups ==
              std::vector<std::vector<int>>{{0, 1}, {2}});
    }
    {
        std::vector<BitString> inputs{bits("00"), bits("01"), bits("10")};
        ClassicalAnswerer ans(inputs);
        GroupByEqStrategy s(3, 2);
        auto run = run_classical(s, ans);
        CHECK(run.queries == 3); // exactly C(3,2) on all-distinct inputs
        CHECK(std::get<meq::Partition>(run.output).groups.size() == 3);
    }
    {
        std::vector<BitString> inputs(4, bits("11"));
        ClassicalAnswerer ans(inputs);
        GroupByEqStrategy s(4, 2);
        auto run = run_classical(s, ans);
        CHECK(run.queries == 3);
        CHECK(std::get<meq::Partition>(run.output).groups.size() == 1);
    }
}

TEST_CASE("all-eq and exists-eq exit early") {
    {
        std::vector<BitString> inputs{bits("1"), bits("1"), bits("1")};
        ClassicalAnswerer ans(inputs);
        AllEqStrategy s(3, 1);
        auto run = run_classical(s, ans);
        CHECK(std::get<bool>(run.output));
        CHECK(run.queries == 2);
    }
    {
        std::vector<BitString> inputs{bits("00"), bits("01"), bits("10")};
        ClassicalAnswerer ans(inputs);
        AllEqStrategy s(3, 2);
        auto run = run_classical(s, ans);
        CHECK_FALSE(std::get<bool>(run.output));
        CHECK(run.queries == 1); // first mismatch ends it
    }
    {
        std::vector<BitString> inputs{bits("00"), bits("01"), bits("00")};
        ClassicalAnswerer ans(inputs);
        ExistsEqStrategy s(3, 2);
        auto run = run_classical(s, ans);
        CHECK(std::get<bool>(run.output));
    }
}

TEST_CASE("frequency moments from the partition") {
    meq::Partition parts{{{0, 1}, {2}}};
    CHECK(frequency_moment_value(parts, 2) == 5);
    CHECK(frequency_moment_value(parts, 0) == 2);
    CHECK(frequency_moment_value(parts, 1) == 3);
}

TEST_CASE("p3-freeness via closed-neighborhood grouping") {
    auto accepts = [](const Graph& g) {
        P3FreenessStrategy s(g);
        auto ans = graph_answerer(g);
        return std::get<bool>(run_classical(s, ans).output);
    };
    CHECK(accepts(complete(3)));
    CHECK_FALSE(accepts(path(3)));
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK(accepts(two_edges));
}

TEST_CASE("neighborhood diversity groups twins") {
    auto count = [](const Graph& g) {
        NeighborhoodDiversityStrategy s(g.node_count());
        auto ans = graph_answerer(g);
        return std::get<std::uint64_t>(run_classical(s, ans).output);
    };
    CHECK(count(complete(4)) == 1);
    CHECK(count(path(4)) == 4);
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(count(star) == 2);
}

TEST_CASE("dh reconstruction on canonical graphs") {
    {
        Graph k2 = complete(2);
        DhReconstructStrategy s(2);
        auto ans = graph_answerer(k2);
        auto run = run_classical(s, ans);
        auto out = std::get<meq::DhOutput>(run.output);
        REQUIRE(out.accepted);
        REQUIRE(out.decomp.size() == 1);
        CHECK(out.decomp[0].kind == meq::DecompStep::Kind::Pendant);
        CHECK(*out.reconstructed == k2);
    }
    {
        Graph c5(5);
        for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
        DhReconstructStrategy s(5);
        auto ans = graph_answerer(c5);
        auto run = run_classical(s, ans);
        CHECK_FALSE(std::get<meq::DhOutput>(run.output).accepted);
    }
    {
        Graph p4 = path(4);
        DhReconstructStrategy s(4);
        auto ans = graph_answerer(p4);
        auto run = run_classical(s, ans);
        auto out = std::get<meq::DhOutput>(run.output);
        REQUIRE(out.accepted);
        CHECK(out.decomp.size() == 3);
        CHECK(*out.reconstructed == p4);
    }
}

TEST_CASE("decomp replay") {
    // Pendant 0 of 1 over base {1}: the single edge.
    Graph edge = reconstruct_from_decomp(2, {{meq::DecompStep::Kind::Pendant, 0, 1}}, {1}, {});
    CHECK(edge == complete(2));

    // True twin 0 of 1 over the edge {1,2}: a triangle.
    Graph tri = reconstruct_from_decomp(
        3,
        {{meq::DecompStep::Kind::TrueTwin, 0, 1}, {meq::DecompStep::Kind::Pendant, 1, 2}},
        {2}, {});
    CHECK(tri == complete(3));

    CHECK_THROWS_AS(
        reconstruct_from_decomp(3, {{meq::DecompStep::Kind::Pendant, 0, 1}}, {2}, {}),
        std::invalid_argument);
}

TEST_CASE("dh representation stays valid and tests match graph structure") {
    for (int k = 2; k <= 5; ++k) {
        for (std::uint64_t mask = 0; mask <= Graph::max_edge_mask(k); ++mask) {
            Graph g = Graph::from_edge_mask(k, mask);
            DhReconstructStrategy s(k);
            auto ans = graph_answerer(g);
            long long used = 0;
            while (auto q = s.next_query()) {
                ++used;
                REQUIRE(used <= s.declared_depth());
                s.absorb(ans.answer(*q).outcome);

                const auto& rep = s.representation();
                if (rep.alive.size() < 1 || s.finished()) break;
                // b_v = nu_v ^ c_v over the surviving subgraph.
                std::vector<BitString> b;
                for (int v = 0; v < k; ++v) {
                    Graph sub = g.restricted(rep.alive);
                    b.push_back(sub.neighborhood(v) ^ rep.c[static_cast<std::size_t>(v)]);
                }
                // The c-modifiers are maintained against the ORIGINAL
                // neighborhoods; the representation pairs (a_v, nu_v ^ c_v).
                std::vector<BitString> b_rep;
                for (int v = 0; v < k; ++v) {
                    b_rep.push_back(g.neighborhood(v) ^ rep.c[static_cast<std::size_t>(v)]);
                }
                CHECK(oracle::check_valid_representation(g.restricted(rep.alive), rep.alive,
                                                         rep.a, b_rep));

                // Predicate equivalence on the surviving subgraph.
                Graph sub = g.restricted(rep.alive);
                for (int w : rep.alive) {
                    for (int u : rep.alive) {
                        if (w == u) continue;
                        const auto& a = rep.a;
                        BitString bw = b_rep[static_cast<std::size_t>(w)];
                        BitString bu = b_rep[static_cast<std::size_t>(u)];
                        bool pendant_claim = bw == a[static_cast<std::size_t>(u)];
                        bool pendant_truth =
                            sub.degree(w) == 1 && sub.has_edge(w, u);
                        CHECK(pendant_claim == pendant_truth);
                        if (w < u) {
                            bool false_claim = bw == bu;
                            bool true_claim =
                                (bw ^ a[static_cast<std::size_t>(w)]) ==
                                (bu ^ a[static_cast<std::size_t>(u)]);
                            auto kind = oracle::twins_test(sub, w, u);
                            CHECK(false_claim == (kind == oracle::TwinKind::FalseTwin));
                            CHECK(true_claim == (kind == oracle::TwinKind::TrueTwin));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("strategies agree with the oracle exhaustively (strings, k <= 4, n <= 2)") {
    for (int k = 1; k <= 4; ++k) {
        for (int n = 1; n <= 2; ++n) {
            for (const auto& inputs : all_tuples(k, n)) {
                ClassicalAnswerer ans(inputs);
                {
                    GroupByEqStrategy s(k, n);
                    auto run = run_classical(s, ans);
                    CHECK(std::get<meq::Partition>(run.output) ==
                          std::get<meq::Partition>(
                              oracle::solve(oracle::Problem::GroupByEq, inputs, {})));
                }
                {
                    AllEqStrategy s(k, n);
                    auto run = run_classical(s, ans);
                    CHECK(std::get<bool>(run.output) == oracle::all_eq(inputs));
                }
                {
                    ExistsEqStrategy s(k, n);
                    auto run = run_classical(s, ans);
                    CHECK(std::get<bool>(run.output) == oracle::exists_eq(inputs));
                }
                for (int p = 0; p <= 3; ++p) {
                    FrequencyMomentStrategy s(k, n, p);
                    auto run = run_classical(s, ans);
                    CHECK(std::get<std::uint64_t>(run.output) ==
                          oracle::frequency_moment(inputs, p));
                }
            }
        }
    }
}

TEST_CASE("graph strategies agree with the oracle exhaustively (k <= 4)") {
    for (int k = 1; k <= 4; ++k) {
        for (std::uint64_t mask = 0; mask <= Graph::max_edge_mask(k); ++mask) {
            Graph g = Graph::from_edge_mask(k, mask);
            auto ans = graph_answerer(g);
            {
                P3FreenessStrategy s(g);
                auto run = run_classical(s, ans);
                CHECK(std::get<bool>(run.output) == oracle::p3_free(g));
            }
            {
                NeighborhoodDiversityStrategy s(k);
                auto run = run_classical(s, ans);
                CHECK(static_cast<int>(std::get<std::uint64_t>(run.output)) ==
                      oracle::neighborhood_diversity(g));
            }
            {
                DhReconstructStrategy s(k);
                auto run = run_classical(s, ans);
                auto out = std::get<meq::DhOutput>(run.output);
                CHECK(out.accepted == oracle::dh_test_and_decompose(g).accepted);
                if (out.accepted) {
                    CHECK(*out.reconstructed == g);
                }
            }
        }
    }
}

TEST_CASE("bounded distance queries walk shifts by weight") {
    std::vector<BitString> inputs{bits("0011"), bits("0000")};
    ClassicalAnswerer ans(inputs);
    {
        MhamQuerySequence seq(4, 2, 0, 1, BitString(4), BitString(4));
        while (auto q = seq.next_query()) seq.absorb(ans.answer(*q).outcome);
        CHECK(seq.result() == 2);
        CHECK(seq.queries_used() <= MhamQuerySequence::max_queries(4, 2));
    }
    {
        MhamQuerySequence seq(4, 1, 0, 1, BitString(4), BitString(4));
        while (auto q = seq.next_query()) seq.absorb(ans.answer(*q).outcome);
        CHECK_FALSE(seq.result().has_value());
        CHECK(seq.queries_used() == MhamQuerySequence::max_queries(4, 1)); // 1 + 4
    }
    {
        std::vector<BitString> same{bits("0101"), bits("0101")};
        ClassicalAnswerer ans2(same);
        MhamQuerySequence seq(4, 2, 0, 1, BitString(4), BitString(4));
        while (auto q = seq.next_query()) seq.absorb(ans2.answer(*q).outcome);
        CHECK(seq.result() == 0);
        CHECK(seq.queries_used() == 1);
    }
    CHECK(MhamQuerySequence::max_queries(4, 2) == 11); // 1 + 4 + 6
    CHECK(MhamQuerySequence::max_queries(5, 2) == 16);
}

TEST_CASE("isolated cliques strategy matches the oracle on the paw graph") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    for (int d = 1; d <= 2; ++d) {
        IsolatedCliquesStrategy s(g, d, true);
        auto ans = graph_answerer(g);
        auto run = run_classical(s, ans);
        CHECK(std::get<meq::CliqueList>(run.output) ==
              std::get<meq::CliqueList>(oracle::solve(
                  oracle::Problem::IsolatedCliques, g,
                  oracle::ProblemOptions{2, d, true})));
        for (const auto& usage : s.mham_usage()) {
            CHECK(usage.used <= usage.bound);
        }
    }
}

TEST_CASE("isolated cliques strategy matches the oracle on random graphs") {
    Rng rng = make_stream(51, "cliques-random");
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + static_cast<int>(uniform_below(rng, 4)); // up to 5
        Graph g = Graph::random(k, rng);
        for (int d = 1; d <= 2; ++d) {
            for (bool singles : {true, false}) {
                IsolatedCliquesStrategy s(g, d, singles);
                auto ans = graph_answerer(g);
                auto run = run_classical(s, ans);
                CHECK(std::get<meq::CliqueList>(run.output) ==
                      std::get<meq::CliqueList>(oracle::solve(
                          oracle::Problem::IsolatedCliques, g,
                          oracle::ProblemOptions{2, d, singles})));
            }
        }
    }
}
