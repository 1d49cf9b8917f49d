#pragma once

#include <cstdint>
#include <vector>

#include "meqsim/graph.hpp"
#include "meqsim/meq/answerer.hpp"
#include "meqsim/meq/strategy.hpp"

namespace meqsim::oracle {

// Answers queries by direct evaluation on the raw inputs; the ground truth
// for every equivalence test and for exact-path runs. Deliberately shares
// no logic with the strategies module.
class ClassicalAnswerer : public meq::QueryAnswerer {
public:
    explicit ClassicalAnswerer(std::vector<BitString> inputs)
        : inputs_(std::move(inputs)) {}

    int truth(const meq::MeqQuery& query) const;

    meq::QueryResult answer(const meq::MeqQuery& query) override {
        return {truth(query), 1.0};
    }

private:
    std::vector<BitString> inputs_;
};

enum class TwinKind { None, FalseTwin, TrueTwin };
TwinKind twins_test(const Graph& g, int u, int v);

// Checks that {a_v} for the alive nodes are linearly independent over F2
// and that each b_v is the XOR of the a-vectors of v's alive neighbors.
bool check_valid_representation(const Graph& g, const std::vector<int>& alive,
                                const std::vector<BitString>& a,
                                const std::vector<BitString>& b);

struct DhDecomposition {
    bool accepted = false;
    std::vector<meq::DecompStep> steps;
    int base_node = -1;
};

// Greedy elimination directly on the adjacency structure, lowest-index
// (kind-major) choice each round.
DhDecomposition dh_test_and_decompose(const Graph& g);

meq::Partition group_by_eq(const std::vector<BitString>& inputs);
bool all_eq(const std::vector<BitString>& inputs);
bool exists_eq(const std::vector<BitString>& inputs);
std::uint64_t frequency_moment(const std::vector<BitString>& inputs, int p);

bool p3_free(const Graph& g);
int neighborhood_diversity(const Graph& g);
meq::CliqueList isolated_cliques(const Graph& g, int d, bool include_singletons);

// The +-2 identity between open- and closed-neighborhood Hamming distances
// that encodes adjacency.
bool edge_test_check(const Graph& g, int u, int v);

// Random graph built by attaching each new node as a pendant, false twin,
// or true twin of an existing node; always accepted by
// dh_test_and_decompose.
Graph gen_dh_graph(int k, Rng& rng);

enum class Problem {
    GroupByEq,
    AllEq,
    ExistsEq,
    FrequencyMoment,
    P3Freeness,
    NeighborhoodDiversity,
    DhReconstruct,
    IsolatedCliques,
};

bool problem_is_graph(Problem problem);

struct ProblemOptions {
    int moment_p = 2;             // frequency moment order
    int isolation_d = 1;          // isolated-clique slack
    bool include_singletons = true;
};

// Direct computation of the problem answer, bypassing queries entirely.
meq::ProtocolOutput solve(Problem problem, const std::vector<BitString>& inputs,
                          const ProblemOptions& options);
meq::ProtocolOutput solve(Problem problem, const Graph& g, const ProblemOptions& options);

} // namespace meqsim::oracle
