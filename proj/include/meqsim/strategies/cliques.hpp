#pragma once

#include <optional>

#include "meqsim/graph.hpp"
#include "meqsim/meq/strategy.hpp"

namespace meqsim::strategies {

// Bounded Hamming-distance sub-strategy: asks whether x_i ^ y and x_j ^ z
// are within distance d by testing shifts e of increasing weight
// (positions in lexicographic order inside a weight class). Returns the
// distance on the first hit, or bottom (nullopt) after weight d.
class MhamQuerySequence {
public:
    MhamQuerySequence(int n, int d, int i, int j, BitString y, BitString z);

    std::optional<meq::MeqQuery> next_query();
    void absorb(int outcome);

    bool finished() const { return finished_; }
    // Distance if found, nullopt for bottom. Valid once finished.
    std::optional<int> result() const;
    long long queries_used() const { return used_; }

    // sum_{c=0}^{min(d,n)} C(n, c)
    static long long max_queries(int n, int d);

private:
    bool next_shift();

    int n_;
    int d_;
    int i_;
    int j_;
    BitString y_;
    BitString z_;
    int weight_ = 0;
    std::vector<int> positions_; // current combination, ascending
    bool finished_ = false;
    std::optional<int> result_;
    long long used_ = 0;
    bool pending_ = false;
};

// Lists all node sets that the pairwise bounded-distance data certifies as
// cliques with at most d edges per node leaving the set. Runs both distance
// families over all pairs, then scans subsets classically.
class IsolatedCliquesStrategy : public meq::QueryStrategy {
public:
    IsolatedCliquesStrategy(const Graph& g, int d, bool include_singletons = true);

    long long declared_depth() const override;
    long long classical_side_bits() const override;
    std::optional<meq::MeqQuery> next_query() override;
    void absorb(int outcome) override;
    meq::ProtocolOutput output() const override;

    // Observed query count and bound per bounded-distance subcomputation.
    struct MhamUsage {
        long long used;
        long long bound;
    };
    const std::vector<MhamUsage>& mham_usage() const { return usage_; }

private:
    void open_next_sequence();

    int k_;
    int d_;
    bool include_singletons_;
    std::vector<int> degrees_;
    std::vector<std::pair<int, int>> pairs_;
    std::size_t pair_idx_ = 0;
    bool closed_family_ = false; // false: distance of open neighborhoods next
    std::optional<MhamQuerySequence> current_;
    std::vector<std::optional<int>> open_dist_;   // per pair, 2d+2 budget
    std::vector<std::optional<int>> closed_dist_; // per pair, 2d budget
    std::vector<MhamUsage> usage_;
    bool done_ = false;
};

} // namespace meqsim::strategies
