#pragma once

#include "meqsim/graph.hpp"
#include "meqsim/meq/strategy.hpp"

namespace meqsim::strategies {

// Referee-side bookkeeping for the reconstruct-or-reject protocol: for each
// alive node v, an explicit vector a_v and a modifier c_v standing in for
// b_v = nu_v ^ c_v. The pair (a_v, b_v) stays a valid representation of the
// surviving induced subgraph after every update.
struct Representation {
    std::vector<int> alive;
    std::vector<BitString> a;
    std::vector<BitString> c;
};

// Rebuilds a graph by replaying an elimination order backwards from a base
// node set (with the edges among base nodes given explicitly). Throws if a
// step references a node that is not present yet.
Graph reconstruct_from_decomp(int k, const std::vector<meq::DecompStep>& decomp,
                              const std::vector<int>& base_nodes,
                              const std::vector<std::pair<int, int>>& base_edges);

// Reconstructs a distance-hereditary graph or rejects. Each round scans for
// a pendant node over ordered pairs (single-player queries against a_u),
// then false twins, then true twins over unordered pairs; a hit removes the
// node, records the step, and updates the representation.
class DhReconstructStrategy : public meq::QueryStrategy {
public:
    explicit DhReconstructStrategy(int k);

    static long long depth_bound(int k);
    long long declared_depth() const override { return depth_bound(k_); }

    std::optional<meq::MeqQuery> next_query() override;
    void absorb(int outcome) override;
    meq::ProtocolOutput output() const override;

    const Representation& representation() const { return rep_; }
    bool finished() const { return done_; }

private:
    enum class Phase { Pendant, FalseTwin, TrueTwin };

    bool advance_scan();
    void start_round();
    void record_hit();

    int k_;
    Representation rep_;
    Phase phase_ = Phase::Pendant;
    std::size_t wi_ = 0;
    std::size_t ui_ = 0;
    std::vector<meq::DecompStep> decomp_;
    bool done_ = false;
    bool rejected_ = false;
};

} // namespace meqsim::strategies
