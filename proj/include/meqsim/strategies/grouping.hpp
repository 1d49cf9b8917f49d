#pragma once

#include <memory>

#include "meqsim/graph.hpp"
#include "meqsim/meq/strategy.hpp"

namespace meqsim::strategies {

// Bits needed to ship one node degree classically.
long long degree_side_bits(int k);

// Groups players by equality of their (optionally unit-shifted) inputs.
// Each player is compared against one representative per existing group, in
// group-creation order, skipping comparisons implied by earlier answers;
// the all-distinct path is the longest with exactly k(k-1)/2 queries.
class GroupByEqStrategy : public meq::QueryStrategy {
public:
    // unit_shift: compare x_u ^ e_u against x_v ^ e_v instead of x_u, x_v
    // (the closed-neighborhood form used by the clique-partition test).
    GroupByEqStrategy(int k, int n, bool unit_shift = false);

    long long declared_depth() const override {
        return static_cast<long long>(k_) * (k_ - 1) / 2;
    }
    std::optional<meq::MeqQuery> next_query() override;
    void absorb(int outcome) override;
    meq::ProtocolOutput output() const override;

    const std::vector<std::vector<int>>& groups() const { return groups_; }
    bool finished() const { return player_ >= k_; }

private:
    int k_;
    int n_;
    bool unit_shift_;
    std::vector<std::vector<int>> groups_;
    int player_ = 1;    // next player to place
    int group_idx_ = 0; // group representative currently being tested
};

class AllEqStrategy : public meq::QueryStrategy {
public:
    AllEqStrategy(int k, int n) : k_(k), n_(n) {}

    long long declared_depth() const override { return k_ > 1 ? k_ - 1 : 0; }
    std::optional<meq::MeqQuery> next_query() override;
    void absorb(int outcome) override;
    meq::ProtocolOutput output() const override;

private:
    int k_;
    int n_;
    int player_ = 1;
    bool failed_ = false;
};

class ExistsEqStrategy : public meq::QueryStrategy {
public:
    ExistsEqStrategy(int k, int n) : inner_(k, n) {}

    long long declared_depth() const override { return inner_.declared_depth(); }
    std::optional<meq::MeqQuery> next_query() override;
    void absorb(int outcome) override;
    meq::ProtocolOutput output() const override;

private:
    GroupByEqStrategy inner_;
    bool found_ = false;
};

// Sum of |group|^p over the grouping's parts; p = 0 counts distinct inputs.
std::uint64_t frequency_moment_value(const meq::Partition& partition, int p);

class FrequencyMomentStrategy : public meq::QueryStrategy {
public:
    FrequencyMomentStrategy(int k, int n, int p) : inner_(k, n), p_(p) {}

    long long declared_depth() const override { return inner_.declared_depth(); }
    std::optional<meq::MeqQuery> next_query() override { return inner_.next_query(); }
    void absorb(int outcome) override { inner_.absorb(outcome); }
    meq::ProtocolOutput output() const override;

private:
    GroupByEqStrategy inner_;
    int p_;
};

// Accepts iff the graph is a disjoint union of cliques: groups nodes by
// closed neighborhood, then checks each node's group size against its
// degree (shipped classically).
class P3FreenessStrategy : public meq::QueryStrategy {
public:
    explicit P3FreenessStrategy(const Graph& g);

    long long declared_depth() const override { return inner_.declared_depth(); }
    long long classical_side_bits() const override;
    std::optional<meq::MeqQuery> next_query() override { return inner_.next_query(); }
    void absorb(int outcome) override { inner_.absorb(outcome); }
    meq::ProtocolOutput output() const override;

private:
    GroupByEqStrategy inner_;
    std::vector<int> degrees_;
};

// Counts twin classes. Candidate pairs get up to two queries: equal
// neighborhoods, then equal closed neighborhoods.
class NeighborhoodDiversityStrategy : public meq::QueryStrategy {
public:
    explicit NeighborhoodDiversityStrategy(int k);

    long long declared_depth() const override {
        return static_cast<long long>(k_) * (k_ - 1);
    }
    std::optional<meq::MeqQuery> next_query() override;
    void absorb(int outcome) override;
    meq::ProtocolOutput output() const override;

private:
    int k_;
    std::vector<std::vector<int>> groups_;
    int player_ = 1;
    int group_idx_ = 0;
    bool closed_phase_ = false; // false: open-neighborhood test next
};

} // namespace meqsim::strategies
