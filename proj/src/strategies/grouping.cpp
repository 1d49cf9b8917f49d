#include "meqsim/strategies/grouping.hpp"

#include <cmath>
#include <stdexcept>

namespace meqsim::strategies {

long long degree_side_bits(int k) {
    int bits = 1;
    while ((1 << bits) < k) ++bits;
    return bits;
}

GroupByEqStrategy::GroupByEqStrategy(int k, int n, bool unit_shift)
    : k_(k), n_(n), unit_shift_(unit_shift) {
    if (k < 1 || n < 1) {
        throw std::invalid_argument("GroupByEqStrategy: k and n must be >= 1");
    }
    if (unit_shift && n != k) {
        throw std::invalid_argument("GroupByEqStrategy: unit shift needs n == k");
    }
    groups_.push_back({0});
}

std::optional<meq::MeqQuery> GroupByEqStrategy::next_query() {
    if (finished()) return std::nullopt;
    int rep = groups_[static_cast<std::size_t>(group_idx_)][0];
    BitString y = unit_shift_ ? BitString::unit(n_, rep) : BitString(n_);
    BitString z = unit_shift_ ? BitString::unit(n_, player_) : BitString(n_);
    return meq::MeqQuery::pair(rep, player_, std::move(y), std::move(z));
}

void GroupByEqStrategy::absorb(int outcome) {
    if (finished()) {
        throw std::logic_error("GroupByEqStrategy: absorb after completion");
    }
    if (outcome) {
        groups_[static_cast<std::size_t>(group_idx_)].push_back(player_);
        ++player_;
        group_idx_ = 0;
        return;
    }
    if (++group_idx_ == static_cast<int>(groups_.size())) {
        groups_.push_back({player_});
        ++player_;
        group_idx_ = 0;
    }
}

meq::ProtocolOutput GroupByEqStrategy::output() const {
    if (!finished()) {
        throw std::logic_error("GroupByEqStrategy: output before completion");
    }
    return meq::canonical_partition(groups_);
}

std::optional<meq::MeqQuery> AllEqStrategy::next_query() {
    if (failed_ || player_ >= k_) return std::nullopt;
    return meq::MeqQuery::pair(0, player_, BitString(n_), BitString(n_));
}

void AllEqStrategy::absorb(int outcome) {
    if (outcome) {
        ++player_;
    } else {
        failed_ = true;
    }
}

meq::ProtocolOutput AllEqStrategy::output() const { return !failed_; }

std::optional<meq::MeqQuery> ExistsEqStrategy::next_query() {
    if (found_) return std::nullopt;
    return inner_.next_query();
}

void ExistsEqStrategy::absorb(int outcome) {
    if (outcome) {
        found_ = true;
        return;
    }
    inner_.absorb(outcome);
}

meq::ProtocolOutput ExistsEqStrategy::output() const { return found_; }

std::uint64_t frequency_moment_value(const meq::Partition& partition, int p) {
    if (p < 0) {
        throw std::invalid_argument("frequency_moment_value: p must be >= 0");
    }
    std::uint64_t total = 0;
    for (const auto& group : partition.groups) {
        std::uint64_t power = 1;
        for (int e = 0; e < p; ++e) power *= group.size();
        total += power;
    }
    return total;
}

meq::ProtocolOutput FrequencyMomentStrategy::output() const {
    return frequency_moment_value(std::get<meq::Partition>(inner_.output()), p_);
}

P3FreenessStrategy::P3FreenessStrategy(const Graph& g)
    : inner_(g.node_count(), g.node_count(), /*unit_shift=*/true) {
    degrees_.reserve(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) {
        degrees_.push_back(g.degree(v));
    }
}

long long P3FreenessStrategy::classical_side_bits() const {
    return static_cast<long long>(degrees_.size()) *
           degree_side_bits(static_cast<int>(degrees_.size()));
}

meq::ProtocolOutput P3FreenessStrategy::output() const {
    const auto& groups = inner_.groups();
    for (const auto& group : groups) {
        for (int v : group) {
            if (static_cast<int>(group.size()) - 1 != degrees_[static_cast<std::size_t>(v)]) {
                return false;
            }
        }
    }
    return true;
}

NeighborhoodDiversityStrategy::NeighborhoodDiversityStrategy(int k) : k_(k) {
    if (k < 1) {
        throw std::invalid_argument("NeighborhoodDiversityStrategy: k must be >= 1");
    }
    groups_.push_back({0});
}

std::optional<meq::MeqQuery> NeighborhoodDiversityStrategy::next_query() {
    if (player_ >= k_) return std::nullopt;
    int rep = groups_[static_cast<std::size_t>(group_idx_)][0];
    if (!closed_phase_) {
        return meq::MeqQuery::pair(rep, player_, BitString(k_), BitString(k_));
    }
    return meq::MeqQuery::pair(rep, player_, BitString::unit(k_, rep),
                               BitString::unit(k_, player_));
}

void NeighborhoodDiversityStrategy::absorb(int outcome) {
    if (player_ >= k_) {
        throw std::logic_error("NeighborhoodDiversityStrategy: absorb after completion");
    }
    if (outcome) {
        groups_[static_cast<std::size_t>(group_idx_)].push_back(player_);
        ++player_;
        group_idx_ = 0;
        closed_phase_ = false;
        return;
    }
    if (!closed_phase_) {
        closed_phase_ = true; // open-neighborhood test failed; try the closed one
        return;
    }
    closed_phase_ = false;
    if (++group_idx_ == static_cast<int>(groups_.size())) {
        groups_.push_back({player_});
        ++player_;
        group_idx_ = 0;
    }
}

meq::ProtocolOutput NeighborhoodDiversityStrategy::output() const {
    if (player_ < k_) {
        throw std::logic_error("NeighborhoodDiversityStrategy: output before completion");
    }
    return static_cast<std::uint64_t>(groups_.size());
}

} // namespace meqsim::strategies
