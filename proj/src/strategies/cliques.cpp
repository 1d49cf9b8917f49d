#include "meqsim/strategies/cliques.hpp"

#include "meqsim/strategies/grouping.hpp"

#include <algorithm>
#include <stdexcept>

namespace meqsim::strategies {

MhamQuerySequence::MhamQuerySequence(int n, int d, int i, int j, BitString y, BitString z)
    : n_(n), d_(std::min(d, n)), i_(i), j_(j), y_(std::move(y)), z_(std::move(z)) {
    if (n < 1 || d < 0) {
        throw std::invalid_argument("MhamQuerySequence: bad parameters");
    }
}

long long MhamQuerySequence::max_queries(int n, int d) {
    long long total = 0;
    long long binom = 1; // C(n, 0)
    for (int c = 0; c <= std::min(d, n); ++c) {
        total += binom;
        binom = binom * (n - c) / (c + 1);
    }
    return total;
}

// Advances to the next shift: within a weight class, combinations of set
// positions in lexicographic order; then the next weight.
bool MhamQuerySequence::next_shift() {
    if (weight_ == 0) {
        if (d_ == 0) return false;
        weight_ = 1;
        positions_ = {0};
        return true;
    }
    int c = weight_;
    int idx = c - 1;
    while (idx >= 0 && positions_[static_cast<std::size_t>(idx)] == n_ - c + idx) {
        --idx;
    }
    if (idx >= 0) {
        ++positions_[static_cast<std::size_t>(idx)];
        for (int t = idx + 1; t < c; ++t) {
            positions_[static_cast<std::size_t>(t)] =
                positions_[static_cast<std::size_t>(t - 1)] + 1;
        }
        return true;
    }
    if (weight_ == d_) return false;
    ++weight_;
    positions_.resize(static_cast<std::size_t>(weight_));
    for (int t = 0; t < weight_; ++t) positions_[static_cast<std::size_t>(t)] = t;
    return true;
}

std::optional<meq::MeqQuery> MhamQuerySequence::next_query() {
    if (finished_) return std::nullopt;
    if (pending_) {
        throw std::logic_error("MhamQuerySequence: outcome not absorbed");
    }
    pending_ = true;
    ++used_;
    BitString shift(n_);
    for (int p : positions_) shift.set_bit(p, true);
    return meq::MeqQuery::pair(i_, j_, y_ ^ shift, z_);
}

void MhamQuerySequence::absorb(int outcome) {
    if (!pending_) {
        throw std::logic_error("MhamQuerySequence: no outstanding query");
    }
    pending_ = false;
    if (outcome) {
        result_ = weight_;
        finished_ = true;
        return;
    }
    if (!next_shift()) {
        finished_ = true; // bottom
    }
}

std::optional<int> MhamQuerySequence::result() const {
    if (!finished_) {
        throw std::logic_error("MhamQuerySequence: result before completion");
    }
    return result_;
}

IsolatedCliquesStrategy::IsolatedCliquesStrategy(const Graph& g, int d,
                                                 bool include_singletons)
    : k_(g.node_count()), d_(d), include_singletons_(include_singletons) {
    if (d < 1) {
        throw std::invalid_argument("IsolatedCliquesStrategy: d must be >= 1");
    }
    if (k_ > 20) {
        throw std::invalid_argument("IsolatedCliquesStrategy: subset scan limited to k <= 20");
    }
    for (int v = 0; v < k_; ++v) degrees_.push_back(g.degree(v));
    for (int u = 0; u < k_; ++u) {
        for (int v = u + 1; v < k_; ++v) pairs_.emplace_back(u, v);
    }
    open_dist_.resize(pairs_.size());
    closed_dist_.resize(pairs_.size());
    if (pairs_.empty()) {
        done_ = true;
    } else {
        open_next_sequence();
    }
}

long long IsolatedCliquesStrategy::declared_depth() const {
    long long per_pair = MhamQuerySequence::max_queries(k_, 2 * d_ + 2) +
                         MhamQuerySequence::max_queries(k_, 2 * d_);
    return static_cast<long long>(pairs_.size()) * per_pair;
}

long long IsolatedCliquesStrategy::classical_side_bits() const {
    return static_cast<long long>(k_) * degree_side_bits(k_);
}

void IsolatedCliquesStrategy::open_next_sequence() {
    auto [u, v] = pairs_[pair_idx_];
    if (!closed_family_) {
        current_.emplace(k_, 2 * d_ + 2, u, v, BitString(k_), BitString(k_));
    } else {
        current_.emplace(k_, 2 * d_, u, v, BitString::unit(k_, u), BitString::unit(k_, v));
    }
}

std::optional<meq::MeqQuery> IsolatedCliquesStrategy::next_query() {
    if (done_) return std::nullopt;
    return current_->next_query();
}

void IsolatedCliquesStrategy::absorb(int outcome) {
    if (done_) {
        throw std::logic_error("IsolatedCliquesStrategy: absorb after completion");
    }
    current_->absorb(outcome);
    if (!current_->finished()) return;

    auto bound = MhamQuerySequence::max_queries(k_, closed_family_ ? 2 * d_ : 2 * d_ + 2);
    usage_.push_back({current_->queries_used(), bound});
    if (!closed_family_) {
        open_dist_[pair_idx_] = current_->result();
        closed_family_ = true;
        open_next_sequence();
        return;
    }
    closed_dist_[pair_idx_] = current_->result();
    closed_family_ = false;
    if (++pair_idx_ == pairs_.size()) {
        done_ = true;
        current_.reset();
        return;
    }
    open_next_sequence();
}

meq::ProtocolOutput IsolatedCliquesStrategy::output() const {
    if (!done_) {
        throw std::logic_error("IsolatedCliquesStrategy: output before completion");
    }
    auto pair_index = [&](int u, int v) {
        // pairs_ is (0,1..k-1), (1,2..k-1), ...
        int before = u * (2 * k_ - u - 1) / 2;
        return static_cast<std::size_t>(before + (v - u - 1));
    };

    meq::CliqueList out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k_); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < k_; ++v) {
            if ((mask >> v) & 1) members.push_back(v);
        }
        if (members.size() == 1 && !include_singletons_) continue;
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < members.size() && ok; ++b) {
                auto idx = pair_index(members[a], members[b]);
                const auto& closed = closed_dist_[idx];
                const auto& open = open_dist_[idx];
                // Clique membership needs the closed distance known and the
                // open distance exactly two above it.
                if (!closed.has_value() || !open.has_value() ||
                    *open != *closed + 2) {
                    ok = false;
                }
            }
        }
        for (std::size_t a = 0; a < members.size() && ok; ++a) {
            if (degrees_[static_cast<std::size_t>(members[a])] >
                static_cast<int>(members.size()) + d_ - 1) {
                ok = false;
            }
        }
        if (ok) out.sets.push_back(std::move(members));
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

} // namespace meqsim::strategies
