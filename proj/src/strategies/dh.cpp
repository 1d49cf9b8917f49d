#include "meqsim/strategies/dh.hpp"

#include <algorithm>
#include <stdexcept>

namespace meqsim::strategies {

Graph reconstruct_from_decomp(int k, const std::vector<meq::DecompStep>& decomp,
                              const std::vector<int>& base_nodes,
                              const std::vector<std::pair<int, int>>& base_edges) {
    Graph g(k);
    std::vector<bool> present(static_cast<std::size_t>(k), false);
    for (int v : base_nodes) {
        present.at(static_cast<std::size_t>(v)) = true;
    }
    for (auto [u, v] : base_edges) {
        if (!present[static_cast<std::size_t>(u)] || !present[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("reconstruct_from_decomp: base edge off the base set");
        }
        g.add_edge(u, v);
    }
    for (auto it = decomp.rbegin(); it != decomp.rend(); ++it) {
        const int w = it->removed;
        const int u = it->anchor;
        if (!present.at(static_cast<std::size_t>(u))) {
            throw std::invalid_argument("reconstruct_from_decomp: anchor not present yet");
        }
        if (present.at(static_cast<std::size_t>(w))) {
            throw std::invalid_argument("reconstruct_from_decomp: node added twice");
        }
        switch (it->kind) {
        case meq::DecompStep::Kind::Pendant:
            g.add_edge(w, u);
            break;
        case meq::DecompStep::Kind::FalseTwin:
            for (int x : g.neighbors(u)) g.add_edge(w, x);
            break;
        case meq::DecompStep::Kind::TrueTwin:
            for (int x : g.neighbors(u)) g.add_edge(w, x);
            g.add_edge(w, u);
            break;
        }
        present[static_cast<std::size_t>(w)] = true;
    }
    return g;
}

long long DhReconstructStrategy::depth_bound(int k) {
    if (k <= 1) return 0;
    // One full round scans k(k-1) pendant pairs plus 2 * C(k,2) twin pairs.
    // For k >= 3 the shrinking rounds fit under 3(k-1)C(k,2); the 2-node
    // register needs all 4 pair tests in the worst case.
    if (k == 2) return 4;
    long long pairs = static_cast<long long>(k) * (k - 1) / 2;
    return 3LL * (k - 1) * pairs;
}

DhReconstructStrategy::DhReconstructStrategy(int k) : k_(k) {
    if (k < 1) {
        throw std::invalid_argument("DhReconstructStrategy: k must be >= 1");
    }
    rep_.alive.resize(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
        rep_.alive[static_cast<std::size_t>(v)] = v;
        rep_.a.push_back(BitString::unit(k, v));
        rep_.c.push_back(BitString(k));
    }
    if (k == 1) {
        done_ = true;
    } else {
        start_round();
    }
}

void DhReconstructStrategy::start_round() {
    phase_ = Phase::Pendant;
    wi_ = 0;
    ui_ = 1;
}

std::optional<meq::MeqQuery> DhReconstructStrategy::next_query() {
    if (done_) return std::nullopt;
    const int w = rep_.alive[wi_];
    const int u = rep_.alive[ui_];
    const auto& a = rep_.a;
    const auto& c = rep_.c;
    switch (phase_) {
    case Phase::Pendant: // b_w == a_u
        return meq::MeqQuery::single(w, c[static_cast<std::size_t>(w)],
                                     a[static_cast<std::size_t>(u)]);
    case Phase::FalseTwin: // b_w == b_u
        return meq::MeqQuery::pair(w, u, c[static_cast<std::size_t>(w)],
                                   c[static_cast<std::size_t>(u)]);
    case Phase::TrueTwin: // b_w ^ a_w == b_u ^ a_u
        return meq::MeqQuery::pair(
            w, u, c[static_cast<std::size_t>(w)] ^ a[static_cast<std::size_t>(w)],
            c[static_cast<std::size_t>(u)] ^ a[static_cast<std::size_t>(u)]);
    }
    return std::nullopt;
}

// Moves to the next scan position; returns false when the whole round is
// exhausted without a hit.
bool DhReconstructStrategy::advance_scan() {
    const std::size_t size = rep_.alive.size();
    if (phase_ == Phase::Pendant) {
        ++ui_;
        if (ui_ == wi_) ++ui_;
        if (ui_ < size) return true;
        ++wi_;
        if (wi_ < size) {
            ui_ = wi_ == 0 ? 1 : 0;
            return true;
        }
        phase_ = Phase::FalseTwin;
        wi_ = 0;
        ui_ = 1;
        return true;
    }
    // Twin tests are symmetric: scan unordered pairs only.
    ++ui_;
    if (ui_ < size) return true;
    ++wi_;
    ui_ = wi_ + 1;
    if (ui_ < size) return true;
    if (phase_ == Phase::FalseTwin) {
        phase_ = Phase::TrueTwin;
        wi_ = 0;
        ui_ = 1;
        return true;
    }
    return false;
}

void DhReconstructStrategy::record_hit() {
    const int w = rep_.alive[wi_];
    const int u = rep_.alive[ui_];
    auto& a = rep_.a;
    auto& c = rep_.c;
    switch (phase_) {
    case Phase::Pendant:
        decomp_.push_back({meq::DecompStep::Kind::Pendant, w, u});
        c[static_cast<std::size_t>(u)] ^= a[static_cast<std::size_t>(w)];
        break;
    case Phase::FalseTwin:
        decomp_.push_back({meq::DecompStep::Kind::FalseTwin, w, u});
        a[static_cast<std::size_t>(u)] ^= a[static_cast<std::size_t>(w)];
        break;
    case Phase::TrueTwin:
        decomp_.push_back({meq::DecompStep::Kind::TrueTwin, w, u});
        a[static_cast<std::size_t>(u)] ^= a[static_cast<std::size_t>(w)];
        c[static_cast<std::size_t>(u)] ^= a[static_cast<std::size_t>(w)];
        break;
    }
    rep_.alive.erase(rep_.alive.begin() + static_cast<std::ptrdiff_t>(wi_));
    if (rep_.alive.size() == 1) {
        done_ = true;
    } else {
        start_round();
    }
}

void DhReconstructStrategy::absorb(int outcome) {
    if (done_) {
        throw std::logic_error("DhReconstructStrategy: absorb after completion");
    }
    if (outcome) {
        record_hit();
        return;
    }
    if (!advance_scan()) {
        rejected_ = true;
        done_ = true;
    }
}

meq::ProtocolOutput DhReconstructStrategy::output() const {
    if (!done_) {
        throw std::logic_error("DhReconstructStrategy: output before completion");
    }
    meq::DhOutput out;
    out.accepted = !rejected_;
    if (out.accepted) {
        out.decomp = decomp_;
        out.base_nodes = rep_.alive;
        out.reconstructed = reconstruct_from_decomp(k_, decomp_, rep_.alive, {});
    }
    return out;
}

} // namespace meqsim::strategies
