#include "meqsim/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meqsim::oracle {

int ClassicalAnswerer::truth(const meq::MeqQuery& query) const {
    query.validate(static_cast<int>(inputs_.size()),
                   inputs_.empty() ? 0 : inputs_[0].size());
    const BitString lhs = inputs_[static_cast<std::size_t>(query.i)] ^ query.y;
    if (query.form == meq::MeqQuery::Form::Pair) {
        return lhs == (inputs_[static_cast<std::size_t>(query.j)] ^ query.z) ? 1 : 0;
    }
    return lhs == query.z ? 1 : 0;
}

TwinKind twins_test(const Graph& g, int u, int v) {
    if (u == v) {
        throw std::invalid_argument("twins_test: nodes must differ");
    }
    if (g.neighborhood(u) == g.neighborhood(v)) return TwinKind::FalseTwin;
    if (g.closed_neighborhood(u) == g.closed_neighborhood(v)) return TwinKind::TrueTwin;
    return TwinKind::None;
}

bool check_valid_representation(const Graph& g, const std::vector<int>& alive,
                                const std::vector<BitString>& a,
                                const std::vector<BitString>& b) {
    if (alive.empty()) return false;
    // Gaussian elimination over F2 on the alive a-vectors.
    std::vector<BitString> rows;
    for (int v : alive) rows.push_back(a[static_cast<std::size_t>(v)]);
    const int len = rows[0].size();
    std::size_t rank = 0;
    for (int col = 0; col < len && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].bit(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].bit(col)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    if (rank != rows.size()) return false;

    for (int v : alive) {
        BitString expect(a[static_cast<std::size_t>(v)].size());
        for (int u : alive) {
            if (u != v && g.has_edge(u, v)) expect ^= a[static_cast<std::size_t>(u)];
        }
        if (!(expect == b[static_cast<std::size_t>(v)])) return false;
    }
    return true;
}

DhDecomposition dh_test_and_decompose(const Graph& g) {
    const int k = g.node_count();
    std::vector<int> alive(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) alive[static_cast<std::size_t>(v)] = v;

    DhDecomposition out;
    while (alive.size() >= 2) {
        Graph sub = g.restricted(alive);
        auto degree_in = [&](int v) { return sub.degree(v); };

        bool found = false;
        // Pendant first, then false twins, then true twins; lowest (w, u).
        for (std::size_t wi = 0; wi < alive.size() && !found; ++wi) {
            int w = alive[wi];
            if (degree_in(w) != 1) continue;
            for (std::size_t ui = 0; ui < alive.size() && !found; ++ui) {
                int u = alive[ui];
                if (u != w && sub.has_edge(w, u)) {
                    out.steps.push_back({meq::DecompStep::Kind::Pendant, w, u});
                    found = true;
                }
            }
        }
        if (!found) {
            for (std::size_t wi = 0; wi < alive.size() && !found; ++wi) {
                for (std::size_t ui = 0; ui < alive.size() && !found; ++ui) {
                    if (wi == ui) continue;
                    int w = alive[wi];
                    int u = alive[ui];
                    if (sub.neighborhood(w) == sub.neighborhood(u)) {
                        out.steps.push_back({meq::DecompStep::Kind::FalseTwin, w, u});
                        found = true;
                    }
                }
            }
        }
        if (!found) {
            for (std::size_t wi = 0; wi < alive.size() && !found; ++wi) {
                for (std::size_t ui = 0; ui < alive.size() && !found; ++ui) {
                    if (wi == ui) continue;
                    int w = alive[wi];
                    int u = alive[ui];
                    if (sub.closed_neighborhood(w) == sub.closed_neighborhood(u)) {
                        out.steps.push_back({meq::DecompStep::Kind::TrueTwin, w, u});
                        found = true;
                    }
                }
            }
        }
        if (!found) {
            out.accepted = false;
            out.steps.clear();
            return out;
        }
        int removed = out.steps.back().removed;
        alive.erase(std::remove(alive.begin(), alive.end(), removed), alive.end());
    }
    out.accepted = true;
    out.base_node = alive[0];
    return out;
}

meq::Partition group_by_eq(const std::vector<BitString>& inputs) {
    std::vector<std::vector<int>> groups;
    for (int p = 0; p < static_cast<int>(inputs.size()); ++p) {
        bool placed = false;
        for (auto& g : groups) {
            if (inputs[static_cast<std::size_t>(g[0])] == inputs[static_cast<std::size_t>(p)]) {
                g.push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({p});
    }
    return meq::canonical_partition(std::move(groups));
}

bool all_eq(const std::vector<BitString>& inputs) {
    for (const auto& x : inputs) {
        if (!(x == inputs[0])) return false;
    }
    return true;
}

bool exists_eq(const std::vector<BitString>& inputs) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = i + 1; j < inputs.size(); ++j) {
            if (inputs[i] == inputs[j]) return true;
        }
    }
    return false;
}

std::uint64_t frequency_moment(const std::vector<BitString>& inputs, int p) {
    if (p < 0) {
        throw std::invalid_argument("frequency_moment: p must be >= 0");
    }
    std::uint64_t total = 0;
    for (const auto& group : group_by_eq(inputs).groups) {
        std::uint64_t power = 1;
        for (int e = 0; e < p; ++e) power *= group.size();
        total += power;
    }
    return total;
}

bool p3_free(const Graph& g) {
    const int k = g.node_count();
    for (int mid = 0; mid < k; ++mid) {
        for (int a = 0; a < k; ++a) {
            if (a == mid || !g.has_edge(a, mid)) continue;
            for (int b = a + 1; b < k; ++b) {
                if (b == mid || !g.has_edge(b, mid)) continue;
                if (!g.has_edge(a, b)) return false;
            }
        }
    }
    return true;
}

int neighborhood_diversity(const Graph& g) {
    const int k = g.node_count();
    std::vector<int> cls(static_cast<std::size_t>(k), -1);
    int count = 0;
    for (int v = 0; v < k; ++v) {
        bool placed = false;
        for (int u = 0; u < v && !placed; ++u) {
            if (twins_test(g, u, v) != TwinKind::None) {
                cls[static_cast<std::size_t>(v)] = cls[static_cast<std::size_t>(u)];
                placed = true;
            }
        }
        if (!placed) cls[static_cast<std::size_t>(v)] = count++;
    }
    return count;
}

meq::CliqueList isolated_cliques(const Graph& g, int d, bool include_singletons) {
    const int k = g.node_count();
    if (k > 20) {
        throw std::invalid_argument("isolated_cliques: subset scan limited to k <= 20");
    }
    meq::CliqueList out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < k; ++v) {
            if ((mask >> v) & 1) members.push_back(v);
        }
        if (members.size() == 1 && !include_singletons) continue;
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < members.size() && ok; ++b) {
                if (!g.has_edge(members[a], members[b])) ok = false;
            }
        }
        for (std::size_t a = 0; a < members.size() && ok; ++a) {
            int outside = g.degree(members[a]) - static_cast<int>(members.size()) + 1;
            if (outside > d) ok = false;
        }
        if (ok) out.sets.push_back(std::move(members));
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

bool edge_test_check(const Graph& g, int u, int v) {
    if (u == v) {
        throw std::invalid_argument("edge_test_check: nodes must differ");
    }
    int open = hamming_distance(g.neighborhood(u), g.neighborhood(v));
    int closed = hamming_distance(g.closed_neighborhood(u), g.closed_neighborhood(v));
    return g.has_edge(u, v) ? open == closed + 2 : open == closed - 2;
}

Graph gen_dh_graph(int k, Rng& rng) {
    if (k < 1) {
        throw std::invalid_argument("gen_dh_graph: k must be >= 1");
    }
    Graph g(k);
    for (int v = 1; v < k; ++v) {
        int anchor = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(v)));
        switch (uniform_below(rng, 3)) {
        case 0: // pendant
            g.add_edge(v, anchor);
            break;
        case 1: // false twin
            for (int u = 0; u < v; ++u) {
                if (u != anchor && g.has_edge(anchor, u)) g.add_edge(v, u);
            }
            break;
        default: // true twin
            for (int u = 0; u < v; ++u) {
                if (u != anchor && g.has_edge(anchor, u)) g.add_edge(v, u);
            }
            g.add_edge(v, anchor);
            break;
        }
    }
    return g;
}

bool problem_is_graph(Problem problem) {
    switch (problem) {
    case Problem::GroupByEq:
    case Problem::AllEq:
    case Problem::ExistsEq:
    case Problem::FrequencyMoment:
        return false;
    default:
        return true;
    }
}

meq::ProtocolOutput solve(Problem problem, const std::vector<BitString>& inputs,
                          const ProblemOptions& options) {
    switch (problem) {
    case Problem::GroupByEq:
        return group_by_eq(inputs);
    case Problem::AllEq:
        return all_eq(inputs);
    case Problem::ExistsEq:
        return exists_eq(inputs);
    case Problem::FrequencyMoment:
        return frequency_moment(inputs, options.moment_p);
    default:
        throw std::invalid_argument("solve: problem takes a graph input");
    }
}

meq::ProtocolOutput solve(Problem problem, const Graph& g, const ProblemOptions& options) {
    switch (problem) {
    case Problem::P3Freeness:
        return p3_free(g);
    case Problem::NeighborhoodDiversity:
        return static_cast<std::uint64_t>(neighborhood_diversity(g));
    case Problem::DhReconstruct: {
        DhDecomposition d = dh_test_and_decompose(g);
        meq::DhOutput out;
        out.accepted = d.accepted;
        out.decomp = d.steps;
        if (d.accepted) {
            out.base_nodes = {d.base_node};
            out.reconstructed = g; // the right answer to "reconstruct G" is G
        }
        return out;
    }
    case Problem::IsolatedCliques:
        return isolated_cliques(g, options.isolation_d, options.include_singletons);
    default:
        throw std::invalid_argument("solve: problem takes string inputs");
    }
}

} // namespace meqsim::oracle
