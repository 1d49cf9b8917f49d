#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "meqsim/graph.hpp"
#include "meqsim/meq/query.hpp"

namespace meqsim::meq {

// Grouping of player indices; each group is sorted and groups are ordered
// by smallest member.
struct Partition {
    std::vector<std::vector<int>> groups;
    bool operator==(const Partition& other) const = default;
};

Partition canonical_partition(std::vector<std::vector<int>> groups);

struct DecompStep {
    enum class Kind { Pendant, FalseTwin, TrueTwin };
    Kind kind;
    int removed; // w
    int anchor;  // u
    bool operator==(const DecompStep& other) const = default;
};

// Result of the reconstruct-or-reject protocol: on acceptance, the
// twin/pendant elimination order plus the graph rebuilt from it.
struct DhOutput {
    bool accepted = false;
    std::vector<DecompStep> decomp;
    std::vector<int> base_nodes;
    std::optional<Graph> reconstructed;
    bool operator==(const DhOutput& other) const = default;
};

// All listed node sets, each sorted; the list is sorted lexicographically.
struct CliqueList {
    std::vector<std::vector<int>> sets;
    bool operator==(const CliqueList& other) const = default;
};

using ProtocolOutput = std::variant<bool, std::uint64_t, Partition, DhOutput, CliqueList>;

// An adaptive query strategy: an implicit decision tree walked one query at
// a time. Callers alternate next_query() / absorb(outcome) until
// next_query() returns nullopt, then read output(). A strategy never issues
// more than declared_depth() queries on any outcome sequence.
class QueryStrategy {
public:
    virtual ~QueryStrategy() = default;

    virtual long long declared_depth() const = 0;

    // Classical side-channel bits shipped alongside the quantum messages
    // (e.g. node degrees).
    virtual long long classical_side_bits() const { return 0; }

    virtual std::optional<MeqQuery> next_query() = 0;
    virtual void absorb(int outcome) = 0;
    virtual ProtocolOutput output() const = 0;
};

} // namespace meqsim::meq
