#pragma once

#include <optional>
#include <vector>

#include "meqsim/bits.hpp"

namespace meqsim::meq {

// One modified equality query. The pair form asks whether
// x_i ^ y == x_j ^ z for the referee-known modifiers y, z; the single form
// asks whether x_i ^ y == z for a referee-known target z.
struct MeqQuery {
    enum class Form { Pair, Single };

    Form form = Form::Pair;
    int i = -1;
    int j = -1; // unused in the single form
    BitString y;
    BitString z;

    static MeqQuery pair(int i, int j, BitString y, BitString z);
    static MeqQuery single(int i, BitString y, BitString z);

    void validate(int k, int n) const;
    bool operator==(const MeqQuery& other) const = default;
};

struct TranscriptEntry {
    MeqQuery query;
    int outcome = 0;
    double conditional_probability = 1.0;
    // Probability of this outcome had the query been the first measurement
    // on a fresh register; filled in when a certificate is requested.
    std::optional<double> initial_state_probability;
};

using Transcript = std::vector<TranscriptEntry>;

// Product of the conditional probabilities: the exact probability of this
// outcome sequence.
double transcript_probability(const Transcript& transcript);

} // namespace meqsim::meq
