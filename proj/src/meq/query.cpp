#include "meqsim/meq/query.hpp"

#include <stdexcept>

namespace meqsim::meq {

MeqQuery MeqQuery::pair(int i, int j, BitString y, BitString z) {
    MeqQuery q;
    q.form = Form::Pair;
    q.i = i;
    q.j = j;
    q.y = std::move(y);
    q.z = std::move(z);
    return q;
}

MeqQuery MeqQuery::single(int i, BitString y, BitString z) {
    MeqQuery q;
    q.form = Form::Single;
    q.i = i;
    q.y = std::move(y);
    q.z = std::move(z);
    return q;
}

void MeqQuery::validate(int k, int n) const {
    if (i < 0 || i >= k) {
        throw std::invalid_argument("MeqQuery: player index i out of range");
    }
    if (form == Form::Pair) {
        if (j < 0 || j >= k) {
            throw std::invalid_argument("MeqQuery: player index j out of range");
        }
        if (i == j) {
            throw std::invalid_argument("MeqQuery: pair query needs distinct players");
        }
    }
    if (y.size() != n || z.size() != n) {
        throw std::invalid_argument("MeqQuery: modifier length != n");
    }
}

double transcript_probability(const Transcript& transcript) {
    double p = 1.0;
    for (const auto& e : transcript) {
        p *= e.conditional_probability;
    }
    return p;
}

} // namespace meqsim::meq
