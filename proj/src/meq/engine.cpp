#include "meqsim/meq/engine.hpp"

#include <stdexcept>

#include "meqsim/fingerprint/fingerprint.hpp"

namespace meqsim::meq {

std::string GlobalRegister::player_copy_name(int player, int copy) {
    return "p" + std::to_string(player) + "c" + std::to_string(copy);
}

std::string GlobalRegister::referee_copy_name(int copy) {
    return "refc" + std::to_string(copy);
}

GlobalRegister::GlobalRegister(const ProtocolParams& params, std::vector<BitString> inputs)
    : params_(params), inputs_(std::move(inputs)),
      reg_(1, params.caps) { // placeholder; rebuilt below once the layout is known
    params_.validate();
    if (static_cast<int>(inputs_.size()) != params_.k) {
        throw std::invalid_argument("GlobalRegister: expected one input per player");
    }
    for (const BitString& x : inputs_) {
        if (x.size() != params_.n) {
            throw std::invalid_argument("GlobalRegister: input length != n");
        }
    }

    const int w = params_.code.copy_width();
    const int t = params_.copies;
    for (int player = 0; player < params_.k; ++player) {
        for (int copy = 0; copy < t; ++copy) {
            layout_.append_block(player_copy_name(player, copy), w);
        }
    }
    for (int copy = 0; copy < t; ++copy) {
        layout_.append_block(referee_copy_name(copy), w);
    }
    for (int copy = 0; copy < t; ++copy) {
        layout_.append_block("s" + std::to_string(copy), 1);
    }
    layout_.append_block("s", 1);

    reg_ = qsim::FactoredRegister(layout_.num_qubits(), params_.caps);
    for (int player = 0; player < params_.k; ++player) {
        for (int copy = 0; copy < t; ++copy) {
            reg_.apply(fingerprint::prep_circuit(
                params_.code, inputs_[static_cast<std::size_t>(player)],
                player_copy(player, copy)));
        }
    }
}

qsim::Block GlobalRegister::player_copy(int player, int copy) const {
    return layout_.block(player_copy_name(player, copy));
}

qsim::Block GlobalRegister::referee_copy(int copy) const {
    return layout_.block(referee_copy_name(copy));
}

int GlobalRegister::swap_ancilla(int copy) const {
    return layout_.block("s" + std::to_string(copy)).offset;
}

int GlobalRegister::accept_qubit() const { return layout_.block("s").offset; }

qsim::Circuit build_query_circuit(const ProtocolParams& params,
                                  const qsim::RegisterLayout& layout,
                                  const MeqQuery& query) {
    query.validate(params.k, params.n);
    const int t = params.copies;
    const auto& code = params.code;

    auto player_block = [&](int player, int copy) {
        return layout.block(GlobalRegister::player_copy_name(player, copy));
    };
    auto referee_block = [&](int copy) {
        return layout.block(GlobalRegister::referee_copy_name(copy));
    };
    auto ancilla = [&](int copy) {
        return layout.block("s" + std::to_string(copy)).offset;
    };
    const int accept = layout.block("s").offset;

    qsim::Circuit u;

    if (query.form == MeqQuery::Form::Single) {
        // Synthesize the target fingerprint on each referee copy.
        for (int r = 0; r < t; ++r) {
            auto prep = fingerprint::prep_circuit(code, query.z, referee_block(r));
            u.insert(u.end(), prep.begin(), prep.end());
        }
    }

    // Modifier phases; identity modifiers emit no gates.
    if (!query.y.is_zero()) {
        for (int r = 0; r < t; ++r) {
            u.push_back(fingerprint::modifier_gate(code, query.y, player_block(query.i, r)));
        }
    }
    if (query.form == MeqQuery::Form::Pair && !query.z.is_zero()) {
        for (int r = 0; r < t; ++r) {
            u.push_back(fingerprint::modifier_gate(code, query.z, player_block(query.j, r)));
        }
    }

    // One swap test per copy, outcome bit left in s_r (1 = "equal-ish").
    for (int r = 0; r < t; ++r) {
        qsim::Block a = player_block(query.i, r);
        qsim::Block b = query.form == MeqQuery::Form::Pair ? player_block(query.j, r)
                                                           : referee_block(r);
        int s_r = ancilla(r);
        u.push_back(qsim::Gate::hadamard(s_r));
        u.push_back(qsim::Gate::cswap_block(s_r, a.offset, b.offset, a.width));
        u.push_back(qsim::Gate::hadamard(s_r));
        u.push_back(qsim::Gate::pauli_x(s_r));
    }

    // AND of s_1..s_t into s; a single copy reduces to a CNOT.
    if (t == 1) {
        u.push_back(qsim::Gate::cnot(ancilla(0), accept));
    } else {
        std::vector<int> controls;
        controls.reserve(static_cast<std::size_t>(t));
        for (int r = 0; r < t; ++r) controls.push_back(ancilla(r));
        u.push_back(qsim::Gate::mcx(std::move(controls), accept));
    }
    return u;
}

QueryResult execute_query(GlobalRegister& reg, const MeqQuery& query, Rng& rng) {
    auto u = build_query_circuit(reg.params(), reg.layout(), query);
    auto out = reg.state().projective_2outcome(u, reg.accept_qubit(), rng);
    return {out.bit, out.probability};
}

QueryResult execute_query_forced(GlobalRegister& reg, const MeqQuery& query,
                                 int expected_outcome) {
    auto u = build_query_circuit(reg.params(), reg.layout(), query);
    auto out = reg.state().projective_2outcome_forced(u, reg.accept_qubit(),
                                                      expected_outcome);
    return {out.bit, out.probability};
}

double query_outcome_probability(const ProtocolParams& params,
                                 const std::vector<BitString>& inputs,
                                 const MeqQuery& query, int outcome) {
    GlobalRegister fresh(params, inputs);
    auto u = build_query_circuit(params, fresh.layout(), query);
    fresh.state().apply(u);
    auto [p0, p1] = fresh.state().qubit_probabilities(fresh.accept_qubit());
    return outcome ? p1 : p0;
}

std::vector<double> initial_state_probs(const ProtocolParams& params,
                                        const std::vector<BitString>& inputs,
                                        const Transcript& transcript) {
    std::vector<double> probs;
    probs.reserve(transcript.size());
    for (const auto& entry : transcript) {
        probs.push_back(
            query_outcome_probability(params, inputs, entry.query, entry.outcome));
    }
    return probs;
}

double gao_bound(std::span<const double> initial_probs) {
    double shortfall = 0.0;
    for (double p : initial_probs) {
        if (p < 0.0 || p > 1.0 + 1e-12) {
            throw std::invalid_argument("gao_bound: probability outside [0, 1]");
        }
        shortfall += 1.0 - p;
    }
    double bound = 1.0 - 4.0 * shortfall;
    return bound < 0.0 ? 0.0 : bound;
}

} // namespace meqsim::meq
