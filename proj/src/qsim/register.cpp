#include "meqsim/qsim/register.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "meqsim/errors.hpp"
#include "meqsim/kernels/kernels.hpp"

namespace meqsim::qsim {

namespace {
const kernels::Table& K() { return kernels::active(); }
} // namespace

int RegisterLayout::append_block(std::string name, int width) {
    if (width < 1) {
        throw std::invalid_argument("RegisterLayout: zero-width block");
    }
    if (has_block(name)) {
        throw std::invalid_argument("RegisterLayout: duplicate block name '" + name + "'");
    }
    int offset = next_offset_;
    blocks_.emplace_back(std::move(name), Block{offset, width});
    next_offset_ += width;
    return offset;
}

const Block& RegisterLayout::block(std::string_view name) const {
    for (const auto& [n, b] : blocks_) {
        if (n == name) return b;
    }
    throw std::out_of_range("RegisterLayout: unknown block '" + std::string(name) + "'");
}

bool RegisterLayout::has_block(std::string_view name) const {
    for (const auto& [n, b] : blocks_) {
        if (n == name) return true;
    }
    return false;
}

FactoredRegister::FactoredRegister(int num_qubits, QubitCaps caps) : caps_(caps) {
    if (num_qubits < 1) {
        throw std::invalid_argument("FactoredRegister: needs at least one qubit");
    }
    factors_.reserve(static_cast<std::size_t>(num_qubits));
    where_.resize(static_cast<std::size_t>(num_qubits));
    for (int q = 0; q < num_qubits; ++q) {
        factors_.push_back(Factor{StateVector(1), {q}});
        where_[static_cast<std::size_t>(q)] = {q, 0};
    }
}

void FactoredRegister::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits()) {
        throw std::out_of_range("FactoredRegister: qubit index out of range");
    }
}

int FactoredRegister::largest_factor_width() const {
    int widest = 0;
    for (const auto& f : factors_) {
        widest = std::max(widest, static_cast<int>(f.qubits.size()));
    }
    return widest;
}

int FactoredRegister::local_index(int factor, int global) const {
    const auto& qs = factors_[static_cast<std::size_t>(factor)].qubits;
    for (std::size_t l = 0; l < qs.size(); ++l) {
        if (qs[l] == global) return static_cast<int>(l);
    }
    throw std::logic_error("FactoredRegister: qubit not in factor");
}

void FactoredRegister::load_block(int offset, const StateVector& state) {
    int width = state.num_qubits();
    for (int i = 0; i < width; ++i) {
        check_qubit(offset + i);
        auto [fid, local] = where_[static_cast<std::size_t>(offset + i)];
        const Factor& f = factors_[static_cast<std::size_t>(fid)];
        if (f.qubits.size() != 1 || std::abs(f.state.amplitude(0) - cd{1.0, 0.0}) > 1e-15) {
            throw std::invalid_argument("load_block: target qubits must be untouched");
        }
    }
    int first = where_[static_cast<std::size_t>(offset)].first;
    for (int i = 1; i < width; ++i) {
        auto& other = factors_[static_cast<std::size_t>(
            where_[static_cast<std::size_t>(offset + i)].first)];
        other.qubits.clear();
        other.state = StateVector(1);
    }
    Factor& f = factors_[static_cast<std::size_t>(first)];
    f.state = state;
    f.qubits.resize(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        f.qubits[static_cast<std::size_t>(i)] = offset + i;
        where_[static_cast<std::size_t>(offset + i)] = {first, i};
    }
}

void FactoredRegister::merge_two(int into, int from) {
    Factor& dst = factors_[static_cast<std::size_t>(into)];
    Factor& src = factors_[static_cast<std::size_t>(from)];
    const std::size_t na = dst.state.dim();
    const std::size_t nb = src.state.dim();
    std::vector<cd> merged(na * nb);
    K().tensor_product(merged.data(), dst.state.amplitudes().data(), na,
                       src.state.amplitudes().data(), nb);
    int base = static_cast<int>(dst.qubits.size());
    for (std::size_t l = 0; l < src.qubits.size(); ++l) {
        int g = src.qubits[l];
        dst.qubits.push_back(g);
        where_[static_cast<std::size_t>(g)] = {into, base + static_cast<int>(l)};
    }
    dst.state = StateVector::from_amplitudes(std::move(merged));
    src.qubits.clear();
    src.state = StateVector(1);
}

int FactoredRegister::merge_for(const std::vector<int>& touched) {
    std::vector<int> fids;
    for (int q : touched) {
        check_qubit(q);
        int fid = where_[static_cast<std::size_t>(q)].first;
        if (std::find(fids.begin(), fids.end(), fid) == fids.end()) {
            fids.push_back(fid);
        }
    }
    if (fids.size() == 1) return fids[0];

    // Merge in ascending order of each factor's lowest qubit, so a block
    // whose qubits are still in single-qubit factors comes out contiguous.
    auto min_qubit = [&](int fid) {
        const auto& qs = factors_[static_cast<std::size_t>(fid)].qubits;
        return *std::min_element(qs.begin(), qs.end());
    };
    std::sort(fids.begin(), fids.end(),
              [&](int a, int b) { return min_qubit(a) < min_qubit(b); });

    int total = 0;
    for (int fid : fids) {
        total += static_cast<int>(factors_[static_cast<std::size_t>(fid)].qubits.size());
    }
    if (total > caps_.hard) {
        throw QubitCapacityError(
            "merging factors would materialize " + std::to_string(total) +
                " qubits, above the hard cap of " + std::to_string(caps_.hard),
            total, caps_.hard);
    }
    if (total > caps_.soft && !soft_cap_warned_) {
        soft_cap_warned_ = true;
        std::fprintf(stderr,
                     "meqsim: warning: materializing a %d-qubit factor (soft cap %d)\n",
                     total, caps_.soft);
    }
    int into = fids[0];
    for (std::size_t i = 1; i < fids.size(); ++i) {
        merge_two(into, fids[i]);
    }
    return into;
}

void FactoredRegister::apply(const Gate& gate) {
    int fid = merge_for(gate.touched_qubits());
    StateVector& st = factors_[static_cast<std::size_t>(fid)].state;
    auto local = [&](int g) { return local_index(fid, g); };
    // Local position of a block's first qubit, or -1 if merge history left
    // the block non-contiguous (then the slow per-qubit paths apply).
    auto local_block = [&](int offset, int width) {
        int base = local(offset);
        for (int i = 1; i < width; ++i) {
            if (local(offset + i) != base + i) return -1;
        }
        return base;
    };

    Gate g = gate;
    switch (gate.kind) {
    case GateKind::Hadamard:
    case GateKind::PauliX:
        g.target = local(gate.target);
        break;
    case GateKind::Cnot:
        g.control = local(gate.control);
        g.target = local(gate.target);
        break;
    case GateKind::MultiControlledX:
        for (int& c : g.controls) c = local(c);
        g.target = local(gate.target);
        break;
    case GateKind::ControlledSwapBlock: {
        int ctrl = local(gate.control);
        int la = local_block(gate.block_a, gate.width);
        int lb = local_block(gate.block_b, gate.width);
        if (la >= 0 && lb >= 0) {
            g.control = ctrl;
            g.block_a = la;
            g.block_b = lb;
            break;
        }
        // A block swap is a product of per-qubit controlled swaps.
        for (int i = 0; i < gate.width; ++i) {
            st.apply(Gate::cswap_block(ctrl, local(gate.block_a + i),
                                       local(gate.block_b + i), 1));
        }
        return;
    }
    case GateKind::DiagonalPhase: {
        int la = local_block(gate.block_a, gate.width);
        if (la >= 0) {
            g.block_a = la;
            break;
        }
        std::vector<int> bits(static_cast<std::size_t>(gate.width));
        for (int i = 0; i < gate.width; ++i) {
            bits[static_cast<std::size_t>(i)] = local(gate.block_a + i);
        }
        st.apply_phase_on_bits(bits, gate.signs);
        return;
    }
    }
    st.apply(g);
}

void FactoredRegister::apply(const Circuit& circuit) {
    for (const Gate& g : circuit) {
        apply(g);
    }
}

std::pair<double, double> FactoredRegister::qubit_probabilities(int q) const {
    check_qubit(q);
    auto [fid, local] = where_[static_cast<std::size_t>(q)];
    return factors_[static_cast<std::size_t>(fid)].state.qubit_probabilities(local);
}

Outcome FactoredRegister::measure_qubit(int q, Rng& rng) {
    check_qubit(q);
    auto [fid, local] = where_[static_cast<std::size_t>(q)];
    return factors_[static_cast<std::size_t>(fid)].state.measure_qubit(local, rng);
}

double FactoredRegister::project_qubit(int q, int bit) {
    check_qubit(q);
    auto [fid, local] = where_[static_cast<std::size_t>(q)];
    return factors_[static_cast<std::size_t>(fid)].state.project_qubit(local, bit);
}

Outcome FactoredRegister::projective_2outcome(const Circuit& circuit, int s_qubit, Rng& rng) {
    apply(circuit);
    Outcome out = measure_qubit(s_qubit, rng);
    for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
        apply(it->inverse());
    }
    return out;
}

Outcome FactoredRegister::projective_2outcome_forced(const Circuit& circuit, int s_qubit,
                                                     int bit) {
    apply(circuit);
    double p = project_qubit(s_qubit, bit);
    for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
        apply(it->inverse());
    }
    return {bit, p};
}

double FactoredRegister::norm() const {
    double n = 1.0;
    for (const auto& f : factors_) {
        if (!f.qubits.empty()) n *= f.state.norm();
    }
    return n;
}

std::vector<int> FactoredRegister::factor_qubits(int q) const {
    check_qubit(q);
    auto qs = factors_[static_cast<std::size_t>(where_[static_cast<std::size_t>(q)].first)].qubits;
    std::sort(qs.begin(), qs.end());
    return qs;
}

StateVector FactoredRegister::dense_over(std::vector<int> qubits) const {
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    if (qubits.empty()) {
        throw std::invalid_argument("dense_over: empty qubit set");
    }
    auto in_set = [&](int g) {
        return std::binary_search(qubits.begin(), qubits.end(), g);
    };

    std::vector<cd> acc{cd{1.0, 0.0}};
    std::vector<int> order;
    for (const auto& f : factors_) {
        if (f.qubits.empty()) continue;
        bool any = false;
        bool all = true;
        for (int g : f.qubits) {
            if (in_set(g)) any = true; else all = false;
        }
        if (!any) continue;
        if (!all) {
            throw std::invalid_argument("dense_over: a factor straddles the qubit set");
        }
        std::vector<cd> next(acc.size() * f.state.dim());
        K().tensor_product(next.data(), acc.data(), acc.size(),
                           f.state.amplitudes().data(), f.state.dim());
        order.insert(order.end(), f.qubits.begin(), f.qubits.end());
        acc = std::move(next);
    }
    if (order.size() != qubits.size()) {
        throw std::invalid_argument("dense_over: qubit set not covered by register");
    }

    // Permute so the smallest global qubit becomes bit 0.
    std::vector<int> dest_bit(order.size());
    for (std::size_t b = 0; b < order.size(); ++b) {
        auto it = std::lower_bound(qubits.begin(), qubits.end(), order[b]);
        dest_bit[b] = static_cast<int>(it - qubits.begin());
    }
    std::vector<cd> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::size_t j = 0;
        for (std::size_t b = 0; b < order.size(); ++b) {
            if ((i >> b) & 1) j |= std::size_t{1} << dest_bit[b];
        }
        out[j] = acc[i];
    }
    return StateVector::from_amplitudes(std::move(out));
}

std::pair<StateVector, RegisterLayout>
tensor_init(const std::vector<std::pair<std::string, StateVector>>& blocks) {
    if (blocks.empty()) {
        throw std::invalid_argument("tensor_init: no blocks");
    }
    RegisterLayout layout;
    std::vector<cd> acc{cd{1.0, 0.0}};
    for (const auto& [name, state] : blocks) {
        layout.append_block(name, state.num_qubits());
        std::vector<cd> next(acc.size() * state.dim());
        K().tensor_product(next.data(), acc.data(), acc.size(),
                           state.amplitudes().data(), state.dim());
        acc = std::move(next);
    }
    return {StateVector::from_amplitudes(std::move(acc)), layout};
}

} // namespace meqsim::qsim
