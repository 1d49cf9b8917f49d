#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meqsim/errors.hpp"
#include "meqsim/meq/answerer.hpp"
#include "meqsim/meq/engine.hpp"
#include "meqsim/meq/runner.hpp"
#include "meqsim/oracle/oracle.hpp"
#include "meqsim/strategies/grouping.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace meqsim;
using namespace meqsim::meq;
using fingerprint::LinearCode;

namespace {

LinearCode code_n2() {
    return LinearCode({BitString::from_string("1100"), BitString::from_string("0110")}, 4);
}

LinearCode code_n1() { return LinearCode({BitString::from_string("1000")}, 4); }

std::vector<BitString> all_strings(int n) {
    std::vector<BitString> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        out.push_back(BitString::from_value(n, v));
    }
    return out;
}

qsim::StateVector dense_all(GlobalRegister& reg) {
    std::vector<int> all(static_cast<std::size_t>(reg.layout().num_qubits()));
    for (std::size_t q = 0; q < all.size(); ++q) all[q] = static_cast<int>(q);
    return reg.state().dense_over(all);
}

} // namespace

TEST_CASE("copies and epsilon derivations") {
    CHECK(ProtocolParams::copies_for(0.1) == 5); // (5/8)^5 ~ 0.0954, (5/8)^4 ~ 0.153
    CHECK(std::pow(0.625, 5) <= 0.1);
    CHECK(std::pow(0.625, 4) > 0.1);

    auto p = ProtocolParams::derive(2, 3, 3, 0.2, code_n2());
    CHECK(p.epsilon == doctest::Approx(1.0 / 60.0));

    auto pinned = ProtocolParams::with_copies(2, 3, 3, 2, code_n2());
    CHECK(pinned.copies == 2);
    CHECK(pinned.epsilon == doctest::Approx(std::pow(0.625, 2)));
    CHECK(ProtocolParams::copies_for(pinned.epsilon) == 2);
}

TEST_CASE("qubit cost formula") {
    Rng rng = make_stream(31, "cost");
    auto code = LinearCode::sample(3, 8, rng);
    auto p = ProtocolParams::with_copies(3, 3, 4, 5, code);
    auto cost = qubit_cost(p);
    CHECK(cost.per_player_qubits == 15); // t=5, log2(m)=3
    CHECK(cost.total_qubits == 45);
    CHECK(cost.classical_bits == 0);
}

TEST_CASE("init_global prepares fingerprints and zeroed referee blocks") {
    auto p = ProtocolParams::with_copies(1, 1, 1, 1, LinearCode({BitString::from_string("10")}, 2));
    GlobalRegister reg(p, {BitString::from_string("0")});
    // player copy |+>, referee copy |0>, s_0 |0>, s |0>: 4 qubits total.
    CHECK(reg.layout().num_qubits() == 4);
    auto dense = dense_all(reg);
    CHECK(std::abs(dense.amplitude(0) - qsim::cd{M_SQRT1_2, 0}) < 1e-12);
    CHECK(std::abs(dense.amplitude(1) - qsim::cd{M_SQRT1_2, 0}) < 1e-12);
    CHECK(dense.norm() == doctest::Approx(1.0).epsilon(1e-12));

    auto p2 = ProtocolParams::with_copies(2, 2, 1, 2, code_n2());
    GlobalRegister reg2(p2, {BitString::from_string("00"), BitString::from_string("01")});
    // 2 players * 2 copies * 2 qubits player side.
    int player_qubits = 0;
    for (const auto& [name, block] : reg2.layout().blocks()) {
        if (name[0] == 'p') player_qubits += block.width;
    }
    CHECK(player_qubits == 8);
    CHECK(reg2.state().norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("query circuit structure") {
    auto p = ProtocolParams::with_copies(2, 2, 1, 1, code_n2());
    GlobalRegister reg(p, {BitString::from_string("00"), BitString::from_string("01")});

    auto plain = build_query_circuit(p, reg.layout(),
                                     MeqQuery::pair(0, 1, BitString(2), BitString(2)));
    // t=1, identity modifiers: H, cswap, H, X, then a plain CNOT for the AND.
    REQUIRE(plain.size() == 5);
    CHECK(plain[0].kind == qsim::GateKind::Hadamard);
    CHECK(plain[1].kind == qsim::GateKind::ControlledSwapBlock);
    CHECK(plain[2].kind == qsim::GateKind::Hadamard);
    CHECK(plain[3].kind == qsim::GateKind::PauliX);
    CHECK(plain[4].kind == qsim::GateKind::Cnot);

    auto modified = build_query_circuit(
        p, reg.layout(), MeqQuery::pair(0, 1, BitString::from_string("10"), BitString(2)));
    CHECK(modified.size() == 6);
    CHECK(modified[0].kind == qsim::GateKind::DiagonalPhase);

    auto p3 = ProtocolParams::with_copies(2, 2, 1, 3, code_n2());
    GlobalRegister reg3(p3, {BitString::from_string("00"), BitString::from_string("01")});
    auto big = build_query_circuit(p3, reg3.layout(),
                                   MeqQuery::pair(0, 1, BitString(2), BitString(2)));
    int cswaps = 0;
    bool has_mcx = false;
    for (const auto& g : big) {
        if (g.kind == qsim::GateKind::ControlledSwapBlock) ++cswaps;
        if (g.kind == qsim::GateKind::MultiControlledX) has_mcx = true;
    }
    CHECK(cswaps == 3);
    CHECK(has_mcx);
}

TEST_CASE("equal-case queries accept surely and leave the state unchanged") {
    Rng rng = make_stream(32, "equal-case");
    for (int t = 1; t <= 2; ++t) {
        auto p = ProtocolParams::with_copies(2, 2, 4, t, code_n2());
        for (const auto& y : all_strings(2)) {
            for (const auto& z : all_strings(2)) {
                BitString xi = BitString::from_value(2, uniform_below(rng, 4));
                BitString xj = xi ^ y ^ z; // makes x_i ^ y == x_j ^ z
                GlobalRegister reg(p, {xi, xj});
                auto pre = dense_all(reg);
                auto out = execute_query(reg, MeqQuery::pair(0, 1, y, z), rng);
                CHECK(out.outcome == 1);
                CHECK(out.probability >= 1.0 - 1e-9);
                CHECK(testutil::max_abs_diff(dense_all(reg), pre) < 1e-9);
            }
        }
    }
}

TEST_CASE("unequal-case accept probability follows the product law") {
    auto inputs = all_strings(2);
    for (int t = 1; t <= 3; ++t) {
        auto p = ProtocolParams::with_copies(2, 2, 4, t, code_n2());
        for (const auto& xi : inputs) {
            for (const auto& xj : inputs) {
                for (const auto& y : inputs) {
                    for (const auto& z : inputs) {
                        double ip = p.code.inner(xi ^ y, xj ^ z);
                        double expect = std::pow(0.5 + 0.5 * ip * ip, t);
                        double got = query_outcome_probability(
                            p, {xi, xj}, MeqQuery::pair(0, 1, y, z), 1);
                        CHECK(got == doctest::Approx(expect).epsilon(1e-9));
                        if (!((xi ^ y) == (xj ^ z))) {
                            CHECK(got <= std::pow(0.625, t) + 1e-9);
                        }
                    }
                }
            }
        }
        // All distinct pairs under this code are orthogonal.
        if (t == 2) {
            double got = query_outcome_probability(
                p, {BitString::from_string("00"), BitString::from_string("10")},
                MeqQuery::pair(0, 1, BitString(2), BitString(2)), 1);
            CHECK(got == doctest::Approx(0.25).epsilon(1e-9));
        }
    }
}

TEST_CASE("single-player queries test x_i ^ y == z") {
    Rng rng = make_stream(33, "single");
    auto p = ProtocolParams::with_copies(2, 1, 4, 2, code_n2());
    for (const auto& x : all_strings(2)) {
        for (const auto& y : all_strings(2)) {
            for (const auto& z : all_strings(2)) {
                GlobalRegister reg(p, {x});
                auto out = execute_query(reg, MeqQuery::single(0, y, z), rng);
                double p1 = query_outcome_probability(p, {x}, MeqQuery::single(0, y, z), 1);
                if ((x ^ y) == z) {
                    CHECK(p1 >= 1.0 - 1e-9);
                    CHECK(out.outcome == 1);
                } else {
                    double ip = p.code.inner(x ^ y, z);
                    CHECK(p1 == doctest::Approx(std::pow(0.5 + 0.5 * ip * ip, 2))
                                     .epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("forcing a null branch raises NullBranchError") {
    auto p = ProtocolParams::with_copies(1, 2, 2, 1, code_n1());
    GlobalRegister reg(p, {BitString::from_string("1"), BitString::from_string("1")});
    CHECK_THROWS_AS(
        execute_query_forced(reg, MeqQuery::pair(0, 1, BitString(1), BitString(1)), 0),
        NullBranchError);
}

TEST_CASE("repeating the last query reproduces its outcome") {
    Rng rng = make_stream(34, "idem");
    auto p = ProtocolParams::with_copies(2, 2, 8, 2, code_n2());
    auto inputs = all_strings(2);
    for (const auto& xi : inputs) {
        for (const auto& xj : inputs) {
            GlobalRegister reg(p, {xi, xj});
            auto q = MeqQuery::pair(0, 1, BitString(2), BitString(2));
            auto first = execute_query(reg, q, rng);
            auto again = execute_query_forced(reg, q, first.outcome);
            CHECK(again.probability >= 1.0 - 1e-9);
        }
    }
}

TEST_CASE("gao bound arithmetic") {
    std::vector<double> sure{1.0, 1.0, 1.0};
    CHECK(gao_bound(sure) == doctest::Approx(1.0));

    std::vector<double> tens(10, 0.99);
    CHECK(gao_bound(tens) == doctest::Approx(0.6));

    // p_i >= 1 - delta/(4D) over D queries leaves at least 1 - delta.
    const double delta = 0.3;
    const int depth = 7;
    std::vector<double> analytic(depth, 1.0 - delta / (4 * depth));
    CHECK(gao_bound(analytic) == doctest::Approx(1.0 - delta));

    std::vector<double> hopeless(10, 0.5);
    CHECK(gao_bound(hopeless) == 0.0);

    CHECK_THROWS_AS(gao_bound(std::vector<double>{1.5}), std::invalid_argument);
}

TEST_CASE("initial-state probabilities certify exact-path runs") {
    auto p = ProtocolParams::with_copies(2, 3, 3, 2, code_n2());
    std::vector<BitString> inputs{BitString::from_string("00"), BitString::from_string("00"),
                                  BitString::from_string("01")};

    oracle::ClassicalAnswerer truth(inputs);
    QuantumExactPathAnswerer answerer(p, inputs, truth);
    strategies::GroupByEqStrategy strategy(3, 2);
    auto result = run_protocol(p, strategy, answerer);

    CHECK(result.transcript.size() == 2);
    CHECK(std::get<Partition>(result.output) ==
          std::get<Partition>(oracle::solve(oracle::Problem::GroupByEq, inputs, {})));

    auto probs = initial_state_probs(p, inputs, result.transcript);
    REQUIRE(probs.size() == result.transcript.size());
    CHECK(probs[0] >= 1.0 - 1e-9); // equal pair answered 1
    // unequal pair answered 0; orthogonal fingerprints, t=2
    CHECK(probs[1] == doctest::Approx(0.75).epsilon(1e-9));

    double product = transcript_probability(result.transcript);
    CHECK(product >= gao_bound(probs) - 1e-6);
}

TEST_CASE("run_protocol enforces the depth budget") {
    auto p = ProtocolParams::with_copies(2, 3, 1, 2, code_n2()); // D = 1 < C(3,2)
    std::vector<BitString> inputs(3, BitString::from_string("01"));
    oracle::ClassicalAnswerer truth(inputs);
    strategies::GroupByEqStrategy strategy(3, 2);
    CHECK_THROWS_AS(run_protocol(p, strategy, truth), std::invalid_argument);
}
