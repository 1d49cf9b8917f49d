#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "meqsim/harness/report.hpp"
#include "meqsim/harness/runner.hpp"
#include "meqsim/kernels/kernels.hpp"
#include "meqsim/meq/answerer.hpp"
#include "meqsim/meq/runner.hpp"
#include "meqsim/oracle/oracle.hpp"
#include "meqsim/strategies/cliques.hpp"
#include "meqsim/strategies/dh.hpp"
#include "meqsim/strategies/grouping.hpp"

namespace meqsim::harness {

namespace {

struct Check {
    const char* name;
    std::function<bool(std::string&)> fn;
};

bool kernels_check(std::string& why) {
    const auto& sc = kernels::scalar_table();
    const auto& ac = kernels::active();
    Rng rng = make_stream(97, "selftest-kernels");
    for (int q = 1; q <= 8; ++q) {
        const std::size_t size = std::size_t{1} << q;
        std::vector<kernels::cd> a(size), b(size);
        for (std::size_t i = 0; i < size; ++i) {
            a[i] = {uniform_real(rng) - 0.5, uniform_real(rng) - 0.5};
        }
        b = a;
        for (int target = 0; target < q; ++target) {
            sc.hadamard(a.data(), size, target);
            ac.hadamard(b.data(), size, target);
        }
        for (std::size_t i = 0; i < size; ++i) {
            if (std::abs(a[i] - b[i]) > 1e-12) {
                why = "hadamard backends disagree";
                return false;
            }
        }
        if (std::abs(sc.norm_sq(a.data(), size) - ac.norm_sq(b.data(), size)) > 1e-9) {
            why = "norm backends disagree";
            return false;
        }
    }
    return true;
}

bool qsim_check(std::string& why) {
    Rng rng = make_stream(98, "selftest-qsim");
    qsim::StateVector st(4);
    for (int q = 0; q < 4; ++q) st.apply(qsim::Gate::hadamard(q));
    st.apply(qsim::Gate::cnot(0, 2));
    st.apply(qsim::Gate::cswap_block(3, 0, 1, 1));
    if (std::abs(st.norm() - 1.0) > 1e-9) {
        why = "norm drifted";
        return false;
    }
    qsim::Circuit u{qsim::Gate::hadamard(1), qsim::Gate::cnot(1, 0)};
    auto first = st.projective_2outcome(u, 0, rng);
    auto again = st.projective_2outcome_forced(u, 0, first.bit);
    if (again.probability < 1.0 - 1e-9) {
        why = "projective repeat not certain";
        return false;
    }
    return true;
}

bool fingerprint_check(std::string& why) {
    Rng rng = make_stream(99, "selftest-fp");
    for (int n = 1; n <= 3; ++n) {
        auto code = fingerprint::LinearCode::sample_default(n, rng);
        if (!code.weight_window_ok()) {
            why = "sampled code fails its weight window";
            return false;
        }
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
                if (x == y) continue;
                double ip = code.inner(BitString::from_value(n, x),
                                       BitString::from_value(n, y));
                if (std::abs(ip) > 0.5 + 1e-12) {
                    why = "inner product above 1/2";
                    return false;
                }
            }
        }
    }
    // Fault injection: the window checker must flag a bad generator.
    fingerprint::LinearCode bad({BitString::from_string("11")}, 2);
    if (bad.weight_window_ok()) {
        why = "weight-window checker accepted a bad code";
        return false;
    }
    return true;
}

bool engine_check(std::string& why) {
    auto code = fingerprint::LinearCode(
        {BitString::from_string("1100"), BitString::from_string("0110")}, 4);
    auto params = meq::ProtocolParams::with_copies(2, 2, 4, 2, code);
    std::vector<BitString> equal{BitString::from_string("01"), BitString::from_string("01")};
    double accept = meq::query_outcome_probability(
        params, equal, meq::MeqQuery::pair(0, 1, BitString(2), BitString(2)), 1);
    if (std::abs(accept - 1.0) > 1e-9) {
        why = "equal case not certain";
        return false;
    }
    std::vector<BitString> unequal{BitString::from_string("01"),
                                   BitString::from_string("10")};
    double collide = meq::query_outcome_probability(
        params, unequal, meq::MeqQuery::pair(0, 1, BitString(2), BitString(2)), 1);
    if (std::abs(collide - 0.25) > 1e-9) {
        why = "orthogonal collision probability != 1/4";
        return false;
    }
    std::vector<double> tens(10, 0.99);
    if (std::abs(meq::gao_bound(tens) - 0.6) > 1e-12) {
        why = "sequential bound arithmetic broken";
        return false;
    }
    return true;
}

bool strategies_check(std::string& why) {
    for (int k = 1; k <= 3; ++k) {
        for (std::uint64_t tuple = 0; tuple < (std::uint64_t{1} << (2 * k)); ++tuple) {
            std::vector<BitString> inputs;
            for (int p = 0; p < k; ++p) {
                inputs.push_back(BitString::from_value(2, (tuple >> (2 * p)) & 3));
            }
            oracle::ClassicalAnswerer ans(inputs);
            strategies::GroupByEqStrategy s(k, 2);
            long long used = 0;
            while (auto q = s.next_query()) {
                if (++used > s.declared_depth()) {
                    why = "depth bound exceeded";
                    return false;
                }
                s.absorb(ans.answer(*q).outcome);
            }
            if (!(std::get<meq::Partition>(s.output()) == oracle::group_by_eq(inputs))) {
                why = "grouping disagrees with the oracle";
                return false;
            }
        }
    }
    for (std::uint64_t mask = 0; mask <= Graph::max_edge_mask(4); ++mask) {
        Graph g = Graph::from_edge_mask(4, mask);
        std::vector<BitString> inputs;
        for (int v = 0; v < 4; ++v) inputs.push_back(g.neighborhood(v));
        oracle::ClassicalAnswerer ans(inputs);
        strategies::DhReconstructStrategy s(4);
        while (auto q = s.next_query()) s.absorb(ans.answer(*q).outcome);
        auto out = std::get<meq::DhOutput>(s.output());
        if (out.accepted != oracle::dh_test_and_decompose(g).accepted) {
            why = "reconstruct accept/reject disagrees";
            return false;
        }
        if (out.accepted && !(*out.reconstructed == g)) {
            why = "reconstruction round-trip failed";
            return false;
        }
    }
    return true;
}

bool report_check(std::string& why) {
    ExperimentConfig cfg;
    cfg.problem = oracle::Problem::GroupByEq;
    cfg.k = 3;
    cfg.n = 2;
    cfg.mode = RunMode::ExactPath;
    cfg.source = InputSource::Random;
    cfg.trials = 3;
    cfg.seed = 11;
    cfg.m_override = 4;
    std::ostringstream first, second;
    if (cmd_run(cfg, first) != 0) {
        why = "exact-path run mismatched the oracle";
        return false;
    }
    cmd_run(cfg, second);
    if (first.str() != second.str()) {
        why = "equal configs produced different reports";
        return false;
    }
    std::istringstream lines(first.str());
    std::string line;
    while (std::getline(lines, line)) {
        auto complaint = validate_record(json::parse(line));
        if (!complaint.empty()) {
            why = "record failed schema validation: " + complaint;
            return false;
        }
    }
    return true;
}

} // namespace

int cmd_selftest(std::ostream& out) {
    const Check checks[] = {
        {"kernels", kernels_check},     {"qsim", qsim_check},
        {"fingerprint", fingerprint_check}, {"meq-engine", engine_check},
        {"strategies", strategies_check},   {"report", report_check},
    };
    int failures = 0;
    for (const auto& check : checks) {
        std::string why;
        bool ok = check.fn(why);
        out << check.name << ": " << (ok ? "PASS" : "FAIL") << (ok ? "" : " - " + why)
            << '\n';
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

} // namespace meqsim::harness
