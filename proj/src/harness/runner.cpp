#include "meqsim/harness/runner.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "meqsim/errors.hpp"
#include "meqsim/harness/parallel.hpp"
#include "meqsim/harness/report.hpp"
#include "meqsim/meq/runner.hpp"
#include "meqsim/strategies/cliques.hpp"
#include "meqsim/strategies/dh.hpp"
#include "meqsim/strategies/grouping.hpp"

namespace meqsim::harness {

namespace {

using oracle::Problem;

struct TrialInput {
    std::vector<BitString> strings; // protocol inputs (neighborhoods for graphs)
    std::optional<Graph> graph;
};

std::vector<BitString> graph_inputs(const Graph& g) {
    std::vector<BitString> inputs;
    inputs.reserve(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) inputs.push_back(g.neighborhood(v));
    return inputs;
}

TrialInput input_from_graph(Graph g) {
    TrialInput in;
    in.strings = graph_inputs(g);
    in.graph = std::move(g);
    return in;
}

std::unique_ptr<meq::QueryStrategy> make_strategy(const ExperimentConfig& config,
                                                  const TrialInput& input) {
    switch (config.problem) {
    case Problem::GroupByEq:
        return std::make_unique<strategies::GroupByEqStrategy>(config.k, config.n);
    case Problem::AllEq:
        return std::make_unique<strategies::AllEqStrategy>(config.k, config.n);
    case Problem::ExistsEq:
        return std::make_unique<strategies::ExistsEqStrategy>(config.k, config.n);
    case Problem::FrequencyMoment:
        return std::make_unique<strategies::FrequencyMomentStrategy>(config.k, config.n,
                                                                     config.d);
    case Problem::P3Freeness:
        return std::make_unique<strategies::P3FreenessStrategy>(*input.graph);
    case Problem::NeighborhoodDiversity:
        return std::make_unique<strategies::NeighborhoodDiversityStrategy>(config.k);
    case Problem::DhReconstruct:
        return std::make_unique<strategies::DhReconstructStrategy>(config.k);
    case Problem::IsolatedCliques:
        return std::make_unique<strategies::IsolatedCliquesStrategy>(
            *input.graph, config.d, config.include_singletons);
    }
    throw std::logic_error("make_strategy: unhandled problem");
}

meq::ProtocolOutput solve_oracle(const ExperimentConfig& config, const TrialInput& input) {
    oracle::ProblemOptions opts;
    opts.moment_p = config.d;
    opts.isolation_d = config.d;
    opts.include_singletons = config.include_singletons;
    if (oracle::problem_is_graph(config.problem)) {
        return oracle::solve(config.problem, *input.graph, opts);
    }
    return oracle::solve(config.problem, input.strings, opts);
}

long long exhaustive_total(const ExperimentConfig& config) {
    if (oracle::problem_is_graph(config.problem)) {
        return static_cast<long long>(Graph::max_edge_mask(config.k)) + 1;
    }
    double total = std::pow(2.0, static_cast<double>(config.n) * config.k);
    if (total > 1e6) {
        throw std::invalid_argument("exhaustive run would need more than 1e6 trials");
    }
    return static_cast<long long>(total);
}

TrialInput build_input(const ExperimentConfig& config, const TrialInput* file_input,
                       int trial) {
    const bool graph_problem = oracle::problem_is_graph(config.problem);
    switch (config.source) {
    case InputSource::File:
        return *file_input;
    case InputSource::Random: {
        Rng rng = make_stream(config.seed, "inputs", static_cast<std::uint64_t>(trial));
        if (graph_problem) {
            Graph g = config.problem == Problem::DhReconstruct
                          ? oracle::gen_dh_graph(config.k, rng)
                          : Graph::random(config.k, rng);
            return input_from_graph(std::move(g));
        }
        TrialInput in;
        for (int p = 0; p < config.k; ++p) {
            BitString x(config.n);
            for (int b = 0; b < config.n; ++b) x.set_bit(b, uniform_bit(rng));
            in.strings.push_back(std::move(x));
        }
        return in;
    }
    case InputSource::Exhaustive: {
        if (graph_problem) {
            return input_from_graph(
                Graph::from_edge_mask(config.k, static_cast<std::uint64_t>(trial)));
        }
        TrialInput in;
        std::uint64_t index = static_cast<std::uint64_t>(trial);
        for (int p = 0; p < config.k; ++p) {
            in.strings.push_back(
                BitString::from_value(config.n, index & ((std::uint64_t{1} << config.n) - 1)));
            index >>= config.n;
        }
        return in;
    }
    }
    throw std::logic_error("build_input: unhandled source");
}

TrialInput load_file_input(const ExperimentConfig& config) {
    std::ifstream in(config.input_path);
    if (!in) {
        throw std::runtime_error("cannot open input file '" + config.input_path + "'");
    }
    if (oracle::problem_is_graph(config.problem)) {
        return input_from_graph(Graph::parse(in));
    }
    TrialInput t;
    std::string line;
    while (in >> line) {
        t.strings.push_back(BitString::from_string(line));
    }
    return t;
}

struct TrialBlock {
    std::string lines;
    int matched = 0; // 1 match, 0 mismatch, -1 error
};

} // namespace

int cmd_run(const ExperimentConfig& raw_config, std::ostream& report) {
    ExperimentConfig config = raw_config;

    TrialInput file_input;
    if (config.source == InputSource::File) {
        file_input = load_file_input(config);
        if (oracle::problem_is_graph(config.problem)) {
            config.k = file_input.graph->node_count();
        } else {
            config.k = static_cast<int>(file_input.strings.size());
            if (config.k == 0) throw std::runtime_error("input file holds no strings");
            config.n = file_input.strings[0].size();
        }
    }
    if (oracle::problem_is_graph(config.problem)) {
        config.n = config.k; // players hold neighborhood vectors
    }
    if (config.source == InputSource::Exhaustive) {
        config.trials = static_cast<int>(exhaustive_total(config));
    }
    if (config.trials < 1) {
        throw std::invalid_argument("cmd_run: trials must be >= 1");
    }

    // Depth budget and classical bits from a probe strategy; they depend
    // only on (problem, k, n, d), not on the concrete inputs.
    TrialInput probe;
    probe.strings.assign(static_cast<std::size_t>(config.k), BitString(config.n));
    probe.graph = Graph(config.k);
    auto probe_strategy = make_strategy(config, probe);
    const long long declared = probe_strategy->declared_depth();
    const int depth_budget = static_cast<int>(std::max(declared, 1LL));

    Rng code_rng = make_stream(config.seed, "code");
    const int m = config.m_override > 0 ? config.m_override
                                        : fingerprint::LinearCode::default_width(config.n);
    auto code = fingerprint::LinearCode::sample(config.n, m, code_rng, 10000);
    auto params = meq::ProtocolParams::derive(config.n, config.k, depth_budget,
                                              config.delta, std::move(code));
    params.caps.soft = config.soft_qubit_cap;
    params.caps.hard = config.hard_qubit_cap;

    report << config_record(config, params).dump() << '\n';

    std::function<TrialBlock(int)> worker = [&](int trial) -> TrialBlock {
        TrialBlock block;
        std::ostringstream out;
        try {
            TrialInput input = build_input(config, &file_input, trial);
            auto strategy = make_strategy(config, input);
            oracle::ClassicalAnswerer truth(input.strings);

            meq::RunResult run;
            if (config.mode == RunMode::Classical) {
                run = meq::run_protocol(params, *strategy, truth);
            } else if (config.mode == RunMode::ExactPath) {
                meq::QuantumExactPathAnswerer answerer(params, input.strings, truth);
                run = meq::run_protocol(params, *strategy, answerer);
            } else {
                meq::QuantumSampledAnswerer answerer(
                    params, input.strings,
                    make_stream(config.seed, "measure", static_cast<std::uint64_t>(trial)));
                run = meq::run_protocol(params, *strategy, answerer);
            }

            TrialStats stats;
            stats.trial = trial;
            stats.output = run.output;
            stats.oracle_output = solve_oracle(config, input);
            stats.match = output_matches(stats.output, stats.oracle_output);
            stats.transcript_length = static_cast<int>(run.transcript.size());
            stats.cost = run.cost;

            if (config.mode == RunMode::ExactPath) {
                auto probs = meq::initial_state_probs(params, input.strings, run.transcript);
                for (std::size_t q = 0; q < probs.size(); ++q) {
                    run.transcript[q].initial_state_probability = probs[q];
                }
                stats.exact_path_probability = meq::transcript_probability(run.transcript);
                stats.gao = meq::gao_bound(probs);
            }

            for (std::size_t q = 0; q < run.transcript.size(); ++q) {
                out << query_record(trial, static_cast<int>(q), run.transcript[q]).dump()
                    << '\n';
            }
            out << trial_record(stats).dump() << '\n';
            block.matched = stats.match ? 1 : 0;
        } catch (const QubitCapacityError& e) {
            out << error_record(trial, e.what(), e.required, e.cap).dump() << '\n';
            block.matched = -1;
        } catch (const NullBranchError& e) {
            out << error_record(trial, e.what(), 0, 0).dump() << '\n';
            block.matched = -1;
        }
        block.lines = out.str();
        return block;
    };

    auto blocks = ordered_parallel_map<TrialBlock>(config.trials, worker);

    int matches = 0;
    bool failed = false;
    int completed = 0;
    for (const auto& block : blocks) {
        report << block.lines;
        if (block.matched < 0) {
            failed = true;
            break;
        }
        ++completed;
        matches += block.matched;
    }
    std::optional<double> analytic;
    if (config.mode == RunMode::Sampled) {
        analytic = 4.0 * depth_budget * std::pow(0.625, params.copies);
    }
    report << summary_record(completed, matches, analytic).dump() << '\n';
    return (!failed && matches == completed) ? 0 : 1;
}

namespace {

struct CostRow {
    std::string problem;
    int k;
    int n;
    double delta;
    long long depth;
    double epsilon;
    int t;
    int m;
    int per_player;
    long long total;
    long long classical_bits;
};

} // namespace

int cmd_cost(const CostGrid& grid, std::ostream& out) {
    std::vector<CostRow> rows;
    const std::vector<Problem> problems{
        Problem::GroupByEq,      Problem::AllEq,
        Problem::ExistsEq,       Problem::FrequencyMoment,
        Problem::P3Freeness,     Problem::NeighborhoodDiversity,
        Problem::DhReconstruct,  Problem::IsolatedCliques,
    };
    for (Problem problem : problems) {
        for (int k : grid.k_values) {
            std::vector<int> ns;
            if (!oracle::problem_is_graph(problem) && !grid.n_values.empty()) {
                ns = grid.n_values;
            } else {
                ns = {k};
            }
            for (int n : ns) {
                for (double delta : grid.deltas) {
                    ExperimentConfig cfg;
                    cfg.problem = problem;
                    cfg.k = k;
                    cfg.n = oracle::problem_is_graph(problem) ? k : n;
                    cfg.d = grid.d;
                    TrialInput probe;
                    probe.strings.assign(static_cast<std::size_t>(cfg.k), BitString(cfg.n));
                    probe.graph = Graph(cfg.k);
                    auto strategy = make_strategy(cfg, probe);
                    long long depth = strategy->declared_depth();
                    int budget = static_cast<int>(std::max(depth, 1LL));
                    double epsilon = delta / (4.0 * budget);
                    int t = meq::ProtocolParams::copies_for(epsilon);
                    int m = grid.m_override > 0
                                ? grid.m_override
                                : fingerprint::LinearCode::default_width(cfg.n);
                    int w = 0;
                    for (int v = m; v > 1; v /= 2) ++w;
                    rows.push_back({problem_name(problem), cfg.k, cfg.n, delta, depth,
                                    epsilon, t, m, t * w,
                                    static_cast<long long>(cfg.k) * t * w,
                                    strategy->classical_side_bits()});
                }
            }
        }
    }
    // Bounded-distance subquery depths for reference.
    for (int k : grid.k_values) {
        for (double delta : grid.deltas) {
            long long depth = strategies::MhamQuerySequence::max_queries(k, grid.d);
            int budget = static_cast<int>(std::max(depth, 1LL));
            double epsilon = delta / (4.0 * budget);
            int t = meq::ProtocolParams::copies_for(epsilon);
            int m = grid.m_override > 0 ? grid.m_override
                                        : fingerprint::LinearCode::default_width(k);
            int w = 0;
            for (int v = m; v > 1; v /= 2) ++w;
            rows.push_back({"mham_subquery", k, k, delta, depth, epsilon, t, m, t * w,
                            static_cast<long long>(k) * t * w, 0});
        }
    }

    out << std::left << std::setw(24) << "problem" << std::right << std::setw(4) << "k"
        << std::setw(4) << "n" << std::setw(8) << "delta" << std::setw(12) << "depth"
        << std::setw(12) << "epsilon" << std::setw(4) << "t" << std::setw(5) << "m"
        << std::setw(10) << "q/player" << std::setw(9) << "q_total" << std::setw(7)
        << "cbits" << '\n';
    for (const auto& r : rows) {
        out << std::left << std::setw(24) << r.problem << std::right << std::setw(4) << r.k
            << std::setw(4) << r.n << std::setw(8) << r.delta << std::setw(12) << r.depth
            << std::setw(12) << std::setprecision(4) << r.epsilon << std::setw(4) << r.t
            << std::setw(5) << r.m << std::setw(10) << r.per_player << std::setw(9)
            << r.total << std::setw(7) << r.classical_bits << '\n';
    }
    return 0;
}

} // namespace meqsim::harness
