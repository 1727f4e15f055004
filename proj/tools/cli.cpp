#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "qcw/algorithms.hpp"
#include "qcw/decoherence.hpp"
#include "qcw/errors.hpp"
#include "qcw/infometrics.hpp"
#include "qcw/worlds.hpp"
#include "report.hpp"

namespace qcw {

namespace {

BooleanFunction load_function(const RunConfig& config) {
    if (config.function_source.empty()) {
        throw parse_error("missing truth table (--f)");
    }
    std::string text = config.function_source;
    if (text.front() == '@') {
        const std::string path = text.substr(1);
        std::ifstream in(path);
        if (!in) {
            throw parse_error("cannot open truth table file: " + path);
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    BooleanFunction f = parse_truth_table(text);
    if (config.n > 0 && config.n != f.n) {
        throw parse_error("--n " + std::to_string(config.n) + " does not match the " +
                          std::to_string(f.n) + "-bit truth table");
    }
    return f;
}

Json config_echo(const RunConfig& config, const BooleanFunction* f, double threshold) {
    Json echo;
    if (f != nullptr) {
        std::string bits;
        bits.reserve(f->table.size());
        for (std::uint8_t b : f->table) {
            bits.push_back(b ? '1' : '0');
        }
        echo["f"] = bits;
        echo["n"] = f->n;
    }
    echo["seed"] = config.seed;
    echo["threshold"] = threshold;
    return echo;
}

Json run_report(const RunConfig& config, const BooleanFunction& f, const CircuitRun& run,
                double threshold, const DeutschResult* verdict) {
    const RegisterLayout layout{f.n, 1};
    const WorldTrace world_trace = track(run.trace, layout, threshold);
    const InformationAudit audit = audit_information(run.trace, layout);
    const Json body = trace_document(world_trace, audit);

    Json document;
    document["format_version"] = kReportFormatVersion;
    document["command"] = config.command;
    document["config"] = config_echo(config, &f, threshold);
    if (verdict != nullptr) {
        document["verdict"] = std::string(to_string(verdict->verdict));
        document["outcome_bit"] = verdict->outcome_bit;
        document["outcome_probability"] = verdict->outcome_probability;
    }
    document["sampled_label"] = layout.label_bits(run.sampled_label);
    document["steps"] = body.at("steps");
    document["events"] = body.at("events");
    document["audit"] = body.at("audit");
    return document;
}

Json deutsch_report(const RunConfig& config, bool require_one_bit) {
    const BooleanFunction f = load_function(config);
    if (require_one_bit && f.n != 1) {
        throw parse_error("deutsch requires a 1-bit truth table (2 characters)");
    }
    const double threshold =
        config.threshold > 0.0 ? config.threshold : kDefaultWorldThreshold;
    const CircuitRun run = run_dj_circuit(f, config.seed);
    const DeutschResult verdict = pipeline_run(f, config.seed);
    return run_report(config, f, run, threshold, &verdict);
}

Json worlds_trace_report(const RunConfig& config) {
    // Same circuit as dj, but no promise requirement: the worlds structure of
    // an unpromised f is still well defined.
    const BooleanFunction f = load_function(config);
    const double threshold =
        config.threshold > 0.0 ? config.threshold : kDefaultWorldThreshold;
    const CircuitRun run = run_dj_circuit(f, config.seed);
    return run_report(config, f, run, threshold, nullptr);
}

Json decohere_report(const RunConfig& config) {
    if (config.steps < 1) {
        throw parse_error("decohere needs --steps >= 1");
    }
    const double threshold =
        config.threshold > 0.0 ? config.threshold : kDefaultBranchThreshold;

    Json document;
    document["format_version"] = kReportFormatVersion;
    document["command"] = config.command;
    Json echo;
    echo["seed"] = config.seed;
    echo["gamma"] = config.gamma;
    echo["env_qubits"] = config.env_qubits;
    echo["steps"] = config.steps;
    echo["threshold"] = threshold;
    document["config"] = echo;

    CoherenceSeries series;
    if (config.env_qubits > 0) {
        const EnvironmentModel env = ladder_environment(config.env_qubits);
        series = coherence_series(entangle_environment(cat_state(), env, config.steps));
        document["model"] = "environment";
        document["coupling_angles"] = env.coupling_angles;
    } else if (config.gamma > 0.0) {
        series =
            coherence_series(dephase(density_from_state(cat_state()), config.gamma, config.steps));
        document["model"] = "dephasing";
    } else {
        throw parse_error("decohere needs --env-qubits >= 1 or --gamma > 0");
    }

    const BranchReport report = branch_stability(series, threshold);
    Json samples = Json::array();
    for (const CoherenceSample& sample : series.samples) {
        Json s;
        s["t"] = sample.t;
        s["offdiag_norm"] = sample.offdiag_norm;
        samples.push_back(std::move(s));
    }
    document["series"] = std::move(samples);
    document["classification"] = std::string(to_string(report.classification));
    document["window"] = report.window;
    return document;
}

Json audit_report(const RunConfig& config) {
    const BooleanFunction f = load_function(config);
    const double threshold =
        config.threshold > 0.0 ? config.threshold : kDefaultWorldThreshold;
    const RegisterLayout layout{f.n, 1};
    const CircuitRun run = run_dj_circuit(f, config.seed);
    const InformationAudit audit = audit_information(run.trace, layout);
    const StorageBoundReport bound = storage_retrieval_bound(f.n);

    Json document;
    document["format_version"] = kReportFormatVersion;
    document["command"] = config.command;
    document["config"] = config_echo(config, &f, threshold);

    Json audit_block;
    audit_block["worlds_max"] = audit.worlds_max;
    audit_block["bits_per_world"] = audit.bits_per_world;
    audit_block["classical_bits_to_describe"] = audit.classical_bits_to_describe;
    audit_block["retrievable_bits"] = audit.retrievable_bits;
    document["audit"] = std::move(audit_block);

    Json bound_block;
    bound_block["n_qubits"] = bound.n_qubits;
    bound_block["max_retrievable_bits"] = bound.max_retrievable_bits;
    bound_block["within_bound"] = bound.within_bound;
    document["storage_bound"] = std::move(bound_block);
    return document;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        Json document;
        if (config.command == "deutsch") {
            document = deutsch_report(config, true);
        } else if (config.command == "dj") {
            document = deutsch_report(config, false);
        } else if (config.command == "worlds-trace") {
            document = worlds_trace_report(config);
        } else if (config.command == "decohere") {
            document = decohere_report(config);
        } else if (config.command == "audit") {
            document = audit_report(config);
        } else {
            err << "unknown command: " << config.command << "\n";
            return kExitUsage;
        }

        // The document is complete before a single byte is written, so a
        // failure can never leave a truncated report behind.
        const std::string text = dump_report(document);
        if (config.output_path.empty()) {
            out << text;
        } else {
            std::ofstream file(config.output_path, std::ios::binary);
            if (!file) {
                err << "cannot open output file: " << config.output_path << "\n";
                return 1;
            }
            file << text;
        }
        return kExitOk;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputFormat;
    } catch (const promise_violation_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitPromiseViolation;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputFormat;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputFormat;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"state-vector quantum simulator with computational-world tracking"};
    app.require_subcommand(1);

    RunConfig config;
    const auto add_function_options = [&config](CLI::App* cmd) {
        cmd->add_option("--f", config.function_source,
                        "truth table: 2^n bits inline, or @path to a file");
        cmd->add_option("--n", config.n, "expected input-bit count of the truth table");
        cmd->add_option("--seed", config.seed, "sampling seed");
        cmd->add_option("--threshold", config.threshold, "world weight threshold");
        cmd->add_option("--out", config.output_path, "report output path (default stdout)");
    };

    add_function_options(
        app.add_subcommand("deutsch", "run the two-qubit query algorithm and trace its worlds"));
    add_function_options(
        app.add_subcommand("dj", "run the n-qubit query algorithm and trace its worlds"));
    add_function_options(app.add_subcommand(
        "worlds-trace", "trace world structure through the circuit without a verdict"));
    add_function_options(app.add_subcommand(
        "audit", "information accounting: world counts, entropies, storage bound"));

    CLI::App* decohere =
        app.add_subcommand("decohere", "cat-state decoherence: dephasing or environment model");
    decohere->add_option("--gamma", config.gamma, "dephasing rate per step");
    decohere->add_option("--env-qubits", config.env_qubits, "environment size");
    decohere->add_option("--steps", config.steps, "evolution steps");
    decohere->add_option("--seed", config.seed, "sampling seed");
    decohere->add_option("--threshold", config.threshold, "branch off-diagonal threshold");
    decohere->add_option("--out", config.output_path, "report output path (default stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qcw");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    config.command = app.get_subcommands().front()->get_name();
    return run_command(config, out, err);
}

}  // namespace qcw
