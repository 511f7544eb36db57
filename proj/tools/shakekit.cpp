// shakekit: replay, generate, evaluate, and sweep shake-detection runs
// over accelerometer trace files.

#include <CLI11.hpp>

#include <shakekit/shakekit.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw shakekit::io_error("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw shakekit::io_error("failed reading " + path);
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw shakekit::io_error("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw shakekit::io_error("failed writing " + path);
}

struct ReplayOptions {
    std::string input;
    std::string out;
    double threshold = 0.0;
    std::string sensibility;
    double delay = shakekit::kDefaultDelay;
    bool threshold_given = false;
};

int run_replay(const ReplayOptions& opts) {
    shakekit::DetectorConfig config;
    config.delay = opts.delay;
    if (opts.threshold_given) {
        config.threshold = opts.threshold;
    } else {
        config.threshold =
            shakekit::sensibility_threshold(*shakekit::sensibility_from_string(opts.sensibility));
    }
    config.validate();

    const shakekit::TraceDocument doc = shakekit::parse_trace(read_file(opts.input), opts.input);
    shakekit::EventDocument events{shakekit::process_trace(doc.samples, config), config};
    write_file(opts.out, shakekit::write_events(events));
    std::cout << "samples=" << doc.samples.size() << " events=" << events.events.size()
              << '\n';
    return 0;
}

struct GenerateOptions {
    double duration = 0.0;
    double rate = 50.0;
    double noise = 0.0;
    std::string bursts_path;
    std::uint64_t seed = 0;
    std::string out;
    std::string labels_path;
    std::string corpus_dir;
};

int run_generate(const GenerateOptions& opts) {
    if (!opts.corpus_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(opts.corpus_dir, ec);
        if (ec) throw shakekit::io_error("cannot create directory " + opts.corpus_dir);
        for (const shakekit::CorpusEntry& entry : shakekit::standard_corpus(opts.seed)) {
            const auto base = std::filesystem::path(opts.corpus_dir) / entry.name;
            write_file(base.string() + ".csv", shakekit::write_trace(entry.trace));
            write_file(base.string() + ".labels.jsonl", shakekit::write_labels(entry.labels));
            std::cout << entry.name << " samples=" << entry.trace.samples.size()
                      << " labels=" << entry.labels.size() << '\n';
        }
        return 0;
    }

    shakekit::SynthSpec spec;
    spec.total_duration = opts.duration;
    spec.sample_rate = opts.rate;
    spec.noise_sigma = opts.noise;
    spec.seed = opts.seed;
    if (!opts.bursts_path.empty())
        spec.bursts = shakekit::read_labels(read_file(opts.bursts_path));

    const auto [trace, labels] = shakekit::generate_trace(spec);
    write_file(opts.out, shakekit::write_trace(trace));
    if (!opts.labels_path.empty())
        write_file(opts.labels_path, shakekit::write_labels(labels));
    std::cout << "samples=" << trace.samples.size() << " labels=" << labels.size() << '\n';
    return 0;
}

struct EvaluateOptions {
    std::string events_path;
    std::string labels_path;
    double tolerance = shakekit::kDefaultTolerance;
};

int run_evaluate(const EvaluateOptions& opts) {
    const shakekit::EventDocument events = shakekit::read_events(read_file(opts.events_path));
    const auto labels = shakekit::read_labels(read_file(opts.labels_path));
    const shakekit::EvalReport report =
        shakekit::match_events(events.events, labels, opts.tolerance);
    std::cout << shakekit::write_report_json(report) << '\n';
    return 0;
}

struct SweepOptions {
    std::string input;
    std::string labels_path;
    std::vector<double> thresholds;
    std::vector<double> delays;
    std::string out;
    double tolerance = shakekit::kDefaultTolerance;
};

int run_sweep(const SweepOptions& opts) {
    const shakekit::TraceDocument trace = shakekit::parse_trace(read_file(opts.input), opts.input);
    const auto labels = shakekit::read_labels(read_file(opts.labels_path));
    const auto cells =
        shakekit::sweep(trace, labels, opts.thresholds, opts.delays, opts.tolerance);
    write_file(opts.out, shakekit::write_sweep_csv(cells));
    std::cout << "cells=" << cells.size() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shakekit, a shake gesture detection toolkit"};
    app.require_subcommand(1);

    ReplayOptions replay_opts;
    CLI::App* replay = app.add_subcommand(
        "replay", "Run the detector over a trace CSV and write event JSONL");
    replay->add_option("--input", replay_opts.input, "trace CSV to read")->required();
    replay->add_option("--out", replay_opts.out, "event JSONL to write")->required();
    replay->add_option("--delay", replay_opts.delay, "debounce delay in seconds");
    CLI::Option_group* source =
        replay->add_option_group("threshold", "detection threshold source");
    CLI::Option* threshold_opt =
        source->add_option("--threshold", replay_opts.threshold, "threshold in g");
    source->add_option("--sensibility", replay_opts.sensibility, "named preset")
        ->check(CLI::IsMember({"lightest", "light", "normal", "hard", "hardest"}));
    source->require_option(1);

    GenerateOptions gen_opts;
    CLI::App* generate = app.add_subcommand(
        "generate", "Write a synthetic trace CSV and its ground-truth labels");
    CLI::Option* duration_opt =
        generate->add_option("--duration", gen_opts.duration, "trace length in seconds");
    generate->add_option("--rate", gen_opts.rate, "sample rate in Hz");
    generate->add_option("--noise", gen_opts.noise, "noise standard deviation in g");
    generate->add_option("--bursts", gen_opts.bursts_path, "burst spec JSONL to embed");
    generate->add_option("--seed", gen_opts.seed, "random seed");
    CLI::Option* out_opt = generate->add_option("--out", gen_opts.out, "trace CSV to write");
    generate->add_option("--labels", gen_opts.labels_path, "label JSONL to write");
    generate
        ->add_option("--corpus", gen_opts.corpus_dir,
                     "write the standard corpus into this directory instead")
        ->excludes(duration_opt, out_opt);

    EvaluateOptions eval_opts;
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "Score an event JSONL against ground-truth labels");
    evaluate->add_option("--events", eval_opts.events_path, "event JSONL to score")->required();
    evaluate->add_option("--labels", eval_opts.labels_path, "label JSONL")->required();
    evaluate->add_option("--tolerance", eval_opts.tolerance, "match window slack in seconds");

    SweepOptions sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Evaluate a threshold/delay grid over one trace and write CSV");
    sweep_cmd->add_option("--input", sweep_opts.input, "trace CSV to read")->required();
    sweep_cmd->add_option("--labels", sweep_opts.labels_path, "label JSONL")->required();
    sweep_cmd->add_option("--thresholds", sweep_opts.thresholds, "comma-separated g values")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--delays", sweep_opts.delays, "comma-separated seconds")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--out", sweep_opts.out, "sweep CSV to write")->required();
    sweep_cmd->add_option("--tolerance", sweep_opts.tolerance, "match window slack in seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    replay_opts.threshold_given = threshold_opt->count() > 0;
    if (generate->parsed() && gen_opts.corpus_dir.empty()) {
        if (duration_opt->count() == 0 || out_opt->count() == 0) {
            std::cerr << "error: generate requires --duration and --out (or --corpus)\n";
            return kExitUsage;
        }
    }

    try {
        if (replay->parsed()) return run_replay(replay_opts);
        if (generate->parsed()) return run_generate(gen_opts);
        if (evaluate->parsed()) return run_evaluate(eval_opts);
        if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const shakekit::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const shakekit::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
