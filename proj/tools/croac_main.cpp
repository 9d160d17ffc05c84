// Command line harness: single runs, full suites and benchmark-data
// generation. Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "croac/harness.hpp"

namespace {

using namespace croac;

std::vector<std::string> all_function_names() {
    std::vector<std::string> names;
    for (int id = 1; id <= 16; ++id) names.push_back(function_name(id));
    return names;
}

std::vector<std::string> all_variant_names() {
    std::vector<std::string> names;
    for (Variant v : {Variant::CroAc, Variant::CroAc02, Variant::CroAc1Step,
                      Variant::CroBp, Variant::CroHp, Variant::CroBb}) {
        names.push_back(variant_name(v));
    }
    return names;
}

struct RunArgs {
    std::string function = "f1";
    std::string algorithm = "cro-ac";
    std::uint64_t seed = 0;
    std::int64_t max_fe = 300000;
    int dim = 30;
    bool trace = false;
    std::string out = ".";
    std::string spec_dir;
    std::string boundary;
    bool griewank_sqrt = false;
};

int do_run(const RunArgs& args) {
    RunRequest req;
    req.function_id = parse_function_id(args.function);
    req.algorithm = parse_variant(args.algorithm);
    req.dim = args.dim;
    req.max_fe = args.max_fe;
    req.seed = args.seed;
    req.spec_dir = args.spec_dir;
    req.griewank_sqrt = args.griewank_sqrt;
    if (!args.boundary.empty()) req.boundary = parse_boundary(args.boundary);

    const RunRecord rec = execute_run(req);

    std::filesystem::create_directories(args.out);
    const std::string stem = args.function + "_" + args.algorithm + "_seed" +
                             std::to_string(args.seed);
    const auto record_path = std::filesystem::path(args.out) / (stem + ".json");
    write_run_record(req, rec, record_path.string());
    if (args.trace) {
        const auto trace_path =
            std::filesystem::path(args.out) / ("trace_" + stem + ".csv");
        write_coll_rate_trace(rec, trace_path.string());
    }

    std::cout << args.function << " " << args.algorithm << " seed=" << args.seed
              << " best=" << rec.best_value << " (raw " << rec.best_value_raw
              << ") fe=" << rec.fe_used << " wall=" << rec.wall_time << "s\n"
              << "record: " << record_path.string() << "\n";
    return 0;
}

struct SuiteArgs {
    std::vector<std::string> functions;
    std::vector<std::string> algorithms;
    int runs = 51;
    std::int64_t max_fe = 300000;
    int dim = 30;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out = "results";
    std::string spec_dir;
    std::string boundary;
    bool griewank_sqrt = false;
};

int do_suite(const SuiteArgs& args) {
    SuiteConfig cfg;
    const auto functions = args.functions.empty() ? all_function_names() : args.functions;
    for (const std::string& f : functions) cfg.functions.push_back(parse_function_id(f));
    const auto algorithms =
        args.algorithms.empty()
            ? std::vector<std::string>{"cro-ac", "cro-bp", "cro-bb", "cro-hp"}
            : args.algorithms;
    for (const std::string& a : algorithms) cfg.algorithms.push_back(parse_variant(a));
    cfg.runs = args.runs;
    cfg.max_fe = args.max_fe;
    cfg.dim = args.dim;
    cfg.master_seed = args.seed;
    cfg.output_dir = args.out;
    cfg.spec_dir = args.spec_dir;
    cfg.jobs = args.jobs;
    cfg.griewank_sqrt = args.griewank_sqrt;
    if (!args.boundary.empty()) cfg.boundary = parse_boundary(args.boundary);

    const SuiteResult result = run_suite(cfg);
    write_suite_outputs(result, cfg.output_dir);
    std::cout << suite_to_table(result);
    std::cout << "results written to " << cfg.output_dir << "/results.{csv,txt}\n";

    for (const CellResult& cell : result.cells) {
        if (cell.failures > 0) {
            std::cerr << "warning: " << function_name(cell.function_id) << "/"
                      << variant_name(cell.algorithm) << ": " << cell.failures
                      << " failed runs (first: " << cell.first_error << ")\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chemical reaction optimization harness"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run_cmd = app.add_subcommand("run", "Execute a single optimization run");
    run_cmd->add_option("--function", run_args.function, "Benchmark function (f1..f16)")
        ->check(CLI::IsMember(all_function_names()));
    run_cmd->add_option("--algorithm", run_args.algorithm, "Algorithm variant")
        ->check(CLI::IsMember(all_variant_names()));
    run_cmd->add_option("--seed", run_args.seed, "Run seed");
    run_cmd->add_option("--max-fe", run_args.max_fe, "Evaluation budget")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--dim", run_args.dim, "Problem dimension")
        ->check(CLI::Range(2, 1000));
    run_cmd->add_flag("--trace", run_args.trace, "Write the collision-rate trace");
    run_cmd->add_option("--out", run_args.out, "Output directory");
    run_cmd->add_option("--spec-dir", run_args.spec_dir,
                        "Load benchmark specs from this directory");
    run_cmd->add_option("--boundary", run_args.boundary,
                        "Boundary scheme (reflect, clip, resample)")
        ->check(CLI::IsMember({"reflect", "clip", "resample"}));
    run_cmd->add_flag("--griewank-sqrt", run_args.griewank_sqrt,
                      "Use sqrt(i) divisors in the Griewank product");

    SuiteArgs suite_args;
    CLI::App* suite_cmd = app.add_subcommand("suite", "Run a benchmark suite");
    suite_cmd->add_option("--function", suite_args.functions,
                          "Functions to include (default: all)")
        ->check(CLI::IsMember(all_function_names()));
    suite_cmd->add_option("--algorithm", suite_args.algorithms,
                          "Algorithms to compare; first is the t-test baseline "
                          "(default: cro-ac cro-bp cro-bb cro-hp)")
        ->check(CLI::IsMember(all_variant_names()));
    suite_cmd->add_option("--runs", suite_args.runs, "Independent runs per cell")
        ->check(CLI::PositiveNumber);
    suite_cmd->add_option("--max-fe", suite_args.max_fe, "Evaluation budget per run")
        ->check(CLI::PositiveNumber);
    suite_cmd->add_option("--dim", suite_args.dim, "Problem dimension")
        ->check(CLI::Range(2, 1000));
    suite_cmd->add_option("--seed", suite_args.seed, "Master seed");
    suite_cmd->add_option("--jobs", suite_args.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    suite_cmd->add_option("--out", suite_args.out, "Output directory");
    suite_cmd->add_option("--spec-dir", suite_args.spec_dir,
                          "Load benchmark specs from this directory");
    suite_cmd->add_option("--boundary", suite_args.boundary,
                          "Boundary scheme override")
        ->check(CLI::IsMember({"reflect", "clip", "resample"}));
    suite_cmd->add_flag("--griewank-sqrt", suite_args.griewank_sqrt,
                        "Use sqrt(i) divisors in the Griewank product");

    struct {
        int dim = 30;
        std::uint64_t seed = 0;
        std::string out = "specs";
        bool griewank_sqrt = false;
    } gen_args;
    CLI::App* gen_cmd =
        app.add_subcommand("gen-data", "Write the 16 benchmark spec files");
    gen_cmd->add_option("--dim", gen_args.dim, "Problem dimension")
        ->check(CLI::Range(2, 1000));
    gen_cmd->add_option("--seed", gen_args.seed, "Generation seed");
    gen_cmd->add_option("--out", gen_args.out, "Output directory");
    gen_cmd->add_flag("--griewank-sqrt", gen_args.griewank_sqrt,
                      "Use sqrt(i) divisors in the Griewank product");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed()) return do_run(run_args);
        if (suite_cmd->parsed()) return do_suite(suite_args);
        if (gen_cmd->parsed()) {
            croac::gen_data(gen_args.dim, gen_args.seed, gen_args.out,
                            gen_args.griewank_sqrt);
            std::cout << "wrote 16 spec files to " << gen_args.out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
