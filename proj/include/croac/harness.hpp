#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "croac/benchmarks.hpp"
#include "croac/config.hpp"
#include "croac/reactor.hpp"
#include "croac/stats.hpp"

namespace croac {

// One experiment cell request: which function, which algorithm, one seed.
struct RunRequest {
    int function_id = 1;
    Variant algorithm = Variant::CroAc;
    int dim = 30;
    std::int64_t max_fe = 300000;
    std::uint64_t seed = 0;
    std::optional<BoundaryScheme> boundary;
    std::string spec_dir;  // empty -> generate the benchmark from the seed
    bool griewank_sqrt = false;
};

// Benchmark instance for the request: loaded from spec_dir when set,
// otherwise generated deterministically from (master_seed, function).
BenchmarkSpec resolve_spec(int function_id, int dim, std::uint64_t master_seed,
                           const std::string& spec_dir, bool griewank_sqrt);

RunRecord execute_run(const RunRequest& req);

// Deterministic serialization of one run; wall time is deliberately left out
// so repeated runs produce byte-identical files.
std::string run_record_to_json(const RunRequest& req, const RunRecord& rec);
void write_run_record(const RunRequest& req, const RunRecord& rec,
                      const std::string& path);
RunRecord load_run_record(const std::string& path);

void write_coll_rate_trace(const RunRecord& rec, const std::string& path);

struct SuiteConfig {
    std::vector<int> functions;        // default: f1..f16
    std::vector<Variant> algorithms;   // first entry is the t-test baseline
    int runs = 51;
    std::int64_t max_fe = 300000;
    int dim = 30;
    std::uint64_t master_seed = 0;
    std::string output_dir = "results";
    std::string spec_dir;  // empty -> generate
    std::optional<BoundaryScheme> boundary;
    bool griewank_sqrt = false;
    int jobs = 1;

    void validate() const;
};

struct CellResult {
    int function_id = 0;
    Variant algorithm = Variant::CroAc;
    SampleSummary summary;       // over the successful runs
    double t_vs_baseline = 0.0;  // t(baseline, this); NaN for the baseline row
    bool significant = false;
    int failures = 0;
    std::string first_error;
};

struct SuiteResult {
    SuiteConfig config;
    std::vector<CellResult> cells;  // function-major, algorithm order as configured
};

// Runs the full grid. Per-run seeds come from derive_run_seed(master, f, a, i),
// so results are independent of execution order and of the jobs count.
SuiteResult run_suite(const SuiteConfig& cfg);

std::string suite_to_csv(const SuiteResult& result);
std::string suite_to_table(const SuiteResult& result);
void write_suite_outputs(const SuiteResult& result, const std::string& dir);

// Re-parse of the machine-readable results file.
struct SuiteCsvRow {
    std::string function;
    std::string algorithm;
    double mean = 0.0;
    double std_dev = 0.0;
    std::optional<double> t_vs_baseline;
    std::optional<bool> significant;
    int runs = 0;
    std::int64_t max_fe = 0;
    int failures = 0;
};
std::vector<SuiteCsvRow> load_suite_csv(const std::string& path);

// Writes f1.spec .. f16.spec into out_dir; byte-identical for equal
// (dim, seed).
void gen_data(int dim, std::uint64_t seed, const std::string& out_dir,
              bool griewank_sqrt = false);

}  // namespace croac
