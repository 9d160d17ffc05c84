#include "croac/harness.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "croac/rng.hpp"

namespace croac {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt_full(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

std::string fmt_sci(double v) {
    if (std::isinf(v)) return "dominant";
    if (std::isnan(v)) return "-";
    std::ostringstream out;
    out << std::scientific << std::setprecision(4) << v;
    return out.str();
}

double parse_double(const std::string& tok) {
    if (tok == "inf") return std::numeric_limits<double>::infinity();
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    if (tok == "nan") return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::runtime_error("malformed number '" + tok + "'");
    }
    return v;
}

void ensure_dir(const std::string& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

BenchmarkSpec resolve_spec(int function_id, int dim, std::uint64_t master_seed,
                           const std::string& spec_dir, bool griewank_sqrt) {
    if (!spec_dir.empty()) {
        const fs::path path = fs::path(spec_dir) / (function_name(function_id) + ".spec");
        BenchmarkSpec spec = load_spec(path.string());
        if (spec.id != function_id) {
            throw std::runtime_error("spec file " + path.string() + " holds " +
                                     function_name(spec.id) + ", expected " +
                                     function_name(function_id));
        }
        if (spec.dim != dim) {
            throw std::runtime_error("spec file " + path.string() + " has dim " +
                                     std::to_string(spec.dim) + ", expected " +
                                     std::to_string(dim));
        }
        return spec;
    }
    BenchmarkSpec spec = generate_spec(function_id, dim, derive_spec_seed(master_seed));
    spec.griewank_sqrt_divisor = griewank_sqrt;
    return spec;
}

RunRecord execute_run(const RunRequest& req) {
    const BenchmarkSpec spec = resolve_spec(req.function_id, req.dim, req.seed,
                                            req.spec_dir, req.griewank_sqrt);
    AlgorithmConfig cfg;
    cfg.variant = req.algorithm;
    cfg.max_fe = req.max_fe;
    cfg.boundary = req.boundary;
    cfg.seed = req.seed;
    return run(cfg, spec);
}

std::string run_record_to_json(const RunRequest& req, const RunRecord& rec) {
    ordered_json j;
    j["format"] = "croac-run v1";
    j["function"] = function_name(req.function_id);
    j["algorithm"] = variant_name(req.algorithm);
    j["dim"] = req.dim;
    j["max_fe"] = req.max_fe;
    j["seed"] = rec.seed;
    j["boundary"] = boundary_name(AlgorithmConfig{.variant = req.algorithm,
                                                  .boundary = req.boundary}
                                      .boundary_scheme());
    j["fe_used"] = rec.fe_used;
    j["best_value"] = rec.best_value;
    j["best_value_raw"] = rec.best_value_raw;
    j["nonfinite_rejections"] = rec.nonfinite_rejections;
    j["best_structure"] = rec.best_structure;
    auto pairs = ordered_json::array();
    for (const auto& [fe, v] : rec.best_trajectory) pairs.push_back({fe, v});
    j["best_trajectory"] = std::move(pairs);
    auto trace = ordered_json::array();
    for (const auto& [it, v] : rec.coll_rate_trace) trace.push_back({it, v});
    j["coll_rate_trace"] = std::move(trace);
    // wall time is intentionally absent: records must be byte-reproducible
    return j.dump(2) + "\n";
}

void write_run_record(const RunRequest& req, const RunRecord& rec,
                      const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) throw std::runtime_error("cannot write run record: " + path);
    out << run_record_to_json(req, rec);
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

RunRecord load_run_record(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open run record: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed run record " + path + ": " + e.what());
    }
    RunRecord rec;
    rec.best_value = j.at("best_value").get<double>();
    rec.best_value_raw = j.at("best_value_raw").get<double>();
    rec.fe_used = j.at("fe_used").get<std::int64_t>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.nonfinite_rejections = j.at("nonfinite_rejections").get<std::int64_t>();
    rec.best_structure = j.at("best_structure").get<std::vector<double>>();
    for (const auto& p : j.at("best_trajectory")) {
        rec.best_trajectory.emplace_back(p.at(0).get<std::int64_t>(), p.at(1).get<double>());
    }
    for (const auto& p : j.at("coll_rate_trace")) {
        rec.coll_rate_trace.emplace_back(p.at(0).get<std::int64_t>(), p.at(1).get<double>());
    }
    return rec;
}

void write_coll_rate_trace(const RunRecord& rec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) throw std::runtime_error("cannot write trace file: " + path);
    for (const auto& [iteration, rate] : rec.coll_rate_trace) {
        out << iteration << ',' << fmt_full(rate) << '\n';
    }
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

void SuiteConfig::validate() const {
    if (functions.empty()) throw std::invalid_argument("suite: no functions selected");
    for (int f : functions) function_name(f);  // range check
    if (algorithms.empty()) throw std::invalid_argument("suite: no algorithms selected");
    if (runs < 1) throw std::invalid_argument("suite: runs must be >= 1");
    if (dim < 2) throw std::invalid_argument("suite: dim must be >= 2");
    if (jobs < 1) throw std::invalid_argument("suite: jobs must be >= 1");
}

SuiteResult run_suite(const SuiteConfig& cfg) {
    cfg.validate();

    struct Task {
        std::size_t cell;
        int run_index;
    };
    const std::size_t n_algorithms = cfg.algorithms.size();
    const std::size_t n_cells = cfg.functions.size() * n_algorithms;

    // Specs are fixed per function across all algorithms and runs.
    std::vector<BenchmarkSpec> specs;
    specs.reserve(cfg.functions.size());
    for (int f : cfg.functions) {
        specs.push_back(resolve_spec(f, cfg.dim, cfg.master_seed, cfg.spec_dir,
                                     cfg.griewank_sqrt));
    }

    std::vector<Task> tasks;
    tasks.reserve(n_cells * static_cast<std::size_t>(cfg.runs));
    for (std::size_t c = 0; c < n_cells; ++c) {
        for (int r = 0; r < cfg.runs; ++r) tasks.push_back({c, r});
    }

    std::vector<std::vector<double>> values(n_cells,
                                            std::vector<double>(cfg.runs, 0.0));
    std::vector<std::vector<std::string>> errors(
        n_cells, std::vector<std::string>(cfg.runs));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            const Task task = tasks[k];
            const std::size_t fi = task.cell / n_algorithms;
            const std::size_t ai = task.cell % n_algorithms;
            const int function_id = cfg.functions[fi];
            const Variant algorithm = cfg.algorithms[ai];
            try {
                AlgorithmConfig run_cfg;
                run_cfg.variant = algorithm;
                run_cfg.max_fe = cfg.max_fe;
                run_cfg.boundary = cfg.boundary;
                run_cfg.seed = derive_run_seed(cfg.master_seed, function_id,
                                               static_cast<int>(algorithm),
                                               task.run_index);
                const RunRecord rec = run(run_cfg, specs[fi]);
                values[task.cell][task.run_index] = rec.best_value;
            } catch (const std::exception& e) {
                errors[task.cell][task.run_index] = e.what();
            }
        }
    };

    const int n_threads = std::min<int>(cfg.jobs, static_cast<int>(tasks.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    SuiteResult result;
    result.config = cfg;
    result.cells.resize(n_cells);

    // Baseline summaries per function (first algorithm listed).
    std::vector<SampleSummary> baselines(cfg.functions.size());
    for (std::size_t fi = 0; fi < cfg.functions.size(); ++fi) {
        std::vector<double> ok;
        for (int r = 0; r < cfg.runs; ++r) {
            if (errors[fi * n_algorithms][r].empty()) {
                ok.push_back(values[fi * n_algorithms][r]);
            }
        }
        if (ok.size() >= 2) baselines[fi] = summarize(std::move(ok));
    }

    for (std::size_t c = 0; c < n_cells; ++c) {
        const std::size_t fi = c / n_algorithms;
        const std::size_t ai = c % n_algorithms;
        CellResult& cell = result.cells[c];
        cell.function_id = cfg.functions[fi];
        cell.algorithm = cfg.algorithms[ai];

        std::vector<double> ok;
        for (int r = 0; r < cfg.runs; ++r) {
            if (errors[c][r].empty()) {
                ok.push_back(values[c][r]);
            } else {
                cell.failures += 1;
                if (cell.first_error.empty()) cell.first_error = errors[c][r];
            }
        }
        cell.t_vs_baseline = std::numeric_limits<double>::quiet_NaN();
        if (ok.size() >= 2) {
            cell.summary = summarize(std::move(ok));
            if (ai != 0 && baselines[fi].n >= 2) {
                // t(baseline, cell): negative means the baseline is better.
                cell.t_vs_baseline = t_statistic(baselines[fi], cell.summary);
                cell.significant = significant_95(cell.t_vs_baseline,
                                                  baselines[fi].n, cell.summary.n);
            }
        }
    }
    return result;
}

std::string suite_to_csv(const SuiteResult& result) {
    std::ostringstream out;
    out << "function,algorithm,mean,std_dev,t_vs_baseline,significant,runs,max_fe,failures\n";
    for (const CellResult& cell : result.cells) {
        out << function_name(cell.function_id) << ',' << variant_name(cell.algorithm)
            << ',';
        if (cell.summary.n >= 2) {
            out << fmt_full(cell.summary.mean) << ',' << fmt_full(cell.summary.std_dev);
        } else {
            out << ',';
        }
        out << ',';
        if (!std::isnan(cell.t_vs_baseline)) {
            out << fmt_full(cell.t_vs_baseline) << ','
                << (cell.significant ? '1' : '0');
        } else {
            out << ',';
        }
        out << ',' << result.config.runs << ',' << result.config.max_fe << ','
            << cell.failures << '\n';
    }
    return out.str();
}

std::string suite_to_table(const SuiteResult& result) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "func" << std::setw(14) << "algorithm"
        << std::setw(14) << "mean" << std::setw(14) << "std_dev" << std::setw(14)
        << "t_vs_base" << std::setw(6) << "sig" << std::setw(6) << "fail" << '\n';
    for (const CellResult& cell : result.cells) {
        out << std::left << std::setw(6) << function_name(cell.function_id)
            << std::setw(14) << variant_name(cell.algorithm);
        if (cell.summary.n >= 2) {
            out << std::setw(14) << fmt_sci(cell.summary.mean) << std::setw(14)
                << fmt_sci(cell.summary.std_dev);
        } else {
            out << std::setw(14) << "-" << std::setw(14) << "-";
        }
        if (!std::isnan(cell.t_vs_baseline)) {
            out << std::setw(14) << fmt_sci(cell.t_vs_baseline) << std::setw(6)
                << (cell.significant ? "yes" : "no");
        } else {
            out << std::setw(14) << "-" << std::setw(6) << "-";
        }
        out << std::setw(6) << cell.failures << '\n';
    }
    return out.str();
}

void write_suite_outputs(const SuiteResult& result, const std::string& dir) {
    ensure_dir(dir);
    {
        std::ofstream out(fs::path(dir) / "results.csv", std::ios::binary);
        if (!out.good()) throw std::runtime_error("cannot write results.csv in " + dir);
        out << suite_to_csv(result);
    }
    {
        std::ofstream out(fs::path(dir) / "results.txt", std::ios::binary);
        if (!out.good()) throw std::runtime_error("cannot write results.txt in " + dir);
        out << suite_to_table(result);
    }
}

std::vector<SuiteCsvRow> load_suite_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open results file: " + path);
    std::string line;
    if (!std::getline(in, line) ||
        line != "function,algorithm,mean,std_dev,t_vs_baseline,significant,runs,max_fe,failures") {
        throw std::runtime_error("results file " + path + ": unexpected header");
    }
    std::vector<SuiteCsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 9) {
            throw std::runtime_error("results file " + path + ": malformed row '" + line + "'");
        }
        SuiteCsvRow row;
        row.function = f[0];
        row.algorithm = f[1];
        row.mean = f[2].empty() ? std::numeric_limits<double>::quiet_NaN() : parse_double(f[2]);
        row.std_dev = f[3].empty() ? std::numeric_limits<double>::quiet_NaN() : parse_double(f[3]);
        if (!f[4].empty()) row.t_vs_baseline = parse_double(f[4]);
        if (!f[5].empty()) row.significant = f[5] == "1";
        row.runs = static_cast<int>(parse_double(f[6]));
        row.max_fe = static_cast<std::int64_t>(parse_double(f[7]));
        row.failures = static_cast<int>(parse_double(f[8]));
        rows.push_back(std::move(row));
    }
    return rows;
}

void gen_data(int dim, std::uint64_t seed, const std::string& out_dir,
              bool griewank_sqrt) {
    ensure_dir(out_dir);
    for (int id = 1; id <= 16; ++id) {
        BenchmarkSpec spec = generate_spec(id, dim, derive_spec_seed(seed));
        spec.griewank_sqrt_divisor = griewank_sqrt;
        save_spec(spec, (fs::path(out_dir) / (function_name(id) + ".spec")).string());
    }
}

}  // namespace croac
