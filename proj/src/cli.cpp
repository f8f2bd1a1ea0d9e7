#include "runnerbench/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "runnerbench/benchmarks.hpp"
#include "runnerbench/format.hpp"
#include "runnerbench/harness.hpp"
#include "runnerbench/mppa.hpp"

namespace runnerbench::cli {
namespace {

struct SolverFlags {
    int np = 75;
    int n_max = 5;
    int runners = 5;
    int colony = 0;
    std::uint64_t limit = 0;
    double mr = 0.4;

    harness::SolverSettings settings() const { return {np, n_max, runners, colony, limit, mr}; }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
    cmd->add_option("--np", flags.np, "Population size")->capture_default_str();
    cmd->add_option("--n-max", flags.n_max, "Max runners per plant (ppa)")->capture_default_str();
    cmd->add_option("--runners", flags.runners, "Fixed runners per plant (mppa)")
        ->capture_default_str();
    cmd->add_option("--colony", flags.colony, "Food sources (abc/mabc); 0 = ceil(np/2)")
        ->capture_default_str();
    cmd->add_option("--limit", flags.limit, "Abandonment limit (abc); 0 = colony*dim")
        ->capture_default_str();
    cmd->add_option("--mr", flags.mr, "Per-coordinate modification rate (mabc)")
        ->capture_default_str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << content;
    if (!file) throw std::runtime_error("failed writing output file '" + path + "'");
}

int env_threads() {
    const char* env = std::getenv("RUNNERBENCH_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    try {
        const int threads = std::stoi(env);
        if (threads < 1) throw std::invalid_argument("non-positive");
        return threads;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("RUNNERBENCH_THREADS must be a positive integer, got '") +
                                 env + "'");
    }
}

int run_solve(const std::string& algo_name, int fn, int dim_flag, std::uint64_t max_eval_flag,
              std::uint64_t max_gen, std::uint64_t seed, const SolverFlags& flags,
              const std::string& trace_file, const std::string& out_file,
              const std::string& format, std::ostream& out) {
    const harness::Algorithm algo = harness::algorithm_from_string(algo_name);
    const bench::FunctionInfo& info = bench::lookup(fn);
    const int dim = dim_flag != 0 ? dim_flag : (info.fixed_dim != 0 ? info.fixed_dim : 30);
    const std::uint64_t max_eval =
        max_eval_flag != 0 ? max_eval_flag : static_cast<std::uint64_t>(dim) * 5000u;

    const Problem problem = bench::make_problem(fn, dim);
    mppa::PerturbationTrace trace;
    mppa::PerturbationTrace* trace_ptr = trace_file.empty() ? nullptr : &trace;

    const RunReport report =
        harness::run_single(algo, problem, flags.settings(), max_eval, max_gen, seed, trace_ptr);

    if (trace_ptr != nullptr) {
        std::ostringstream buffer;
        mppa::write_trace_csv(buffer, trace);
        write_file(trace_file, buffer.str());
    }
    if (!out_file.empty()) {
        write_file(out_file, format == "csv" ? harness::export_run_csv(report)
                                             : harness::export_run_json(report));
    }
    out << "algo=" << to_string(algo) << " fn=" << problem.id() << " name=" << problem.name()
        << " dim=" << problem.dim() << " best=" << format_double(report.best_objective)
        << " n_eval=" << report.evaluations << " seed=" << report.seed << '\n';
    return 0;
}

int run_bench(harness::ExperimentPlan plan, const std::string& out_file,
              const std::string& format, std::ostream& out) {
    const harness::ReportFormat report_format = harness::format_from_string(format);
    const harness::ExperimentReport report = harness::run_experiment(plan, env_threads());
    write_file(out_file, harness::export_report(report, report_format));
    const std::string manifest_file = out_file + ".manifest.json";
    write_file(manifest_file, harness::export_manifest(plan));
    out << "cells=" << report.cells.size() << " runs=" << plan.runs << " out=" << out_file
        << " manifest=" << manifest_file << '\n';
    return 0;
}

int run_functions(const std::string& format, const std::string& suite, std::ostream& out) {
    std::vector<bench::FunctionInfo> rows;
    if (suite == "main" || suite == "all") {
        for (const auto& info : bench::catalogue()) rows.push_back(info);
    }
    if (suite == "table4" || suite == "all") {
        for (const auto& info : bench::dim2_catalogue()) rows.push_back(info);
    }
    if (format == "csv") {
        out << "id,name,lower,upper,class,min\n";
        for (const auto& info : rows) {
            out << info.id << ',' << info.name << ',' << format_double(info.lower) << ','
                << format_double(info.upper) << ',' << bench::to_string(info.cls) << ','
                << format_double(info.min_value) << '\n';
        }
    } else {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& info : rows) {
            doc.push_back({{"id", info.id},
                           {"name", std::string(info.name)},
                           {"lower", info.lower},
                           {"upper", info.upper},
                           {"class", std::string(bench::to_string(info.cls))},
                           {"min", info.min_value}});
        }
        out << doc.dump(2) << '\n';
    }
    return 0;
}

int run_trace(const std::string& in_file, int bins, const std::string& out_file,
              std::ostream& out) {
    std::ifstream file(in_file, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open trace file '" + in_file + "'");
    const mppa::PerturbationTrace trace = mppa::read_trace_csv(file);
    const mppa::TraceHistogram histogram = mppa::trace_histogram(trace, bins);

    std::ostringstream csv;
    csv << "equation,bin,lo,hi,count\n";
    for (const auto& eq : histogram.equations) {
        for (std::size_t b = 0; b < eq.counts.size(); ++b) {
            csv << eq.equation << ',' << b << ',' << format_double(eq.bin_width * b) << ','
                << format_double(eq.bin_width * (b + 1)) << ',' << eq.counts[b] << '\n';
        }
    }
    if (out_file.empty()) {
        out << csv.str();
    } else {
        write_file(out_file, csv.str());
        out << "bins=" << bins << " equations=" << histogram.equations.size()
            << " out=" << out_file << '\n';
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Population-based optimizers (ppa, mppa, abc, mabc) over a benchmark registry"};
    app.require_subcommand(1);

    const std::vector<std::string> algo_names{"ppa", "mppa", "abc", "mabc"};

    // solve
    auto* solve = app.add_subcommand("solve", "Run one solver on one function");
    std::string solve_algo;
    int solve_fn = 0;
    int solve_dim = 0;
    std::uint64_t solve_max_eval = 0;
    std::uint64_t solve_max_gen = kGenerationSentinel;
    std::uint64_t solve_seed = 1;
    SolverFlags solve_flags;
    std::string solve_trace;
    std::string solve_out;
    std::string solve_format = "json";
    solve->add_option("--algo", solve_algo, "Solver to run")
        ->required()
        ->check(CLI::IsMember(algo_names));
    solve->add_option("--fn", solve_fn, "Function id (1..18, 101..108)")->required();
    solve->add_option("--dim", solve_dim, "Dimension; default 30 (2 for the 2-D classics)");
    solve->add_option("--max-eval", solve_max_eval, "Evaluation budget; default dim*5000");
    solve->add_option("--max-gen", solve_max_gen, "Generation cap")->capture_default_str();
    solve->add_option("--seed", solve_seed, "RNG seed")->capture_default_str();
    add_solver_flags(solve, solve_flags);
    solve->add_option("--trace", solve_trace, "Write a perturbation trace CSV (mppa only)");
    auto* solve_out_opt = solve->add_option("--out", solve_out, "Write the run report to a file");
    solve->add_option("--format", solve_format, "Run report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->needs(solve_out_opt)
        ->capture_default_str();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run an experiment grid and export statistics");
    std::vector<std::string> bench_algos{"mppa"};
    std::vector<int> bench_fns;
    std::vector<int> bench_dims;
    int bench_runs = 30;
    std::uint64_t bench_seed = 1;
    std::uint64_t bench_max_eval = 0;
    std::uint64_t bench_max_gen = kGenerationSentinel;
    SolverFlags bench_flags;
    std::string bench_suite;
    std::string bench_out;
    std::string bench_format = "csv";
    bench_cmd->add_option("--algos", bench_algos, "Solvers to compare")
        ->transform(CLI::IsMember(algo_names))
        ->delimiter(',')
        ->capture_default_str();
    auto* bench_fns_opt =
        bench_cmd->add_option("--fns", bench_fns, "Function ids; default 1..18")->delimiter(',');
    auto* bench_dims_opt =
        bench_cmd->add_option("--dims", bench_dims, "Dimensions; default 30,60,100")->delimiter(',');
    auto* bench_runs_opt =
        bench_cmd->add_option("--runs", bench_runs, "Runs per cell")->capture_default_str();
    bench_cmd->add_option("--seed", bench_seed, "Base seed; run k uses seed+k")
        ->capture_default_str();
    bench_cmd->add_option("--max-eval", bench_max_eval, "Budget override; default dim*5000");
    bench_cmd->add_option("--max-gen", bench_max_gen, "Generation cap")->capture_default_str();
    add_solver_flags(bench_cmd, bench_flags);
    bench_cmd->add_option("--suite", bench_suite, "Preset grid: table4 = 2-D classics, 10 runs")
        ->check(CLI::IsMember({"table4"}))
        ->excludes(bench_fns_opt)
        ->excludes(bench_dims_opt);
    bench_cmd->add_option("--out", bench_out, "Report file")->required();
    bench_cmd->add_option("--format", bench_format, "Report format")
        ->check(CLI::IsMember({"csv", "json", "markdown"}))
        ->capture_default_str();

    // functions
    auto* functions = app.add_subcommand("functions", "List the benchmark registry");
    std::string functions_format = "csv";
    std::string functions_suite = "main";
    functions->add_option("--format", functions_format, "Listing format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    functions->add_option("--suite", functions_suite, "Which registry to list")
        ->check(CLI::IsMember({"main", "table4", "all"}))
        ->capture_default_str();

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "Convert a trace CSV into per-equation histograms");
    std::string trace_in;
    int trace_bins = 20;
    std::string trace_out;
    trace_cmd->add_option("--in", trace_in, "Trace CSV produced by solve --trace")->required();
    trace_cmd->add_option("--bins", trace_bins, "Histogram bins")->capture_default_str();
    trace_cmd->add_option("--out", trace_out, "Histogram CSV file; default stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("runnerbench");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    // Cross-flag rules CLI11 cannot express directly.
    if (solve->parsed() && !solve_trace.empty() && solve_algo != "mppa") {
        err << "--trace requires --algo mppa\n";
        return 1;
    }

    try {
        if (solve->parsed()) {
            return run_solve(solve_algo, solve_fn, solve_dim, solve_max_eval, solve_max_gen,
                             solve_seed, solve_flags, solve_trace, solve_out, solve_format, out);
        }
        if (bench_cmd->parsed()) {
            harness::ExperimentPlan plan;
            plan.algorithms.clear();
            for (const std::string& name : bench_algos) {
                plan.algorithms.push_back(harness::algorithm_from_string(name));
            }
            if (bench_suite == "table4") {
                plan.function_ids.resize(bench::dim2_catalogue().size());
                std::iota(plan.function_ids.begin(), plan.function_ids.end(), 101);
                plan.dims = {2};
                plan.runs = bench_runs_opt->count() > 0 ? bench_runs : 10;
            } else {
                if (bench_fns_opt->count() > 0) {
                    plan.function_ids = bench_fns;
                } else {
                    plan.function_ids.resize(bench::catalogue().size());
                    std::iota(plan.function_ids.begin(), plan.function_ids.end(), 1);
                }
                plan.dims = bench_dims_opt->count() > 0 ? bench_dims : std::vector<int>{30, 60, 100};
                plan.runs = bench_runs;
            }
            plan.base_seed = bench_seed;
            plan.max_eval_override = bench_max_eval;
            plan.max_gen = bench_max_gen;
            plan.solver = bench_flags.settings();
            return run_bench(std::move(plan), bench_out, bench_format, out);
        }
        if (functions->parsed()) {
            return run_functions(functions_format, functions_suite, out);
        }
        if (trace_cmd->parsed()) {
            return run_trace(trace_in, trace_bins, trace_out, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand given\n";
    return 1;
}

} // namespace runnerbench::cli
