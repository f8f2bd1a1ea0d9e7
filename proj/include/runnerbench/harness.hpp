#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "runnerbench/benchmarks.hpp"
#include "runnerbench/mppa.hpp"
#include "runnerbench/problem.hpp"

namespace runnerbench::harness {

enum class Algorithm { ppa, mppa, abc, mabc };

Algorithm algorithm_from_string(const std::string& name);
std::string_view to_string(Algorithm algo) noexcept;

/// Solver knobs the experiment plan resolves per run. Zeros mean "derive
/// from np/dim" (colony = ceil(np/2), limit = colony * dim).
struct SolverSettings {
    int np = 75;
    int ppa_n_max = 5;
    int mppa_runners = 5;
    int abc_colony = 0;
    std::uint64_t abc_limit = 0;
    double mabc_mr = 0.4;

    bool operator==(const SolverSettings&) const = default;
};

/// A full experiment: the cross product of algorithms x functions x dims,
/// each cell repeated `runs` times with seeds base_seed + run index.
struct ExperimentPlan {
    std::vector<Algorithm> algorithms{Algorithm::mppa};
    std::vector<int> function_ids;
    std::vector<int> dims{30, 60, 100};
    int runs = 30;
    std::uint64_t base_seed = 1;
    std::uint64_t max_eval_override = 0; ///< 0 keeps the dim*5000 rule
    std::uint64_t max_gen = kGenerationSentinel;
    SolverSettings solver;

    std::uint64_t max_eval_for(int dim) const noexcept {
        return max_eval_override != 0 ? max_eval_override
                                      : static_cast<std::uint64_t>(dim) * 5000u;
    }

    bool operator==(const ExperimentPlan&) const = default;
};

struct CellStats {
    double best = 0.0;
    double worst = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double sd = 0.0;

    bool operator==(const CellStats&) const = default;
};

/// min/max/median/mean and the sample (n-1) standard deviation; sd is 0
/// for a single value. Throws on empty input.
CellStats summarize(std::span<const double> values);

struct RunDetail {
    std::uint64_t seed = 0;
    double best = 0.0;
    std::uint64_t evaluations = 0;
    std::uint64_t generations = 0;

    bool operator==(const RunDetail&) const = default;
};

struct CellResult {
    Algorithm algorithm{};
    int function_id = 0;
    std::string function_name;
    int dim = 0;
    int runs_requested = 0;
    std::uint64_t seed_base = 0;
    std::vector<RunDetail> run_details; ///< successful runs in seed order
    std::vector<RunReport> reports;     ///< full reports, aligned with run_details
    std::vector<std::string> errors;    ///< per-run failure messages
    CellStats stats;
    bool has_stats = false;

    bool operator==(const CellResult&) const = default;
};

struct ExperimentReport {
    ExperimentPlan plan;
    std::vector<CellResult> cells; ///< function-major, then dim, then algorithm

    bool operator==(const ExperimentReport&) const = default;
};

/// One solver run on one problem. A non-null trace is only valid for mppa.
RunReport run_single(Algorithm algo, const Problem& problem, const SolverSettings& settings,
                     std::uint64_t max_eval, std::uint64_t max_gen, std::uint64_t seed,
                     mppa::PerturbationTrace* trace = nullptr);

/// OpenMP fan-out over all (cell, run) tasks; `threads` <= 0 uses every
/// available core. Output is identical to the serial reference regardless
/// of scheduling.
ExperimentReport run_experiment(const ExperimentPlan& plan, int threads = 0);

/// Plain nested-loop reference implementation, kept for testing the
/// parallel runner against.
ExperimentReport run_experiment_serial(const ExperimentPlan& plan);

enum class ReportFormat { csv, json, markdown };

ReportFormat format_from_string(const std::string& name);

std::string export_report(const ExperimentReport& report, ReportFormat format);

/// Plan plus every resolved default, for provenance next to each report.
std::string export_manifest(const ExperimentPlan& plan);

std::string export_run_csv(const RunReport& report);
std::string export_run_json(const RunReport& report);

} // namespace runnerbench::harness
