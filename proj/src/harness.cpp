#include "runnerbench/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "runnerbench/abc.hpp"
#include "runnerbench/format.hpp"
#include "runnerbench/ppa.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace runnerbench::harness {

using ordered_json = nlohmann::ordered_json;

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "ppa") return Algorithm::ppa;
    if (name == "mppa") return Algorithm::mppa;
    if (name == "abc") return Algorithm::abc;
    if (name == "mabc") return Algorithm::mabc;
    throw std::invalid_argument("unknown algorithm '" + name + "'; expected ppa, mppa, abc or mabc");
}

std::string_view to_string(Algorithm algo) noexcept {
    switch (algo) {
        case Algorithm::ppa: return "ppa";
        case Algorithm::mppa: return "mppa";
        case Algorithm::abc: return "abc";
        case Algorithm::mabc: return "mabc";
    }
    return "?";
}

CellStats summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    CellStats stats;
    stats.best = sorted.front();
    stats.worst = sorted.back();
    stats.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    double sum = 0.0;
    for (double v : sorted) sum += v;
    stats.mean = sum / static_cast<double>(n);

    if (n > 1) {
        double ss = 0.0;
        for (double v : sorted) {
            const double d = v - stats.mean;
            ss += d * d;
        }
        stats.sd = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return stats;
}

RunReport run_single(Algorithm algo, const Problem& problem, const SolverSettings& settings,
                     std::uint64_t max_eval, std::uint64_t max_gen, std::uint64_t seed,
                     mppa::PerturbationTrace* trace) {
    if (trace != nullptr && algo != Algorithm::mppa) {
        throw std::invalid_argument("perturbation traces are only available for mppa");
    }
    EvalBudget budget(max_eval, max_gen);
    RunReport report;
    switch (algo) {
        case Algorithm::ppa:
            report = ppa::run_ppa({settings.np, settings.ppa_n_max, seed}, problem, budget);
            break;
        case Algorithm::mppa:
            report = mppa::run_mppa({settings.np, settings.mppa_runners, seed}, problem, budget, trace);
            break;
        case Algorithm::abc:
        case Algorithm::mabc: {
            abc::AbcConfig cfg;
            cfg.colony_size = settings.abc_colony > 0 ? settings.abc_colony : (settings.np + 1) / 2;
            cfg.limit = settings.abc_limit;
            cfg.seed = seed;
            cfg.variant = algo == Algorithm::mabc ? abc::Variant::modified : abc::Variant::classic;
            cfg.modification_rate = settings.mabc_mr;
            report = abc::run_abc(cfg, problem, budget);
            break;
        }
    }
    report.metadata["function_id"] = std::to_string(problem.id());
    report.metadata["function_name"] = problem.name();
    report.metadata["dim"] = std::to_string(problem.dim());
    report.metadata["max_eval"] = std::to_string(max_eval);
    report.metadata["max_gen"] = std::to_string(max_gen);
    return report;
}

namespace {

struct CellKey {
    Algorithm algorithm;
    int function_id;
    int dim;
};

struct RunOutcome {
    bool ok = false;
    RunReport report;
    std::string error;
};

std::vector<CellKey> enumerate_cells(const ExperimentPlan& plan) {
    if (plan.runs < 1) throw std::invalid_argument("experiment plan needs runs >= 1");
    if (plan.algorithms.empty() || plan.function_ids.empty() || plan.dims.empty()) {
        throw std::invalid_argument("experiment plan needs algorithms, functions and dims");
    }
    std::vector<CellKey> keys;
    keys.reserve(plan.function_ids.size() * plan.dims.size() * plan.algorithms.size());
    for (int fn : plan.function_ids) {
        for (int dim : plan.dims) {
            for (Algorithm algo : plan.algorithms) {
                keys.push_back({algo, fn, dim});
            }
        }
    }
    return keys;
}

RunOutcome execute_task(const ExperimentPlan& plan, const CellKey& key, int run_index) {
    RunOutcome outcome;
    try {
        const Problem problem = bench::make_problem(key.function_id, key.dim);
        outcome.report = run_single(key.algorithm, problem, plan.solver,
                                    plan.max_eval_for(key.dim), plan.max_gen,
                                    plan.base_seed + static_cast<std::uint64_t>(run_index));
        outcome.ok = true;
    } catch (const std::exception& e) {
        outcome.error = e.what();
    }
    return outcome;
}

CellResult fold_cell(const ExperimentPlan& plan, const CellKey& key,
                     std::span<RunOutcome> outcomes) {
    CellResult cell;
    cell.algorithm = key.algorithm;
    cell.function_id = key.function_id;
    cell.dim = key.dim;
    cell.runs_requested = plan.runs;
    cell.seed_base = plan.base_seed;
    try {
        cell.function_name = std::string(bench::lookup(key.function_id).name);
    } catch (const std::exception&) {
        cell.function_name = "unknown";
    }
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        RunOutcome& outcome = outcomes[r];
        const std::uint64_t seed = plan.base_seed + r;
        if (outcome.ok) {
            cell.run_details.push_back({seed, outcome.report.best_objective,
                                        outcome.report.evaluations, outcome.report.generations});
            cell.reports.push_back(std::move(outcome.report));
        } else {
            cell.errors.push_back("seed " + std::to_string(seed) + ": " + outcome.error);
        }
    }
    if (!cell.run_details.empty()) {
        std::vector<double> bests(cell.run_details.size());
        for (std::size_t i = 0; i < bests.size(); ++i) bests[i] = cell.run_details[i].best;
        cell.stats = summarize(bests);
        cell.has_stats = true;
    }
    return cell;
}

ExperimentReport fold_report(const ExperimentPlan& plan, const std::vector<CellKey>& keys,
                             std::vector<RunOutcome>& outcomes) {
    ExperimentReport report;
    report.plan = plan;
    report.cells.reserve(keys.size());
    const auto runs = static_cast<std::size_t>(plan.runs);
    for (std::size_t c = 0; c < keys.size(); ++c) {
        report.cells.push_back(
            fold_cell(plan, keys[c], std::span<RunOutcome>(outcomes.data() + c * runs, runs)));
    }
    return report;
}

} // namespace

ExperimentReport run_experiment(const ExperimentPlan& plan, int threads) {
    const std::vector<CellKey> keys = enumerate_cells(plan);
    const auto runs = static_cast<std::size_t>(plan.runs);
    std::vector<RunOutcome> outcomes(keys.size() * runs);
    const auto total = static_cast<std::int64_t>(outcomes.size());

#ifdef _OPENMP
    const int use_threads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(use_threads)
#else
    (void)threads;
#endif
    for (std::int64_t t = 0; t < total; ++t) {
        const auto cell = static_cast<std::size_t>(t) / runs;
        const auto run = static_cast<int>(static_cast<std::size_t>(t) % runs);
        outcomes[static_cast<std::size_t>(t)] = execute_task(plan, keys[cell], run);
    }
    return fold_report(plan, keys, outcomes);
}

ExperimentReport run_experiment_serial(const ExperimentPlan& plan) {
    const std::vector<CellKey> keys = enumerate_cells(plan);
    const auto runs = static_cast<std::size_t>(plan.runs);
    std::vector<RunOutcome> outcomes(keys.size() * runs);
    for (std::size_t c = 0; c < keys.size(); ++c) {
        for (std::size_t r = 0; r < runs; ++r) {
            outcomes[c * runs + r] = execute_task(plan, keys[c], static_cast<int>(r));
        }
    }
    return fold_report(plan, keys, outcomes);
}

ReportFormat format_from_string(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    if (name == "markdown") return ReportFormat::markdown;
    throw std::invalid_argument("unknown report format '" + name +
                                "'; expected csv, json or markdown");
}

namespace {

std::string export_csv(const ExperimentReport& report) {
    std::ostringstream os;
    os << "algorithm,function_id,function_name,dim,runs,best,worst,median,mean,sd,seed_base\n";
    for (const CellResult& cell : report.cells) {
        os << to_string(cell.algorithm) << ',' << cell.function_id << ',' << cell.function_name
           << ',' << cell.dim << ',' << cell.run_details.size() << ',';
        if (cell.has_stats) {
            os << format_double(cell.stats.best) << ',' << format_double(cell.stats.worst) << ','
               << format_double(cell.stats.median) << ',' << format_double(cell.stats.mean) << ','
               << format_double(cell.stats.sd);
        } else {
            os << "nan,nan,nan,nan,nan";
        }
        os << ',' << cell.seed_base << '\n';
    }
    return os.str();
}

std::string export_json(const ExperimentReport& report) {
    ordered_json doc;
    doc["schema"] = "runnerbench-report-v1";
    doc["cells"] = ordered_json::array();
    for (const CellResult& cell : report.cells) {
        ordered_json j;
        j["algorithm"] = std::string(to_string(cell.algorithm));
        j["function_id"] = cell.function_id;
        j["function_name"] = cell.function_name;
        j["dim"] = cell.dim;
        j["runs"] = cell.run_details.size();
        if (cell.has_stats) {
            j["best"] = cell.stats.best;
            j["worst"] = cell.stats.worst;
            j["median"] = cell.stats.median;
            j["mean"] = cell.stats.mean;
            j["sd"] = cell.stats.sd;
        }
        j["seed_base"] = cell.seed_base;
        j["run_details"] = ordered_json::array();
        for (const RunDetail& run : cell.run_details) {
            j["run_details"].push_back({{"seed", run.seed},
                                        {"best", run.best},
                                        {"evaluations", run.evaluations},
                                        {"generations", run.generations}});
        }
        j["errors"] = cell.errors;
        doc["cells"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::string export_markdown(const ExperimentReport& report) {
    std::ostringstream os;
    os << "| Function | Dim | Algorithm | Best | Worst | Median | Mean | SD |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const CellResult& cell : report.cells) {
        os << "| " << cell.function_name << " | " << cell.dim << " | " << to_string(cell.algorithm)
           << " | ";
        if (cell.has_stats) {
            os << format_scientific3(cell.stats.best) << " | "
               << format_scientific3(cell.stats.worst) << " | "
               << format_scientific3(cell.stats.median) << " | "
               << format_scientific3(cell.stats.mean) << " | " << format_scientific3(cell.stats.sd);
        } else {
            os << "error | error | error | error | error";
        }
        os << " |\n";
    }
    return os.str();
}

} // namespace

std::string export_report(const ExperimentReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::csv: return export_csv(report);
        case ReportFormat::json: return export_json(report);
        case ReportFormat::markdown: return export_markdown(report);
    }
    throw std::invalid_argument("unknown report format");
}

std::string export_manifest(const ExperimentPlan& plan) {
    ordered_json doc;
    doc["schema"] = "runnerbench-manifest-v1";
    doc["algorithms"] = ordered_json::array();
    for (Algorithm algo : plan.algorithms) doc["algorithms"].push_back(std::string(to_string(algo)));
    doc["function_ids"] = plan.function_ids;
    doc["dims"] = plan.dims;
    doc["runs"] = plan.runs;
    doc["base_seed"] = plan.base_seed;
    doc["max_eval_rule"] = plan.max_eval_override != 0
                               ? std::to_string(plan.max_eval_override)
                               : std::string("dim*5000");
    doc["max_gen"] = plan.max_gen;
    doc["solver"] = {
        {"np", plan.solver.np},
        {"ppa_n_max", plan.solver.ppa_n_max},
        {"mppa_runners", plan.solver.mppa_runners},
        {"abc_colony",
         plan.solver.abc_colony > 0 ? plan.solver.abc_colony : (plan.solver.np + 1) / 2},
        {"abc_limit_rule", plan.solver.abc_limit != 0 ? std::to_string(plan.solver.abc_limit)
                                                      : std::string("colony*dim")},
        {"mabc_modification_rate", plan.solver.mabc_mr},
    };
    doc["rng"] = kRngAlgorithm;
    doc["sd_convention"] = "sample (n-1)";
    return doc.dump(2) + "\n";
}

std::string export_run_csv(const RunReport& report) {
    const auto& meta = report.metadata;
    std::ostringstream os;
    os << "algorithm,function_id,function_name,dim,seed,evaluations,generations,best,best_position\n";
    os << meta.at("algorithm") << ',' << meta.at("function_id") << ',' << meta.at("function_name")
       << ',' << meta.at("dim") << ',' << report.seed << ',' << report.evaluations << ','
       << report.generations << ',' << format_double(report.best_objective) << ',';
    for (std::size_t j = 0; j < report.best_position.size(); ++j) {
        if (j != 0) os << ' ';
        os << format_double(report.best_position[j]);
    }
    os << '\n';
    return os.str();
}

std::string export_run_json(const RunReport& report) {
    const auto& meta = report.metadata;
    ordered_json doc;
    doc["schema"] = "runnerbench-run-v1";
    doc["algorithm"] = meta.at("algorithm");
    doc["function_id"] = std::stoi(meta.at("function_id"));
    doc["function_name"] = meta.at("function_name");
    doc["dim"] = std::stoi(meta.at("dim"));
    doc["seed"] = report.seed;
    doc["best"] = report.best_objective;
    doc["best_position"] = report.best_position;
    doc["evaluations"] = report.evaluations;
    doc["generations"] = report.generations;
    doc["trajectory"] = report.trajectory;
    doc["metadata"] = report.metadata;
    return doc.dump(2) + "\n";
}

} // namespace runnerbench::harness
