// Wall-clock comparison of the OpenMP experiment runner against the serial
// reference on an identical plan, with a byte-level equality check of the
// exported reports.

#include <chrono>
#include <iostream>
#include <string>

#include "runnerbench/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    using namespace runnerbench;

    harness::ExperimentPlan plan;
    plan.algorithms = {harness::Algorithm::mppa, harness::Algorithm::abc};
    plan.function_ids = {1, 11};
    plan.dims = {30};
    plan.runs = 8;
    plan.max_eval_override = 30000;

    int threads = 0;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const std::string value = argv[i + 1];
        if (flag == "--runs") plan.runs = std::stoi(value);
        else if (flag == "--max-eval") plan.max_eval_override = std::stoull(value);
        else if (flag == "--threads") threads = std::stoi(value);
        else {
            std::cerr << "usage: bench_runs [--runs N] [--max-eval E] [--threads T]\n";
            return 1;
        }
    }

    const auto t_serial = std::chrono::steady_clock::now();
    const auto serial = harness::run_experiment_serial(plan);
    const double serial_s = seconds_since(t_serial);

    const auto t_parallel = std::chrono::steady_clock::now();
    const auto parallel = harness::run_experiment(plan, threads);
    const double parallel_s = seconds_since(t_parallel);

    const std::string serial_csv = harness::export_report(serial, harness::ReportFormat::csv);
    const std::string parallel_csv = harness::export_report(parallel, harness::ReportFormat::csv);
    const bool identical = serial == parallel && serial_csv == parallel_csv;

#ifdef _OPENMP
    std::cout << "openmp threads:  " << (threads > 0 ? threads : omp_get_max_threads()) << '\n';
#else
    std::cout << "openmp threads:  built without OpenMP\n";
#endif
    std::cout << "tasks:           " << plan.function_ids.size() * plan.algorithms.size() * plan.runs
              << " runs (" << plan.max_eval_override << " evals each)\n";
    std::cout << "serial runner:   " << serial_s << " s\n";
    std::cout << "parallel runner: " << parallel_s << " s\n";
    std::cout << "speedup:         " << (parallel_s > 0.0 ? serial_s / parallel_s : 0.0) << "x\n";
    std::cout << "results match:   " << (identical ? "yes" : "NO") << '\n';
    return identical ? 0 : 1;
}
