#include "runnerbench/mppa.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "runnerbench/format.hpp"

namespace runnerbench::mppa {
namespace {

void record_step(PerturbationTrace* trace, std::uint32_t generation, Perturbation eq,
                 std::span<const double> parent, std::span<const double> child) {
    if (!trace) return;
    for (std::size_t j = 0; j < parent.size(); ++j) {
        trace->records.push_back(
            {generation, static_cast<std::uint8_t>(eq), std::abs(child[j] - parent[j])});
    }
}

} // namespace

std::vector<Candidate> propagate_individual(const Candidate& parent, const Problem& problem,
                                            EvalBudget& budget, Rng& rng, int n_runners,
                                            std::uint32_t generation, PerturbationTrace* trace) {
    if (n_runners < 1) throw std::invalid_argument("mppa: n_runners must be >= 1");
    const SearchSpace& space = problem.space();
    std::vector<Candidate> offspring;
    offspring.reserve(static_cast<std::size_t>(n_runners));

    for (int k = 0; k < n_runners; ++k) {
        auto near = evaluate_candidate(problem, budget, perturb_self(parent.position, space, rng), rng);
        if (!near) return offspring;
        record_step(trace, generation, Perturbation::self_scaled, parent.position, near->position);
        const double f_near = near->objective;
        offspring.push_back(std::move(*near));
        if (f_near - parent.objective < 0.0) continue;

        auto far_up =
            evaluate_candidate(problem, budget, perturb_upper(parent.position, space, rng), rng);
        if (!far_up) return offspring;
        record_step(trace, generation, Perturbation::upper_scaled, parent.position, far_up->position);
        const double f_far = far_up->objective;
        offspring.push_back(std::move(*far_up));
        if (f_far - parent.objective < 0.0) continue;

        auto far_down =
            evaluate_candidate(problem, budget, perturb_lower(parent.position, space, rng), rng);
        if (!far_down) return offspring;
        record_step(trace, generation, Perturbation::lower_scaled, parent.position,
                    far_down->position);
        offspring.push_back(std::move(*far_down));
    }
    return offspring;
}

RunReport run_mppa(const MppaConfig& config, const Problem& problem, EvalBudget& budget,
                   PerturbationTrace* trace) {
    if (config.np < 2) throw std::invalid_argument("mppa: np must be >= 2");
    if (config.n_runners < 1) throw std::invalid_argument("mppa: n_runners must be >= 1");

    Rng rng(config.seed);
    const SearchSpace& space = problem.space();
    const auto np = static_cast<std::size_t>(config.np);

    Population pop;
    pop.reserve(np);
    while (pop.size() < np) {
        auto c = evaluate_candidate(problem, budget, uniform_init(space, rng), rng);
        if (!c) break;
        pop.push_back(std::move(*c));
    }
    if (pop.empty()) throw std::runtime_error("mppa: budget too small to initialize a population");

    RunReport report;
    report.seed = config.seed;
    report.metadata["algorithm"] = "mppa";
    report.metadata["np"] = std::to_string(config.np);
    report.metadata["n_runners"] = std::to_string(config.n_runners);
    report.metadata["rng"] = kRngAlgorithm;

    sort_ascending(pop);
    report.trajectory.push_back(pop.front().objective);

    std::uint32_t generation = 0;
    while (pop.size() == np && budget.can_start_generation()) {
        budget.begin_generation();
        ++generation;

        Population pool = pop; // parents enter the pool without re-evaluation
        for (std::size_t i = 0; i < pop.size(); ++i) {
            auto offspring =
                propagate_individual(pop[i], problem, budget, rng, config.n_runners, generation, trace);
            pool.insert(pool.end(), std::make_move_iterator(offspring.begin()),
                        std::make_move_iterator(offspring.end()));
            if (budget.exhausted()) break;
        }
        select_survivors(pool, np);
        pop = std::move(pool);
        report.trajectory.push_back(pop.front().objective);
    }

    report.best_objective = pop.front().objective;
    report.best_position = pop.front().position;
    report.evaluations = budget.used();
    report.generations = budget.generations();
    return report;
}

TraceHistogram trace_histogram(const PerturbationTrace& trace, int bins) {
    if (bins < 1) throw std::invalid_argument("trace_histogram: bins must be >= 1");
    if (trace.records.empty()) throw std::invalid_argument("trace_histogram: empty trace");

    TraceHistogram hist;
    hist.bins = bins;
    for (int eq = 5; eq <= 7; ++eq) {
        double max_mag = 0.0;
        std::uint64_t total = 0;
        for (const auto& r : trace.records) {
            if (r.equation != eq) continue;
            ++total;
            max_mag = std::max(max_mag, r.magnitude);
        }
        if (total == 0) continue;

        EquationHistogram h;
        h.equation = eq;
        h.max_magnitude = max_mag;
        h.bin_width = max_mag > 0.0 ? max_mag / bins : 1.0;
        h.counts.assign(static_cast<std::size_t>(bins), 0);
        for (const auto& r : trace.records) {
            if (r.equation != eq) continue;
            auto idx = static_cast<std::size_t>(r.magnitude / h.bin_width);
            if (idx >= h.counts.size()) idx = h.counts.size() - 1; // max lands in the last bin
            ++h.counts[idx];
        }
        hist.equations.push_back(std::move(h));
    }
    return hist;
}

double mean_magnitude(const PerturbationTrace& trace, int equation, std::uint32_t gen_lo,
                      std::uint32_t gen_hi) {
    double sum = 0.0;
    std::uint64_t count = 0;
    for (const auto& r : trace.records) {
        if (r.equation != equation || r.generation < gen_lo || r.generation > gen_hi) continue;
        sum += r.magnitude;
        ++count;
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

void write_trace_csv(std::ostream& out, const PerturbationTrace& trace) {
    out << "generation,equation,magnitude\n";
    for (const auto& r : trace.records) {
        out << r.generation << ',' << static_cast<int>(r.equation) << ','
            << format_double(r.magnitude) << '\n';
    }
}

PerturbationTrace read_trace_csv(std::istream& in) {
    PerturbationTrace trace;
    std::string line;
    if (!std::getline(in, line) || line != "generation,equation,magnitude") {
        throw std::runtime_error("trace csv: missing 'generation,equation,magnitude' header");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string gen_s, eq_s, mag_s;
        if (!std::getline(row, gen_s, ',') || !std::getline(row, eq_s, ',') ||
            !std::getline(row, mag_s)) {
            throw std::runtime_error("trace csv: malformed row at line " + std::to_string(line_no));
        }
        try {
            TraceRecord r{};
            r.generation = static_cast<std::uint32_t>(std::stoul(gen_s));
            const int eq = std::stoi(eq_s);
            if (eq < 5 || eq > 7) throw std::invalid_argument("equation id");
            r.equation = static_cast<std::uint8_t>(eq);
            r.magnitude = std::stod(mag_s);
            if (!(r.magnitude >= 0.0)) throw std::invalid_argument("negative magnitude");
            trace.records.push_back(r);
        } catch (const std::exception&) {
            throw std::runtime_error("trace csv: malformed row at line " + std::to_string(line_no));
        }
    }
    return trace;
}

} // namespace runnerbench::mppa
