#include "rrea/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>

namespace rrea {

std::uint64_t replicate_seed(std::uint64_t master_seed, int row_index, int replicate) {
    return derive_seed(master_seed, static_cast<std::uint64_t>(row_index),
                       static_cast<std::uint64_t>(replicate));
}

std::vector<RunResult> run_replicates(const ExperimentRow& row, int row_index, int runs,
                                      int max_generations, std::uint64_t master_seed, int workers,
                                      InitPolicy init) {
    if (runs < 1) throw std::invalid_argument("run_replicates: runs must be >= 1");

    EAConfig base{};
    base.population_size = row.population_size;
    base.pool_size = row.pool_size;
    base.max_generations = max_generations;
    base.init = init;
    base.validate();

    std::vector<RunResult> results(static_cast<std::size_t>(runs));
    int thread_count = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;
    if (thread_count > runs) thread_count = runs;

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= runs) return;
            EAConfig cfg = base;
            cfg.seed = replicate_seed(master_seed, row_index, i);
            results[static_cast<std::size_t>(i)] = run(cfg, row.layout);
        }
    };

    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(thread_count));
        for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return results;
}

SummaryRow summarize(const std::vector<RunResult>& results, const theory::TheoryReport& report,
                     const ExperimentRow& row) {
    if (results.empty()) throw std::invalid_argument("summarize: results must be non-empty");

    SummaryRow summary{};
    summary.n = row.layout.bits;
    summary.bins = row.layout.bins;
    summary.bin_size = row.layout.bin_size;
    summary.population_size = row.population_size;
    summary.pool_size = row.pool_size;
    summary.exact = report.exact;
    summary.approx = report.approx;
    summary.asymptotic_scale = report.asymptotic_scale;
    summary.runs = static_cast<int>(results.size());

    double sum = 0.0;
    for (const auto& r : results) {
        if (r.hit_generation) {
            ++summary.hits;
            sum += *r.hit_generation;
        }
    }
    if (summary.hits == 0) return summary;

    const double mean = sum / summary.hits;
    double sq = 0.0;
    for (const auto& r : results) {
        if (r.hit_generation) {
            const double d = *r.hit_generation - mean;
            sq += d * d;
        }
    }
    EmpiricalStats stats;
    stats.mean = mean;
    stats.stddev = summary.hits > 1 ? std::sqrt(sq / (summary.hits - 1)) : 0.0;
    stats.ci95_half_width = 1.96 * stats.stddev / std::sqrt(static_cast<double>(summary.hits));
    summary.empirical = stats;
    return summary;
}

std::vector<ExperimentRow> benchmark_grid() {
    std::vector<ExperimentRow> rows;
    for (int n : {32, 64, 128}) {
        for (int m : {4, 10, 20, 30}) {
            rows.push_back({RoyalRoadLayout(n, n / 8, 8), m, m});
        }
    }
    return rows;
}

std::vector<SummaryRow> run_experiment(const ExperimentSpec& spec, int workers) {
    if (spec.runs_per_row < 1) throw std::invalid_argument("experiment: runs_per_row must be >= 1");
    std::vector<SummaryRow> summaries;
    summaries.reserve(spec.rows.size());
    for (std::size_t i = 0; i < spec.rows.size(); ++i) {
        const auto& row = spec.rows[i];
        const theory::ModelParams params(row.layout, row.population_size, row.pool_size);
        const auto results = run_replicates(row, static_cast<int>(i), spec.runs_per_row,
                                            spec.max_generations, spec.master_seed, workers);
        summaries.push_back(summarize(results, theory::make_report(params), row));
    }
    return summaries;
}

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows,
                       std::uint64_t master_seed) {
    out << "n,K,M,mu,lambda,exact,approx,asymptotic_scale,"
           "empirical_mean,empirical_std,ci95,hits,runs,master_seed\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.bins << ',' << row.bin_size << ',' << row.population_size << ','
            << row.pool_size << ',' << format_real(row.exact) << ',';
        if (row.approx) out << format_real(*row.approx);
        out << ',' << format_real(row.asymptotic_scale) << ',';
        if (row.empirical) {
            out << format_real(row.empirical->mean) << ',' << format_real(row.empirical->stddev)
                << ',' << format_real(row.empirical->ci95_half_width);
        } else {
            out << ",,";
        }
        out << ',' << row.hits << ',' << row.runs << ',' << master_seed << '\n';
    }
}

void write_replicate_csv(std::ostream& out, int row_index, const std::vector<RunResult>& results,
                         std::uint64_t master_seed) {
    out << "row_index,replicate,seed,hit_generation\n";
    write_replicate_rows(out, row_index, results, master_seed);
}

void write_replicate_rows(std::ostream& out, int row_index, const std::vector<RunResult>& results,
                          std::uint64_t master_seed) {
    for (std::size_t i = 0; i < results.size(); ++i) {
        out << row_index << ',' << i << ','
            << replicate_seed(master_seed, row_index, static_cast<int>(i)) << ',';
        if (results[i].hit_generation) out << *results[i].hit_generation;
        out << '\n';
    }
}

}  // namespace rrea
