#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rrea/engine.hpp"
#include "rrea/layout.hpp"
#include "rrea/theory.hpp"

namespace rrea {

struct ExperimentRow {
    RoyalRoadLayout layout;
    int population_size;
    int pool_size;
};

struct ExperimentSpec {
    std::vector<ExperimentRow> rows;
    int runs_per_row = 400;
    int max_generations = 2000;
    std::uint64_t master_seed = 1;
};

struct EmpiricalStats {
    double mean = 0.0;
    double stddev = 0.0;           // unbiased (n-1) divisor; 0 for a single hit
    double ci95_half_width = 0.0;  // 1.96 * stddev / sqrt(hits)
};

struct SummaryRow {
    int n, bins, bin_size, population_size, pool_size;
    double exact = 0.0;
    std::optional<double> approx;
    double asymptotic_scale = 0.0;
    std::optional<EmpiricalStats> empirical;  // absent when no replicate hit
    int hits = 0;
    int runs = 0;
};

// Seed of replicate `replicate` of row `row_index`; replicates are
// independent of execution order and worker count by construction.
std::uint64_t replicate_seed(std::uint64_t master_seed, int row_index, int replicate);

// Runs `runs` seeded replicates of one parameter row, up to `workers`
// concurrently (0 = hardware concurrency). Results come back in replicate
// order.
std::vector<RunResult> run_replicates(const ExperimentRow& row, int row_index, int runs,
                                      int max_generations, std::uint64_t master_seed,
                                      int workers = 0, InitPolicy init = InitPolicy::half_ones);

// Mean/std/CI over hitting replicates only; zero hits leaves the empirical
// block absent. Permutation-invariant in `results`.
SummaryRow summarize(const std::vector<RunResult>& results, const theory::TheoryReport& report,
                     const ExperimentRow& row);

// The 12-row benchmark grid: n in {32, 64, 128} with 8-bit bins, mu = lambda
// in {4, 10, 20, 30}.
std::vector<ExperimentRow> benchmark_grid();

// Theory plus seeded empirical statistics for every row of `spec.rows`.
std::vector<SummaryRow> run_experiment(const ExperimentSpec& spec, int workers = 0);

// One row per SummaryRow; reals with 6 significant digits; fields of rows
// without hits are left empty.
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows,
                       std::uint64_t master_seed);

// row_index,replicate,seed,hit_generation; hit_generation empty when the
// replicate never hit.
void write_replicate_csv(std::ostream& out, int row_index, const std::vector<RunResult>& results,
                         std::uint64_t master_seed);

// The data lines of write_replicate_csv without the header, for files that
// collect several rows.
void write_replicate_rows(std::ostream& out, int row_index, const std::vector<RunResult>& results,
                          std::uint64_t master_seed);

// 6-significant-digit rendering shared by every CSV writer.
std::string format_real(double value);

}  // namespace rrea
