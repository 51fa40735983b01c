#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrea/experiments.hpp"
#include "rrea/theory.hpp"

namespace {

using rrea::format_real;

struct CommonParams {
    int n = 32;
    int k = 4;
    int m = 8;
    int mu = 4;
    int lambda = 4;
};

void add_param_flags(CLI::App* cmd, CommonParams& p) {
    cmd->add_option("--n", p.n, "string length in bits");
    cmd->add_option("--k", p.k, "number of bins");
    cmd->add_option("--m", p.m, "bin size in bits");
    cmd->add_option("--mu", p.mu, "population size");
    cmd->add_option("--lambda", p.lambda, "recombination pool size (even)");
}

// Data goes to --out when given, else to stdout. Returns the process exit
// code: 3 when the path cannot be written.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(std::cout);
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open output path: " << path << "\n";
        return 3;
    }
    writer(file);
    file.flush();
    if (!file) {
        std::cerr << "write failed: " << path << "\n";
        return 3;
    }
    return 0;
}

std::string approx_note(const rrea::theory::ModelParams& params) {
    if (params.population_size < 2) return "unavailable (mu < 2)";
    return "unavailable (bin size < 4)";
}

void print_theory_pretty(std::ostream& out, const rrea::theory::ModelParams& params,
                         const rrea::theory::TheoryReport& report) {
    out << "n=" << params.layout.bits << " K=" << params.layout.bins
        << " M=" << params.layout.bin_size << " mu=" << params.population_size
        << " lambda=" << params.pool_size << "\n";
    out << "exact             " << format_real(report.exact) << "\n";
    out << "approx            "
        << (report.approx ? format_real(*report.approx) : approx_note(params)) << "\n";
    out << "asymptotic_scale  " << format_real(report.asymptotic_scale) << "\n";
    if (params.population_size != params.pool_size)
        out << "note: asymptotic_scale assumes mu = lambda\n";
}

void print_theory_csv_header(std::ostream& out) {
    out << "n,K,M,mu,lambda,exact,approx,asymptotic_scale\n";
}

void print_theory_csv_row(std::ostream& out, const rrea::theory::ModelParams& params,
                          const rrea::theory::TheoryReport& report) {
    out << params.layout.bits << ',' << params.layout.bins << ',' << params.layout.bin_size << ','
        << params.population_size << ',' << params.pool_size << ',' << format_real(report.exact)
        << ',';
    if (report.approx) out << format_real(*report.approx);
    out << ',' << format_real(report.asymptotic_scale) << '\n';
}

int cmd_theory(const CommonParams& p, const std::string& format, const std::string& out_path) {
    const rrea::RoyalRoadLayout layout(p.n, p.k, p.m);
    const rrea::theory::ModelParams params(layout, p.mu, p.lambda);
    const auto report = rrea::theory::make_report(params);
    if (format == "csv" && params.population_size != params.pool_size)
        std::cerr << "note: asymptotic_scale assumes mu = lambda\n";
    return with_output(out_path, [&](std::ostream& out) {
        if (format == "pretty") {
            print_theory_pretty(out, params, report);
        } else {
            print_theory_csv_header(out);
            print_theory_csv_row(out, params, report);
        }
    });
}

int cmd_simulate(const CommonParams& p, int runs, int gens, std::uint64_t seed, int workers,
                 const std::string& init_name, const std::string& format,
                 const std::string& out_path) {
    const rrea::RoyalRoadLayout layout(p.n, p.k, p.m);
    const rrea::ExperimentRow row{layout, p.mu, p.lambda};
    const auto init =
        init_name == "random" ? rrea::InitPolicy::random : rrea::InitPolicy::half_ones;
    const auto results = rrea::run_replicates(row, 0, runs, gens, seed, workers, init);

    const int code = with_output(out_path, [&](std::ostream& out) {
        if (format == "pretty") {
            out << "replicate  seed                  hit_generation\n";
            for (std::size_t i = 0; i < results.size(); ++i) {
                std::ostringstream line;
                line << i;
                out << line.str() << std::string(11 - line.str().size(), ' ')
                    << rrea::replicate_seed(seed, 0, static_cast<int>(i)) << "  ";
                if (results[i].hit_generation)
                    out << *results[i].hit_generation;
                else
                    out << "-";
                out << "\n";
            }
        } else {
            rrea::write_replicate_csv(out, 0, results, seed);
        }
    });
    if (code != 0) return code;

    const auto summary =
        rrea::summarize(results, rrea::theory::make_report({layout, p.mu, p.lambda}), row);
    std::ostringstream line;
    line << "runs=" << summary.runs << " hits=" << summary.hits;
    if (summary.empirical)
        line << " mean=" << format_real(summary.empirical->mean)
             << " std=" << format_real(summary.empirical->stddev);
    line << "\n";
    // keep data and the summary on different streams
    (out_path.empty() ? std::cerr : std::cout) << line.str();
    return 0;
}

int cmd_compare(int runs, int gens, std::uint64_t seed, int workers, const std::string& format,
                const std::string& out_path, const std::string& raw_path) {
    const auto rows = rrea::benchmark_grid();
    std::vector<rrea::SummaryRow> summaries;
    std::ostringstream raw;
    if (!raw_path.empty()) raw << "row_index,replicate,seed,hit_generation\n";

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const rrea::theory::ModelParams params(row.layout, row.population_size, row.pool_size);
        const auto results =
            rrea::run_replicates(row, static_cast<int>(i), runs, gens, seed, workers);
        summaries.push_back(rrea::summarize(results, rrea::theory::make_report(params), row));
        if (!raw_path.empty())
            rrea::write_replicate_rows(raw, static_cast<int>(i), results, seed);
        std::cerr << "row " << (i + 1) << "/" << rows.size() << " done (n=" << row.layout.bits
                  << " mu=" << row.population_size << ")\n";
    }

    if (!raw_path.empty()) {
        std::ofstream raw_file(raw_path, std::ios::binary);
        if (!raw_file) {
            std::cerr << "cannot open output path: " << raw_path << "\n";
            return 3;
        }
        raw_file << raw.str();
    }

    return with_output(out_path, [&](std::ostream& out) {
        if (format == "pretty") {
            out << "n    K   M  mu  lambda  exact      approx     asym_scale emp_mean   emp_std    ci95       hits/runs\n";
            for (const auto& s : summaries) {
                char buffer[256];
                std::snprintf(buffer, sizeof(buffer),
                              "%-4d %-3d %-2d %-3d %-7d %-10s %-10s %-10s %-10s %-10s %-10s %d/%d",
                              s.n, s.bins, s.bin_size, s.population_size, s.pool_size,
                              format_real(s.exact).c_str(),
                              s.approx ? format_real(*s.approx).c_str() : "-",
                              format_real(s.asymptotic_scale).c_str(),
                              s.empirical ? format_real(s.empirical->mean).c_str() : "-",
                              s.empirical ? format_real(s.empirical->stddev).c_str() : "-",
                              s.empirical ? format_real(s.empirical->ci95_half_width).c_str() : "-",
                              s.hits, s.runs);
                out << buffer << "\n";
            }
        } else {
            rrea::write_summary_csv(out, summaries, seed);
        }
    });
}

int cmd_sweep(const CommonParams& p, bool lambda_given, bool mu_given, const std::string& axis,
              const std::vector<int>& values, const std::string& format,
              const std::string& out_path) {
    if (values.empty()) throw std::invalid_argument("sweep: empty range");

    struct Point {
        rrea::theory::ModelParams params;
        rrea::theory::TheoryReport report;
    };
    std::vector<Point> points;
    for (int v : values) {
        if (axis == "mu") {
            const rrea::RoyalRoadLayout layout(p.n, p.k, p.m);
            // lambda follows mu unless pinned explicitly
            const int lambda = lambda_given ? p.lambda : v;
            rrea::theory::ModelParams params(layout, v, lambda);
            points.push_back({params, rrea::theory::make_report(params)});
        } else if (axis == "lambda") {
            if (!mu_given) throw std::invalid_argument("sweep: --mu required for the lambda axis");
            const rrea::RoyalRoadLayout layout(p.n, p.k, p.m);
            rrea::theory::ModelParams params(layout, p.mu, v);
            points.push_back({params, rrea::theory::make_report(params)});
        } else if (axis == "n") {
            if (v % p.m != 0)
                throw std::invalid_argument("sweep: n values must be divisible by the bin size");
            const rrea::RoyalRoadLayout layout(v, v / p.m, p.m);
            rrea::theory::ModelParams params(layout, p.mu, p.lambda);
            points.push_back({params, rrea::theory::make_report(params)});
        } else {
            throw std::invalid_argument("sweep: axis must be one of mu, lambda, n");
        }
    }

    return with_output(out_path, [&](std::ostream& out) {
        if (format == "pretty") {
            out << "n    K   M  mu  lambda  exact      approx     asym_scale\n";
            for (const auto& pt : points) {
                char buffer[160];
                std::snprintf(buffer, sizeof(buffer), "%-4d %-3d %-2d %-3d %-7d %-10s %-10s %s",
                              pt.params.layout.bits, pt.params.layout.bins,
                              pt.params.layout.bin_size, pt.params.population_size,
                              pt.params.pool_size, format_real(pt.report.exact).c_str(),
                              pt.report.approx ? format_real(*pt.report.approx).c_str() : "-",
                              format_real(pt.report.asymptotic_scale).c_str());
                out << buffer << "\n";
            }
        } else {
            print_theory_csv_header(out);
            for (const auto& pt : points) print_theory_csv_row(out, pt.params, pt.report);
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Royal Roads (mu+lambda) evolutionary algorithm laboratory"};
    app.require_subcommand(1);

    CommonParams params;
    std::string theory_format = "pretty";
    std::string simulate_format = "csv";
    std::string compare_format = "csv";
    std::string sweep_format = "csv";
    std::string out_path;
    std::string raw_path;
    std::string init_name = "half_ones";
    std::string axis;
    std::vector<int> values;
    int runs = 20;
    int compare_runs = 400;
    int gens = 2000;
    int workers = 0;
    std::uint64_t seed = 1;

    auto* theory_cmd = app.add_subcommand("theory", "expected hitting-time formulas for one parameter set");
    add_param_flags(theory_cmd, params);
    theory_cmd->add_option("--format", theory_format, "csv or pretty (default: pretty)")
        ->check(CLI::IsMember({"csv", "pretty"}));
    theory_cmd->add_option("--out", out_path, "output file (default: stdout)");

    auto* simulate_cmd = app.add_subcommand("simulate", "seeded replicate runs of one parameter set");
    add_param_flags(simulate_cmd, params);
    simulate_cmd->add_option("--runs", runs, "replicates (default: 20)");
    simulate_cmd->add_option("--gens", gens, "generation budget per replicate (default: 2000)");
    simulate_cmd->add_option("--seed", seed, "master seed (default: 1)")->envname("RR_EA_SEED");
    simulate_cmd->add_option("--workers", workers, "max concurrent replicates (0 = all cores)");
    simulate_cmd->add_option("--init", init_name, "initial population policy (default: half_ones)")
        ->check(CLI::IsMember({"half_ones", "random"}));
    simulate_cmd->add_option("--format", simulate_format, "csv or pretty (default: csv)")
        ->check(CLI::IsMember({"csv", "pretty"}));
    simulate_cmd->add_option("--out", out_path, "output file (default: stdout)");

    auto* compare_cmd = app.add_subcommand("compare", "theory vs simulation over the benchmark grid");
    compare_cmd->add_option("--runs", compare_runs, "replicates per row (default: 400)");
    compare_cmd->add_option("--gens", gens, "generation budget per replicate (default: 2000)");
    compare_cmd->add_option("--seed", seed, "master seed (default: 1)")->envname("RR_EA_SEED");
    compare_cmd->add_option("--workers", workers, "max concurrent replicates (0 = all cores)");
    compare_cmd->add_option("--format", compare_format, "csv or pretty (default: csv)")
        ->check(CLI::IsMember({"csv", "pretty"}));
    compare_cmd->add_option("--out", out_path, "output file (default: stdout)");
    compare_cmd->add_option("--raw", raw_path, "also write per-replicate CSV to this file");

    auto* sweep_cmd = app.add_subcommand("sweep", "theory values along one parameter axis");
    add_param_flags(sweep_cmd, params);
    sweep_cmd->add_option("--axis", axis, "mu, lambda or n")
        ->required()
        ->check(CLI::IsMember({"mu", "lambda", "n"}));
    sweep_cmd->add_option("--values", values, "axis values")->required()->delimiter(',');
    sweep_cmd->add_option("--format", sweep_format, "csv or pretty (default: csv)")
        ->check(CLI::IsMember({"csv", "pretty"}));
    sweep_cmd->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (theory_cmd->parsed()) return cmd_theory(params, theory_format, out_path);
        if (simulate_cmd->parsed())
            return cmd_simulate(params, runs, gens, seed, workers, init_name, simulate_format,
                                out_path);
        if (compare_cmd->parsed())
            return cmd_compare(compare_runs, gens, seed, workers, compare_format, out_path,
                               raw_path);
        if (sweep_cmd->parsed())
            return cmd_sweep(params, sweep_cmd->count("--lambda") > 0, sweep_cmd->count("--mu") > 0,
                             axis, values, sweep_format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
