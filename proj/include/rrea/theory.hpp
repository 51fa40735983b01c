#pragma once

#include <optional>
#include <stdexcept>

#include "rrea/layout.hpp"

namespace rrea::theory {

// Static population model: uniform elite count over 1..mu, pool of
// pool_size offspring built from pool_size/2 pairs.
struct ModelParams {
    RoyalRoadLayout layout;
    int population_size;  // mu
    int pool_size;        // lambda

    ModelParams(RoyalRoadLayout layout_, int mu, int lambda)
        : layout(layout_), population_size(mu), pool_size(lambda) {
        if (mu < 1) throw std::invalid_argument("model: mu must be >= 1");
        if (lambda < 2 || lambda % 2 != 0)
            throw std::invalid_argument("model: lambda must be even and >= 2");
    }
};

// Progress coordinate of the model: bins_done completed bins plus `level`
// one-bit improvements already made inside the active bin.
struct LevelState {
    int bins_done;  // 0 .. K-1
    int level;      // 0 .. M/2
};

struct TheoryReport {
    double exact;
    std::optional<double> approx;  // absent when mu < 2 or bin_size < 4
    double asymptotic_scale;
};

// Probability that a tournament-built pair consists of two elite members,
// given alpha elites among mu.
double elite_pair_prob(int alpha, int mu);

// Probability that a single one-bit swap on an elite pair improves the
// active bin of one offspring.
double swap_improve_prob(const LevelState& state, const ModelParams& params);

// Probability that a whole generation fails to advance the level, averaged
// over the uniform elite count.
double level_fail_prob(const LevelState& state, const ModelParams& params);

// Complement of level_fail_prob, evaluated loss-free (expm1/log1p) so tiny
// success probabilities keep full relative precision.
double level_success_prob(const LevelState& state, const ModelParams& params);

// Expected generations to fill one bin from half full: sum of geometric
// waiting times over the bin's levels.
double exact_bin_time(int bins_done, const ModelParams& params);

// Expected generations to the first global optimum, summing every bin stage.
double exact_hitting_time(const ModelParams& params);

// Large-deviation scale of the per-level failure exponent. Requires
// level < M/2.
double gamma_scale(const LevelState& state, const ModelParams& params);

// Two-term Taylor (around alpha = 1) of the integral of
// exp(-(alpha(2mu-alpha))^2 / gamma) over alpha in [1, mu].
double fail_integral_taylor(int mu, double gamma);

struct ClampedProb {
    double value;
    bool clamped;  // true when the raw approximation left [0, 1]
};

// Approximate per-generation failure probability, fail_integral_taylor / mu,
// clamped into [0, 1]. Requires mu >= 2.
ClampedProb approx_fail_prob(const LevelState& state, const ModelParams& params);

// Closed-form approximate bin time (midpoint evaluation of the rescaled
// waiting-time integrand). Requires mu >= 2 and bin_size >= 4.
double closed_form_bin_time(int bins_done, const ModelParams& params);

// The waiting-time integrand integrated over the rescaled level variable in
// [0, 1] by adaptive quadrature (relative tolerance 1e-8). Oracle for
// closed_form_bin_time. Requires mu >= 2 and bin_size >= 4.
double bin_time_integral(int bins_done, const ModelParams& params);

// Closed-form approximate hitting time via the digamma telescoping of the
// per-bin harmonic-like sum. Requires mu >= 2 and bin_size >= 4.
double approx_hitting_time(const ModelParams& params);

// Size scale of the asymptotic hitting-time order:
// bits^2 * log(1 + bins*bin_size / (bin_size + bits)) / bin_size.
double asymptotic_scale(const RoyalRoadLayout& layout);

// Exact, approximate and asymptotic values from one parameter set.
TheoryReport make_report(const ModelParams& params);

}  // namespace rrea::theory
