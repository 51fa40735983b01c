#include "rrea/theory.hpp"

#include <cmath>
#include <stdexcept>

#include "rrea/digamma.hpp"
#include "rrea/quadrature.hpp"

namespace rrea::theory {

namespace {

void check_state(const LevelState& state, const ModelParams& params) {
    if (state.bins_done < 0 || state.bins_done > params.layout.bins - 1)
        throw std::invalid_argument("state: bins_done out of range");
    if (state.level < 0 || state.level > params.layout.bin_size / 2)
        throw std::invalid_argument("state: level out of range");
}

void check_approx_domain(const ModelParams& params) {
    if (params.population_size < 2)
        throw std::invalid_argument("approximation requires mu >= 2");
}

double mu4n2(const ModelParams& params) {
    const double mu = params.population_size;
    const double n = params.layout.bits;
    return mu * mu * mu * mu * n * n;
}

// Expected wait 1/P(success) under the approximate failure model, written so
// that both gamma -> infinity and moderate gamma keep full precision:
// P(fail) ~ E*(1 - c/gamma) with E = exp(-(2mu-1)^2/gamma), c = 2(2mu-1)(mu-1)^2,
// P(success) = -expm1(-x) + (c/gamma) * exp(-x), x = (2mu-1)^2/gamma.
double approx_wait_time(double gamma, int mu) {
    const double twice = 2.0 * mu - 1.0;
    const double c = 2.0 * twice * (mu - 1.0) * (mu - 1.0);
    const double x = twice * twice / gamma;
    return gamma / (gamma * (-std::expm1(-x)) + c * std::exp(-x));
}

// Rescaled gamma over the unit interval: level runs through the bin as
// l_orig = (M/2 - 1) * l for l in [0, 1].
double rescaled_gamma(double l, int bins_done, const ModelParams& params) {
    const double M = params.layout.bin_size;
    const double n = params.layout.bits;
    const double span = M / 2.0 - 1.0;
    const double zeros_left = M - 2.0 * span * l;
    const double ones_seen = n + bins_done * M + 2.0 * span * l;
    return 4.0 * mu4n2(params) / (params.pool_size * zeros_left * ones_seen);
}

}  // namespace

double elite_pair_prob(int alpha, int mu) {
    if (alpha < 1 || alpha > mu) throw std::invalid_argument("elite_pair_prob: alpha out of range");
    const double a = alpha;
    const double m = mu;
    const double t = a * (2.0 * m - a) / (m * m);
    return t * t;
}

double swap_improve_prob(const LevelState& state, const ModelParams& params) {
    check_state(state, params);
    const double M = params.layout.bin_size;
    const double n = params.layout.bits;
    const double zeros_left = M - 2.0 * state.level;
    const double ones_seen = n + state.bins_done * M + 2.0 * state.level;
    return zeros_left * ones_seen / (2.0 * n * n);
}

double level_fail_prob(const LevelState& state, const ModelParams& params) {
    const double swap = swap_improve_prob(state, params);
    const int mu = params.population_size;
    const int half_pool = params.pool_size / 2;
    double sum = 0.0;
    for (int alpha = 1; alpha <= mu; ++alpha)
        sum += std::pow(1.0 - elite_pair_prob(alpha, mu) * swap, half_pool);
    return sum / mu;
}

double level_success_prob(const LevelState& state, const ModelParams& params) {
    const double swap = swap_improve_prob(state, params);
    const int mu = params.population_size;
    const int half_pool = params.pool_size / 2;
    // 1 - mean((1-q)^h) == mean(1 - (1-q)^h); each term via expm1/log1p keeps
    // relative precision when q*h is tiny.
    double sum = 0.0;
    for (int alpha = 1; alpha <= mu; ++alpha) {
        const double q = elite_pair_prob(alpha, mu) * swap;
        sum += -std::expm1(half_pool * std::log1p(-q));
    }
    return sum / mu;
}

double exact_bin_time(int bins_done, const ModelParams& params) {
    double total = 0.0;
    for (int level = 0; level < params.layout.bin_size / 2; ++level) {
        const double p = level_success_prob({bins_done, level}, params);
        if (p <= 0.0)
            throw std::runtime_error("exact_bin_time: zero success probability, expectation diverges");
        total += 1.0 / p;
    }
    return total;
}

double exact_hitting_time(const ModelParams& params) {
    double total = 0.0;
    for (int bins_done = 0; bins_done < params.layout.bins; ++bins_done)
        total += exact_bin_time(bins_done, params);
    return total;
}

double gamma_scale(const LevelState& state, const ModelParams& params) {
    check_state(state, params);
    if (2 * state.level == params.layout.bin_size)
        throw std::invalid_argument("gamma_scale: level must be below bin_size/2");
    const double M = params.layout.bin_size;
    const double n = params.layout.bits;
    const double zeros_left = M - 2.0 * state.level;
    const double ones_seen = n + state.bins_done * M + 2.0 * state.level;
    return 4.0 * mu4n2(params) / (params.pool_size * zeros_left * ones_seen);
}

double fail_integral_taylor(int mu, double gamma) {
    if (mu < 1) throw std::invalid_argument("fail_integral_taylor: mu must be >= 1");
    if (!(gamma > 0.0)) throw std::invalid_argument("fail_integral_taylor: gamma must be positive");
    const double twice = 2.0 * mu - 1.0;
    const double bracket = 1.0 - 2.0 * twice * (mu - 1.0) * (mu - 1.0) / gamma;
    return std::exp(-twice * twice / gamma) * (mu - 1.0) * bracket;
}

ClampedProb approx_fail_prob(const LevelState& state, const ModelParams& params) {
    check_approx_domain(params);
    const double gamma = gamma_scale(state, params);
    const double raw = fail_integral_taylor(params.population_size, gamma) / params.population_size;
    if (raw < 0.0) return {0.0, true};
    if (raw > 1.0) return {1.0, true};
    return {raw, false};
}

double closed_form_bin_time(int bins_done, const ModelParams& params) {
    check_approx_domain(params);
    check_state({bins_done, 0}, params);
    const double M = params.layout.bin_size;
    if (params.layout.bin_size < 4)
        throw std::invalid_argument("closed_form_bin_time: bin_size 2 degenerates the prefactor");
    const double n = params.layout.bits;
    const double sigma2 = M / 2.0 + n + bins_done * M - 1.0;
    const double gamma_mid = 4.0 * mu4n2(params) / (params.pool_size * (M / 2.0 + 1.0) * sigma2);
    return (M / 2.0 - 1.0) * approx_wait_time(gamma_mid, params.population_size);
}

double bin_time_integral(int bins_done, const ModelParams& params) {
    check_approx_domain(params);
    check_state({bins_done, 0}, params);
    if (params.layout.bin_size < 4)
        throw std::invalid_argument("bin_time_integral: bin_size 2 degenerates the rescaling");
    const int mu = params.population_size;
    return integrate_adaptive(
        [&](double l) { return approx_wait_time(rescaled_gamma(l, bins_done, params), mu); }, 0.0,
        1.0, 1e-8);
}

double approx_hitting_time(const ModelParams& params) {
    check_approx_domain(params);
    if (params.layout.bin_size < 4)
        throw std::invalid_argument("approx_hitting_time: requires bin_size >= 4");
    const double M = params.layout.bin_size;
    const double n = params.layout.bits;
    const double mu = params.population_size;
    const double lambda = params.pool_size;
    const double prefactor = 2.0 * mu4n2(params) * (M - 2.0) /
                             (lambda * M * (M + 2.0) * (2.0 * mu - 1.0) * (mu - 1.0) * (mu - 1.0));
    // sum_{k=0..K-1} M/(a + kM) telescopes to psi0(a/M + K) - psi0(a/M).
    const double a = M / 2.0 + n - 1.0;
    return prefactor * (digamma(a / M + params.layout.bins) - digamma(a / M));
}

double asymptotic_scale(const RoyalRoadLayout& layout) {
    const double n = layout.bits;
    const double M = layout.bin_size;
    return n * n * std::log1p(layout.bins * M / (M + n)) / M;
}

TheoryReport make_report(const ModelParams& params) {
    TheoryReport report{};
    report.exact = exact_hitting_time(params);
    if (params.population_size >= 2 && params.layout.bin_size >= 4)
        report.approx = approx_hitting_time(params);
    report.asymptotic_scale = asymptotic_scale(params.layout);
    return report;
}

}  // namespace rrea::theory
