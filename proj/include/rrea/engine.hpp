#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rrea/genome.hpp"
#include "rrea/init.hpp"
#include "rrea/layout.hpp"
#include "rrea/rng.hpp"

namespace rrea {

struct EAConfig {
    int population_size;               // mu
    int pool_size;                     // lambda, even: the pool is built in pairs
    int max_generations;
    InitPolicy init = InitPolicy::half_ones;
    std::uint64_t seed = 0;

    void validate() const {
        if (population_size < 1) throw std::invalid_argument("config: mu must be >= 1");
        if (pool_size < 2 || pool_size % 2 != 0)
            throw std::invalid_argument("config: lambda must be even and >= 2");
        if (max_generations < 1) throw std::invalid_argument("config: generation budget must be >= 1");
    }
};

struct Population {
    std::vector<Genome> members;
    std::vector<int> fitness;  // fitness[i] == rr_fitness(members[i]) always

    int size() const { return static_cast<int>(members.size()); }
    int best_fitness() const { return *std::max_element(fitness.begin(), fitness.end()); }
};

inline Population make_population(std::vector<Genome> members, const RoyalRoadLayout& layout) {
    Population pop;
    pop.fitness.reserve(members.size());
    for (const auto& g : members) pop.fitness.push_back(rr_fitness(g, layout));
    pop.members = std::move(members);
    return pop;
}

struct RunResult {
    std::optional<int> hit_generation;  // first generation with best fitness == bits
    std::vector<int> best_fitness_trace;  // index t = best fitness after generation t (0 = initial)
    int final_best = 0;
};

// Uniform pair with replacement; strictly fitter index wins, ties by fair coin.
template <RandomSource R>
int tournament_pick(const Population& pop, R& rng) {
    const auto mu = static_cast<std::uint64_t>(pop.size());
    const int i = static_cast<int>(rng.below(mu));
    const int j = static_cast<int>(rng.below(mu));
    if (pop.fitness[static_cast<std::size_t>(i)] > pop.fitness[static_cast<std::size_t>(j)]) return i;
    if (pop.fitness[static_cast<std::size_t>(j)] > pop.fitness[static_cast<std::size_t>(i)]) return j;
    return rng.coin() ? i : j;
}

// pool_size/2 pairs, each parent an independent tournament winner. Parents are
// copied; swapping inside the pool never touches the population.
template <RandomSource R>
std::vector<std::pair<Genome, Genome>> build_pool(const Population& pop, int pool_size, R& rng) {
    if (pool_size < 2 || pool_size % 2 != 0)
        throw std::invalid_argument("build_pool: pool size must be even and >= 2");
    std::vector<std::pair<Genome, Genome>> pairs;
    pairs.reserve(static_cast<std::size_t>(pool_size / 2));
    for (int p = 0; p < pool_size / 2; ++p) {
        Genome a = pop.members[static_cast<std::size_t>(tournament_pick(pop, rng))];
        Genome b = pop.members[static_cast<std::size_t>(tournament_pick(pop, rng))];
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return pairs;
}

// Exchange the bit values at position i of `a` and position j of `b`.
inline void one_bit_swap_at(Genome& a, Genome& b, int i, int j) {
    std::swap(a.bits[static_cast<std::size_t>(i)], b.bits[static_cast<std::size_t>(j)]);
}

// One global position drawn uniformly in each parent.
template <RandomSource R>
void one_bit_swap(Genome& a, Genome& b, R& rng) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(a.length())));
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(b.length())));
    one_bit_swap_at(a, b, i, j);
}

// Elitist replacement. Current members at the population's best fitness and
// the whole offspring pool compete for the mu slots, ordered by fitness;
// on equal fitness offspring rank ahead of retained elites, offspring among
// themselves by pool order. Members below the current best are always
// replaced, even by worse offspring. If the candidates cannot fill mu slots
// (pool smaller than the vacancies), the best remaining old members top up.
inline Population replacement(const Population& pop, const std::vector<Genome>& pool,
                              const RoyalRoadLayout& layout) {
    if (pool.empty()) throw std::invalid_argument("replacement: pool must be non-empty");

    std::vector<int> pool_fitness;
    pool_fitness.reserve(pool.size());
    for (const auto& g : pool) pool_fitness.push_back(rr_fitness(g, layout));

    const int best = pop.best_fitness();
    const auto mu = static_cast<std::size_t>(pop.size());

    struct Candidate {
        int fitness;
        int tier;   // 0 = offspring, 1 = elite
        int order;  // pool index / member index
    };
    std::vector<Candidate> candidates;
    candidates.reserve(pool.size() + mu);
    for (std::size_t k = 0; k < pool.size(); ++k)
        candidates.push_back({pool_fitness[k], 0, static_cast<int>(k)});
    for (std::size_t i = 0; i < mu; ++i)
        if (pop.fitness[i] == best) candidates.push_back({best, 1, static_cast<int>(i)});

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.fitness != b.fitness) return a.fitness > b.fitness;
        if (a.tier != b.tier) return a.tier < b.tier;
        return a.order < b.order;
    });

    Population next;
    next.members.reserve(mu);
    next.fitness.reserve(mu);
    for (const auto& c : candidates) {
        if (next.members.size() == mu) break;
        if (c.tier == 0) {
            next.members.push_back(pool[static_cast<std::size_t>(c.order)]);
        } else {
            next.members.push_back(pop.members[static_cast<std::size_t>(c.order)]);
        }
        next.fitness.push_back(c.fitness);
    }

    if (next.members.size() < mu) {
        // Pool plus elites cannot fill the population (lambda < vacancies).
        std::vector<int> rest;
        for (std::size_t i = 0; i < mu; ++i)
            if (pop.fitness[i] != best) rest.push_back(static_cast<int>(i));
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            if (pop.fitness[static_cast<std::size_t>(a)] != pop.fitness[static_cast<std::size_t>(b)])
                return pop.fitness[static_cast<std::size_t>(a)] > pop.fitness[static_cast<std::size_t>(b)];
            return a < b;
        });
        for (int idx : rest) {
            if (next.members.size() == mu) break;
            next.members.push_back(pop.members[static_cast<std::size_t>(idx)]);
            next.fitness.push_back(pop.fitness[static_cast<std::size_t>(idx)]);
        }
    }
    return next;
}

// One generation: tournament pool, one-bit swap on every pair, replacement.
template <RandomSource R>
Population generation(const Population& pop, const EAConfig& config, const RoyalRoadLayout& layout,
                      R& rng) {
    auto pairs = build_pool(pop, config.pool_size, rng);
    std::vector<Genome> pool;
    pool.reserve(static_cast<std::size_t>(config.pool_size));
    for (auto& [a, b] : pairs) {
        one_bit_swap(a, b, rng);
        pool.push_back(std::move(a));
        pool.push_back(std::move(b));
    }
    return replacement(pop, pool, layout);
}

// Full run on an externally supplied stream; stops at the first generation
// whose best fitness reaches the optimum, or at the budget.
template <RandomSource R>
RunResult run_with(const EAConfig& config, const RoyalRoadLayout& layout, R& rng) {
    config.validate();

    std::vector<Genome> members;
    members.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i)
        members.push_back(make_genome(config.init, layout, rng));
    Population pop = make_population(std::move(members), layout);

    RunResult result;
    result.best_fitness_trace.push_back(pop.best_fitness());
    if (pop.best_fitness() == layout.bits) result.hit_generation = 0;

    for (int t = 1; t <= config.max_generations && !result.hit_generation; ++t) {
        pop = generation(pop, config, layout, rng);
        result.best_fitness_trace.push_back(pop.best_fitness());
        if (pop.best_fitness() == layout.bits) result.hit_generation = t;
    }
    result.final_best = result.best_fitness_trace.back();
    return result;
}

inline RunResult run(const EAConfig& config, const RoyalRoadLayout& layout) {
    Rng rng(config.seed);
    return run_with(config, layout, rng);
}

}  // namespace rrea
