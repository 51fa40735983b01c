#pragma once

#include "rrea/genome.hpp"
#include "rrea/layout.hpp"
#include "rrea/rng.hpp"

namespace rrea {

enum class InitPolicy { half_ones, random };

// Every bin gets exactly bin_size/2 ones at uniformly random positions within
// the bin, so each genome starts with onemax = bits/2 and fitness 0 for
// bin_size >= 4. Partial Fisher-Yates over the bin's positions.
template <RandomSource R>
Genome half_ones_init(const RoyalRoadLayout& layout, R& rng) {
    Genome g(layout.bits);
    std::vector<int> pos(static_cast<std::size_t>(layout.bin_size));
    for (int b = 0; b < layout.bins; ++b) {
        const int begin = layout.bin_begin(b);
        for (int i = 0; i < layout.bin_size; ++i) pos[static_cast<std::size_t>(i)] = begin + i;
        const int half = layout.bin_size / 2;
        for (int i = 0; i < half; ++i) {
            const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(layout.bin_size - i)));
            std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
            g.bits[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = 1;
        }
    }
    return g;
}

// Each bit independently 1 with probability 1/2.
template <RandomSource R>
Genome random_init(const RoyalRoadLayout& layout, R& rng) {
    Genome g(layout.bits);
    for (auto& bit : g.bits) bit = rng.coin() ? 1 : 0;
    return g;
}

template <RandomSource R>
Genome make_genome(InitPolicy policy, const RoyalRoadLayout& layout, R& rng) {
    return policy == InitPolicy::half_ones ? half_ones_init(layout, rng) : random_init(layout, rng);
}

}  // namespace rrea
