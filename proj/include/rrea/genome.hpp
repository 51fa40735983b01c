#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rrea/layout.hpp"

namespace rrea {

// Fixed-length binary string, one byte per bit (values 0/1).
struct Genome {
    std::vector<std::uint8_t> bits;

    Genome() = default;
    explicit Genome(int length, std::uint8_t fill = 0) : bits(static_cast<std::size_t>(length), fill) {}

    static Genome from_string(std::string_view s) {
        Genome g(static_cast<int>(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("genome: expected '0' or '1'");
            g.bits[i] = static_cast<std::uint8_t>(s[i] - '0');
        }
        return g;
    }

    int length() const { return static_cast<int>(bits.size()); }

    std::string to_string() const {
        std::string s(bits.size(), '0');
        for (std::size_t i = 0; i < bits.size(); ++i) s[i] += bits[i];
        return s;
    }

    bool operator==(const Genome&) const = default;
};

// Royal Roads fitness: bin_size for every bin whose bits are all 1.
inline int rr_fitness(const Genome& g, const RoyalRoadLayout& layout) {
    if (g.length() != layout.bits)
        throw std::invalid_argument("rr_fitness: genome length does not match layout");
    int fitness = 0;
    for (int b = 0; b < layout.bins; ++b) {
        bool complete = true;
        for (int i = layout.bin_begin(b); i < layout.bin_end(b); ++i) {
            if (!g.bits[static_cast<std::size_t>(i)]) {
                complete = false;
                break;
            }
        }
        if (complete) fitness += layout.bin_size;
    }
    return fitness;
}

// Number of 1-bits. Progress measure on the fitness plateaus.
inline int onemax(const Genome& g) {
    return std::accumulate(g.bits.begin(), g.bits.end(), 0);
}

}  // namespace rrea
