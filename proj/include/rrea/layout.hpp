#pragma once

#include <stdexcept>

namespace rrea {

// Geometry of a Royal Roads instance: `bits` positions split into `bins`
// consecutive blocks of `bin_size` bits each, bits = bins * bin_size.
// Bin b occupies global positions [b * bin_size, (b + 1) * bin_size).
struct RoyalRoadLayout {
    int bits;
    int bins;
    int bin_size;

    RoyalRoadLayout(int bits_, int bins_, int bin_size_)
        : bits(bits_), bins(bins_), bin_size(bin_size_) {
        if (bins < 1)
            throw std::invalid_argument("layout: bin count must be >= 1");
        if (bin_size < 2 || bin_size % 2 != 0)
            throw std::invalid_argument("layout: bin size must be even and >= 2");
        if (bits != bins * bin_size)
            throw std::invalid_argument("layout: bit count must equal bins * bin_size");
    }

    int bin_begin(int bin) const { return bin * bin_size; }
    int bin_end(int bin) const { return (bin + 1) * bin_size; }
};

}  // namespace rrea
