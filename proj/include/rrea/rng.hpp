#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace rrea {

// splitmix64 finalizer; full-period bijection on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic child-stream derivation. Combining a master seed with one or
// more indices yields streams that are stable across platforms and across any
// execution order of the children.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ (mix64(index) + 0x9e3779b97f4a7c15ULL + (master << 6) + (master >> 2)));
}

inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(master, a), b);
}

// Anything that can hand out bounded uniform integers and fair coin flips.
template <class R>
concept RandomSource = requires(R& r, std::uint64_t bound) {
    { r.below(bound) } -> std::convertible_to<std::uint64_t>;
    { r.coin() } -> std::convertible_to<bool>;
};

// mt19937_64 with explicit bounded draws. std::uniform_int_distribution is
// avoided on purpose: its output is implementation-defined, and results here
// must be bit-reproducible from the seed alone.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return (next() >> 63) != 0; }

  private:
    std::mt19937_64 gen_;
};

static_assert(RandomSource<Rng>);

}  // namespace rrea
