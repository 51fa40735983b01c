#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rrea/genome.hpp"
#include "rrea/init.hpp"
#include "rrea/layout.hpp"
#include "rrea/rng.hpp"
#include "scripted_rng.hpp"

using namespace rrea;

TEST_CASE("layout invariants") {
    CHECK_NOTHROW(RoyalRoadLayout(32, 4, 8));
    CHECK_NOTHROW(RoyalRoadLayout(4, 2, 2));
    CHECK_THROWS_AS(RoyalRoadLayout(6, 2, 3), std::invalid_argument);   // odd bin size
    CHECK_THROWS_AS(RoyalRoadLayout(32, 4, 4), std::invalid_argument);  // n != K*M
    CHECK_THROWS_AS(RoyalRoadLayout(0, 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(RoyalRoadLayout(-8, 1, -8), std::invalid_argument);
}

TEST_CASE("rr_fitness counts complete bins") {
    const RoyalRoadLayout layout(8, 2, 4);
    CHECK(rr_fitness(Genome::from_string("11111111"), layout) == 8);
    CHECK(rr_fitness(Genome::from_string("00000000"), layout) == 0);
    CHECK(rr_fitness(Genome::from_string("11111000"), layout) == 4);
    CHECK(rr_fitness(Genome::from_string("10001111"), layout) == 4);
    CHECK_THROWS_AS(rr_fitness(Genome::from_string("1111"), layout), std::invalid_argument);
}

TEST_CASE("onemax") {
    CHECK(onemax(Genome::from_string("11111111")) == 8);
    CHECK(onemax(Genome::from_string("0000")) == 0);
    CHECK(onemax(Genome::from_string("1010")) == 2);
}

TEST_CASE("fitness relations hold on random genomes") {
    const RoyalRoadLayout layout(24, 3, 8);
    Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const Genome g = random_init(layout, rng);
        const int f = rr_fitness(g, layout);
        CHECK(f <= onemax(g));
        CHECK(f % layout.bin_size == 0);
        CHECK(f == rr_fitness(g, layout));  // pure
    }
    CHECK(rr_fitness(Genome(24, 1), layout) == 24);
}

TEST_CASE("half_ones_init fills every bin exactly half") {
    const RoyalRoadLayout layout(32, 4, 8);
    Rng rng(7);
    for (int draw = 0; draw < 1000; ++draw) {
        const Genome g = half_ones_init(layout, rng);
        CHECK(onemax(g) == 16);
        for (int b = 0; b < layout.bins; ++b) {
            int ones = 0;
            for (int i = layout.bin_begin(b); i < layout.bin_end(b); ++i) ones += g.bits[i];
            REQUIRE(ones == 4);
        }
    }
}

TEST_CASE("half_ones_init with the smallest bin") {
    const RoyalRoadLayout layout(4, 2, 2);
    Rng rng(11);
    for (int draw = 0; draw < 200; ++draw) {
        const Genome g = half_ones_init(layout, rng);
        CHECK(onemax(g) == 2);
        CHECK(rr_fitness(g, layout) == 0);
    }
}

TEST_CASE("random_init has binomial mean onemax") {
    const RoyalRoadLayout layout(32, 4, 8);
    Rng rng(99);
    double total = 0.0;
    for (int draw = 0; draw < 10000; ++draw) total += onemax(random_init(layout, rng));
    const double mean = total / 10000.0;
    CHECK(mean > 15.0);
    CHECK(mean < 17.0);
}

TEST_CASE("random_init with a forced all-zero stream") {
    const RoyalRoadLayout layout(2, 1, 2);
    testing::ConstantRng rng;  // coin() always false
    CHECK(random_init(layout, rng).to_string() == "00");
}

TEST_CASE("random_init per-position frequency stays near one half") {
    const RoyalRoadLayout layout(32, 4, 8);
    Rng rng(31337);
    const int draws = 100000;
    std::vector<int> counts(32, 0);
    for (int d = 0; d < draws; ++d) {
        const Genome g = random_init(layout, rng);
        for (int i = 0; i < 32; ++i) counts[i] += g.bits[i];
    }
    for (int i = 0; i < 32; ++i) {
        const double freq = static_cast<double>(counts[i]) / draws;
        CHECK(freq >= 0.49);
        CHECK(freq <= 0.51);
    }
}

TEST_CASE("seed derivation is stable and spreads") {
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
    CHECK(derive_seed(1, 2) != derive_seed(2, 1));
    // child streams of consecutive replicates should differ immediately
    Rng a(derive_seed(42, 0, 0));
    Rng b(derive_seed(42, 0, 1));
    CHECK(a.next() != b.next());
}

TEST_CASE("bounded draws are unbiased over a small modulus") {
    Rng rng(5);
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 30000; ++i) ++counts[rng.below(3)];
    for (int c : counts) {
        CHECK(c > 9500);
        CHECK(c < 10500);
    }
}
