// Generated by tests/gen_reference_values.py -- do not edit by hand.
// 50-digit mpmath evaluations of the hitting-time model, rounded to double.
#pragma once

namespace rrea::testref {

struct GridRow {
  int n, bins, bin_size, mu, lambda_;
  double exact;
  double approx;
};

// n, K, M, mu, lambda grid with exact and approximate expected hitting times.
inline constexpr GridRow kGrid[12] = {
    {32, 4, 8, 4, 4, 144.99824375352115, 110.33046542805797},
    {32, 4, 8, 10, 10, 72.403959390825751, 70.569559392946433},
    {32, 4, 8, 20, 20, 44.237565561073890, 61.712651129054371},
    {32, 4, 8, 30, 30, 34.555807854239230, 59.097863750883797},
    {64, 8, 8, 4, 4, 570.62528766782305, 437.24844350279159},
    {64, 8, 8, 10, 10, 270.88557833240035, 279.67279829308673},
    {64, 8, 8, 20, 20, 153.46166469125935, 244.57216368950094},
    {64, 8, 8, 30, 30, 112.29745090521412, 234.20955253980598},
    {128, 16, 8, 4, 4, 2264.3644890857047, 1740.0176060478610},
    {128, 16, 8, 10, 10, 1048.0822217205668, 1112.9498576695018},
    {128, 16, 8, 20, 20, 570.44177224390968, 973.26789172717563},
    {128, 16, 8, 30, 30, 401.95047504340884, 932.03017867632977},
};

// First grid row recomputed with completed-bin index running 1..K instead of 0..K-1.
inline constexpr double kExactRow0BinsFrom1 = 123.86373883675404;

// Per-bin expected times, n=32 M=8 mu=lambda=4.
inline constexpr double kBinTime32_done0 = 46.246919660220296;
inline constexpr double kBinTime32_done3 = 28.273614549062396;

// Level failure/success probabilities, n=32 M=8 mu=lambda=4, first level.
inline constexpr double kFail32_0_0 = 0.84375202655792236;
inline constexpr double kSuccess32_0_0 = 0.15624797344207764;

// Loss-free complement stress cases: tiny per-pair success probabilities.
struct ComplementCase {
  int n, bins, bin_size, mu, lambda_, bins_done, level;
  double success;
};
inline constexpr ComplementCase kComplementCases[] = {
    {1024, 512, 2, 1000, 4, 0, 0, 0.0010422552275278561},
    {1024, 256, 4, 640, 2, 0, 1, 0.00052261501550654998},
    {512, 64, 8, 200, 6, 10, 3, 0.0036606326015832324},
    {1024, 128, 8, 50, 2, 0, 3, 0.00053370793136596680},
};

// Digamma reference points.
inline constexpr double kDigamma1 = -0.57721566490153286;
inline constexpr double kDigammaHalf = -1.9635100260214235;
inline constexpr double kDigammaQuarter = -4.2274535333762654;
inline constexpr double kDigamma7p5 = 1.9467574842460868;
inline constexpr double kDigamma123p456 = 4.8118293238289854;

// Taylor form of the elite-count integral at mu=2, gamma=1e6.
inline constexpr double kI1Mu2Gamma1e6 = 0.99998500009449964;

// Asymptotic scale for n=32 K=4 M=8.
inline constexpr double kAsymScale32 = 75.236693107471233;

}  // namespace rrea::testref
