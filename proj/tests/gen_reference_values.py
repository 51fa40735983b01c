#!/usr/bin/env python3
"""Regenerates tests/reference_values.hpp.

Computes the hitting-time model quantities at 50 significant digits with
mpmath, independent of the C++ implementation, and emits them as double
literals. Run from the repository root:

    python3 tests/gen_reference_values.py > tests/reference_values.hpp
"""
import mpmath as mp

mp.mp.dps = 50

GRID = [(n, n // 8, 8, m, m) for n in (32, 64, 128) for m in (4, 10, 20, 30)]


def p_sel(alpha, mu):
    alpha, mu = mp.mpf(alpha), mp.mpf(mu)
    return (alpha * (2 * mu - alpha)) ** 2 / mu ** 4


def p_swap(level, bins_done, n, M):
    return mp.mpf((M - 2 * level) * (n + bins_done * M + 2 * level)) / (2 * n * n)


def level_fail(level, bins_done, n, M, mu, lam):
    half = lam // 2
    ps = p_swap(level, bins_done, n, M)
    return sum((1 - p_sel(a, mu) * ps) ** half for a in range(1, mu + 1)) / mu


def level_success(level, bins_done, n, M, mu, lam):
    return 1 - level_fail(level, bins_done, n, M, mu, lam)


def exact_bin_time(bins_done, n, M, mu, lam):
    return sum(1 / level_success(l, bins_done, n, M, mu, lam) for l in range(M // 2))


def exact_hitting_time(n, K, M, mu, lam, first_bin_index=0):
    return sum(exact_bin_time(kd, n, M, mu, lam)
               for kd in range(first_bin_index, K + first_bin_index))


def approx_hitting_time(n, K, M, mu, lam):
    n, M, mu, lam = map(mp.mpf, (n, M, mu, lam))
    a = M / 2 + n - 1
    pre = 2 * mu ** 4 * n * n * (M - 2) / (lam * M * (M + 2) * (2 * mu - 1) * (mu - 1) ** 2)
    return pre * (mp.digamma(a / M + K) - mp.digamma(a / M))


def i1_taylor(mu, gamma):
    mu, gamma = mp.mpf(mu), mp.mpf(gamma)
    return mp.e ** (-((2 * mu - 1) ** 2) / gamma) * (mu - 1) * (1 - 2 * (2 * mu - 1) * (mu - 1) ** 2 / gamma)


def lit(x):
    return mp.nstr(x, 17, strip_zeros=False)


def emit():
    print("// Generated by tests/gen_reference_values.py -- do not edit by hand.")
    print("// 50-digit mpmath evaluations of the hitting-time model, rounded to double.")
    print("#pragma once")
    print()
    print("namespace rrea::testref {")
    print()
    print("struct GridRow {")
    print("  int n, bins, bin_size, mu, lambda_;")
    print("  double exact;")
    print("  double approx;")
    print("};")
    print()
    print("// n, K, M, mu, lambda grid with exact and approximate expected hitting times.")
    print("inline constexpr GridRow kGrid[12] = {")
    for (n, K, M, mu, lam) in GRID:
        ex = exact_hitting_time(n, K, M, mu, lam)
        ap = approx_hitting_time(n, K, M, mu, lam)
        print(f"    {{{n}, {K}, {M}, {mu}, {lam}, {lit(ex)}, {lit(ap)}}},")
    print("};")
    print()
    ex1 = exact_hitting_time(32, 4, 8, 4, 4, first_bin_index=1)
    print("// First grid row recomputed with completed-bin index running 1..K instead of 0..K-1.")
    print(f"inline constexpr double kExactRow0BinsFrom1 = {lit(ex1)};")
    print()
    print("// Per-bin expected times, n=32 M=8 mu=lambda=4.")
    print(f"inline constexpr double kBinTime32_done0 = {lit(exact_bin_time(0, 32, 8, 4, 4))};")
    print(f"inline constexpr double kBinTime32_done3 = {lit(exact_bin_time(3, 32, 8, 4, 4))};")
    print()
    print("// Level failure/success probabilities, n=32 M=8 mu=lambda=4, first level.")
    print(f"inline constexpr double kFail32_0_0 = {lit(level_fail(0, 0, 32, 8, 4, 4))};")
    print(f"inline constexpr double kSuccess32_0_0 = {lit(level_success(0, 0, 32, 8, 4, 4))};")
    print()
    print("// Loss-free complement stress cases: tiny per-pair success probabilities.")
    print("struct ComplementCase {")
    print("  int n, bins, bin_size, mu, lambda_, bins_done, level;")
    print("  double success;")
    print("};")
    print("inline constexpr ComplementCase kComplementCases[] = {")
    for (n, K, M, mu, lam, kd, l) in [
        (1024, 512, 2, 1000, 4, 0, 0),
        (1024, 256, 4, 640, 2, 0, 1),
        (512, 64, 8, 200, 6, 10, 3),
        (1024, 128, 8, 50, 2, 0, 3),
    ]:
        s = level_success(l, kd, n, M, mu, lam)
        print(f"    {{{n}, {K}, {M}, {mu}, {lam}, {kd}, {l}, {lit(s)}}},")
    print("};")
    print()
    print("// Digamma reference points.")
    print(f"inline constexpr double kDigamma1 = {lit(mp.digamma(1))};")
    print(f"inline constexpr double kDigammaHalf = {lit(mp.digamma(mp.mpf(1) / 2))};")
    print(f"inline constexpr double kDigammaQuarter = {lit(mp.digamma(mp.mpf(1) / 4))};")
    print(f"inline constexpr double kDigamma7p5 = {lit(mp.digamma(mp.mpf('7.5')))};")
    print(f"inline constexpr double kDigamma123p456 = {lit(mp.digamma(mp.mpf('123.456')))};")
    print()
    print("// Taylor form of the elite-count integral at mu=2, gamma=1e6.")
    print(f"inline constexpr double kI1Mu2Gamma1e6 = {lit(i1_taylor(2, mp.mpf(10) ** 6))};")
    print()
    scale = mp.mpf(32) ** 2 * mp.log(1 + mp.mpf(4 * 8) / (8 + 32)) / 8
    print("// Asymptotic scale for n=32 K=4 M=8.")
    print(f"inline constexpr double kAsymScale32 = {lit(scale)};")
    print()
    print("}  // namespace rrea::testref")


if __name__ == "__main__":
    emit()
