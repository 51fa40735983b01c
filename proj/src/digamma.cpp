#include "rrea/digamma.hpp"

#include <cmath>
#include <stdexcept>

namespace rrea {

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");

    // psi(x) = psi(x + 1) - 1/x until the asymptotic series is accurate.
    double acc = 0.0;
    while (x < 6.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }

    // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k}); truncation at x = 6
    // with terms through x^-14 is below 2e-13.
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    series = inv2 * (-1.0 / 12.0 + inv2 * (1.0 / 120.0 + inv2 * (-1.0 / 252.0 +
             inv2 * (1.0 / 240.0 + inv2 * (-1.0 / 132.0 + inv2 * (691.0 / 32760.0 +
             inv2 * (-1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * inv + series;
}

}  // namespace rrea
