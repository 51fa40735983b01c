#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rrea {

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod 7-15 on a bisection stack. Panels whose Kronrod/Gauss
// discrepancy exceeds the requested relative tolerance (scaled to the running
// total) are split until the interval cap is hit.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-8,
                          int max_intervals = 4000) {
    // abscissa, Gauss-7 weight, Kronrod-15 weight
    static constexpr double nodes[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0, 0.204432940075298},
        {0.586087235467691, 0.0, 0.169004726639267},
        {0.864864423359769, 0.0, 0.104790010322250},
        {0.991455371120813, 0.0, 0.022935322010529},
    };

    auto panel = [&](double lo, double hi, double& err) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        const double f0 = f(mid);
        double gauss = nodes[0][1] * f0;
        double kronrod = nodes[0][2] * f0;
        for (int i = 1; i < 8; ++i) {
            const double dx = half * nodes[i][0];
            const double fi = f(mid + dx) + f(mid - dx);
            gauss += nodes[i][1] * fi;
            kronrod += nodes[i][2] * fi;
        }
        gauss *= half;
        kronrod *= half;
        err = std::pow(200.0 * std::fabs(kronrod - gauss), 1.5);
        return kronrod;
    };

    std::vector<std::pair<double, double>> stack{{a, b}};
    double total = 0.0;
    int used = 1;
    while (!stack.empty()) {
        const auto [lo, hi] = stack.back();
        stack.pop_back();
        double err = 0.0;
        const double value = panel(lo, hi, err);
        if (err <= rel_tol * (std::fabs(total) + std::fabs(value)) || err <= 1e-300) {
            total += value;
            continue;
        }
        if (used + 2 > max_intervals)
            throw QuadratureFailure("integrate_adaptive: interval cap reached before convergence");
        const double mid = 0.5 * (lo + hi);
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
        used += 2;
    }
    return total;
}

}  // namespace rrea
