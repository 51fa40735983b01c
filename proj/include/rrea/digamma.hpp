#pragma once

namespace rrea {

// Digamma psi0(x) for x > 0. Recurrence lift into x >= 6, then the Bernoulli
// asymptotic series; absolute error below 1e-10 over the whole domain.
// Throws std::domain_error for x <= 0.
double digamma(double x);

}  // namespace rrea
