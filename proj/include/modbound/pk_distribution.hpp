#pragma once

#include <cstdint>
#include <vector>

namespace modbound {

/// Limiting degree law p_k(m, delta) of the preferential attachment model:
/// a negative binomial with parameters r = m + delta and p = U^(1/(2+delta/m))
/// mixed over uniform U. p_k = 0 for k < m; the tail decays like k^(-tau)
/// with tau = 3 + delta/m.
struct PkDistribution {
    int m = 1;
    double delta = 0.0;
    int k_max = 0;
    std::vector<double> p;  // index k - m, for k in [m, k_max]
    double tail_mass = 0.0;       // estimate of sum_{k > k_max} p_k
    double mean_with_tail = 0.0;  // sum k p_k including the tail estimate

    double sum() const;
    double total() const { return sum() + tail_mass; }
    double at(int k) const { return (k < m || k > k_max) ? 0.0 : p[static_cast<std::size_t>(k - m)]; }
};

/// Evaluates p_m..p_k_max by adaptive quadrature over the mixing variable;
/// after the substitution s = u^(1/(2+delta/m)) the integrand is polynomial.
/// The negative-binomial coefficient is carried by ratio recursion, no
/// gamma-function calls on the integration path.
PkDistribution pk_evaluate(int m, double delta, int k_max);

/// Closed-form route via log-gamma: a * Gamma(r+l) Gamma(r+a) / (Gamma(r)
/// Gamma(r+a+1+l)) with a = 2 + delta/m, r = m + delta, l = k - m.
double pk_closed_form(int m, double delta, int k);

/// sum_{k >= from_k} p_k, exact telescoping of the closed form.
double pk_tail_mass(int m, double delta, int from_k);

/// sum_{k >= from_k} k p_k, exact telescoping of the closed form.
double pk_tail_weighted(int m, double delta, int from_k);

}  // namespace modbound
