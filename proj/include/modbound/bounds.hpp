#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modbound/graph.hpp"

namespace modbound {

struct BoundInputs {
    std::int64_t n = 0;
    double dbar = 0.0;
    std::int64_t delta_max = 0;
    double C = std::numeric_limits<double>::quiet_NaN();
    double gamma = std::numeric_limits<double>::quiet_NaN();
    double theta = std::numeric_limits<double>::quiet_NaN();
    double tau = std::numeric_limits<double>::quiet_NaN();
    double A = std::numeric_limits<double>::quiet_NaN();
    double kappa = std::numeric_limits<double>::quiet_NaN();
    double B = std::numeric_limits<double>::quiet_NaN();
};

struct BoundReport {
    std::string name;
    double value = 0.0;
    bool vacuous = false;  // value <= 0 or some hypothesis unmet
    std::vector<std::pair<std::string, bool>> hypotheses;
    BoundInputs inputs;

    bool hypotheses_met() const {
        for (const auto& [k, v] : hypotheses)
            if (!v) return false;
        return true;
    }
};

/// Main explicit bound:
/// 0.26/sqrt(C dbar) * (gamma - 2 theta/(C dbar)) - theta^2/(2 dbar^2)
///   - 3/(8 sqrt(n)) - 4 Delta^2/(n^2 dbar^2),  theta = (C dbar)^10/n.
/// Vacuous values are returned flagged, never clamped.
BoundReport bound_main(std::int64_t n, double dbar, std::int64_t delta_max, double C, double gamma);

/// Max-degree route: (c/n) sum_i sqrt(d_i)/dbar - Delta^20 / (2 (n dbar)^2).
BoundReport bound_no_cutoff(std::span<const int> degrees);

/// Smallest A making the tail hypothesis
/// |{i : d_i >= k}|/n <= A dbar^(tau-1) k^(1-tau) hold for every k >= 1.
double powerlaw_tail_A(std::span<const int> degrees, double tau);

/// b = 0.1 ((tau-2)/(8A))^(1/(2(tau-2))).
double bound_powerlaw_b(double tau, double A);

/// Power-law bound b * dbar^(-1/2) with A computed from the sequence.
BoundReport bound_powerlaw(std::span<const int> degrees, double tau);

/// Moment route: B = sum d^(1+kappa) / (n dbar^(1+kappa)), then the main
/// bound with C = (4B)^(1/kappa) and gamma = 1/2.
BoundReport bound_moments(std::span<const int> degrees, double kappa);

/// The two prefactor readings of the removed-degrees bound.
enum class RemovedDegreesPrefactor { statement, proof };

/// prefactor * sum_{v in L} sqrt(d'_v) - theta^2/(2 dbar^2) - 3/(8 sqrt n)
///   - Delta^2/(4 (n dbar)^2), where d' are degrees inside G[L] and the
/// prefactor is c/(2 n dbar) (statement) or c/(n dbar) (proof).
BoundReport bound_removed_degrees(const Graph& g, double C, RemovedDegreesPrefactor which);

}  // namespace modbound
