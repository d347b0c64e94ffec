#pragma once

#include <vector>

#include "modbound/generators.hpp"
#include "modbound/graph.hpp"

namespace modbound {

struct SpectralResult {
    double lambda_bar = 0.0;            // max_{i>=2} |1 - mu_i|
    std::vector<double> eigenvalues;    // of the normalized Laplacian, ascending
};

/// Eigenvalues of I - D^{-1/2} A D^{-1/2}; lambda_bar upper-bounds the
/// modularity q*. Dense symmetric solve, so n is capped at 5000; isolated
/// vertices are rejected.
SpectralResult spectral_gap(const Graph& g);

struct ChungLuUpperReport {
    double lambda_bar = 0.0;
    double benchmark = 0.0;  // 4/sqrt(wbar) + ln^2(n)/wmin
    double slack = 0.0;
    bool within = false;     // lambda_bar <= benchmark + slack
};

ChungLuUpperReport chung_lu_upper_report(const ChungLuWeights& weights, const Graph& g, double slack = 0.1);

}  // namespace modbound
