#include "modbound/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace modbound {

SpectralResult spectral_gap(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("spectral_gap requires a simple graph");
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("spectral_gap: need at least two vertices");
    if (n > 5000) throw std::invalid_argument("spectral_gap: n exceeds the dense-solver limit of 5000");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("spectral_gap: isolated vertex " + std::to_string(v));

    Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
    std::vector<double> inv_sqrt(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv_sqrt[static_cast<std::size_t>(v)] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
    for (const auto& [u, v] : g.edges()) {
        const double w = inv_sqrt[static_cast<std::size_t>(u)] * inv_sqrt[static_cast<std::size_t>(v)];
        lap(u, v) -= w;
        lap(v, u) -= w;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectral_gap: eigendecomposition failed");

    SpectralResult res;
    res.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    for (std::size_t i = 1; i < res.eigenvalues.size(); ++i)
        res.lambda_bar = std::max(res.lambda_bar, std::abs(1.0 - res.eigenvalues[i]));
    return res;
}

ChungLuUpperReport chung_lu_upper_report(const ChungLuWeights& weights, const Graph& g, double slack) {
    weights.validate();
    if (static_cast<int>(weights.w.size()) != g.n())
        throw std::invalid_argument("chung_lu_upper_report: weight vector size mismatch");
    const SpectralResult sp = spectral_gap(g);
    const double n = static_cast<double>(g.n());
    const double ln = std::log(n);

    ChungLuUpperReport rep;
    rep.lambda_bar = sp.lambda_bar;
    rep.benchmark = 4.0 / std::sqrt(weights.wbar()) + ln * ln / weights.wmin();
    rep.slack = slack;
    rep.within = rep.lambda_bar <= rep.benchmark + slack;
    return rep;
}

}  // namespace modbound
