#include "modbound/pk_distribution.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace modbound {

namespace {

void check_params(int m, double delta) {
    if (m < 1) throw std::invalid_argument("pk: m must be >= 1");
    if (!(delta > -m && delta < m)) throw std::invalid_argument("pk: delta must lie in (-m, m)");
}

struct Quadrature {
    int max_depth = 48;

    double integrate(const std::function<double(double)>& f, double lo, double hi, double tol) const {
        const double mid = 0.5 * (lo + hi);
        const double flo = f(lo), fhi = f(hi), fmid = f(mid);
        const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        return refine(f, lo, hi, flo, fmid, fhi, whole, tol, 0);
    }

private:
    double refine(const std::function<double(double)>& f, double lo, double hi, double flo, double fmid,
                  double fhi, double whole, double tol, int depth) const {
        const double mid = 0.5 * (lo + hi);
        const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
        const double flm = f(lmid), frm = f(rmid);
        const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
        if (depth >= max_depth) throw std::runtime_error("pk_evaluate: quadrature failed to converge");
        return refine(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth + 1) +
               refine(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

double PkDistribution::sum() const {
    double s = 0.0;
    for (double x : p) s += x;
    return s;
}

PkDistribution pk_evaluate(int m, double delta, int k_max) {
    check_params(m, delta);
    if (k_max < m) throw std::invalid_argument("pk_evaluate: k_max must be at least m");

    const double a = 2.0 + delta / m;
    const double r = static_cast<double>(m) + delta;

    PkDistribution dist;
    dist.m = m;
    dist.delta = delta;
    dist.k_max = k_max;
    dist.p.reserve(static_cast<std::size_t>(k_max - m + 1));

    Quadrature quad;
    double coef = a;  // a * C_l with C_0 = 1; C_l = C_{l-1} (r+l-1)/l
    const double power = r + a - 1.0;
    for (int l = 0; l <= k_max - m; ++l) {
        if (l > 0) coef *= (r + l - 1.0) / static_cast<double>(l);
        const double ell = static_cast<double>(l);
        auto integrand = [&](double s) {
            if (s <= 0.0) return 0.0;
            if (s >= 1.0) return l == 0 ? coef : 0.0;
            return coef * std::pow(s, power) * std::pow(1.0 - s, ell);
        };
        // The mass concentrates near the Beta-kernel mode; a blind pass over
        // [0,1] can miss the spike entirely at large l, so cut the interval
        // geometrically around the mode first.
        double value = 0.0;
        if (l == 0) {
            value = quad.integrate(integrand, 0.0, 1.0, 1e-12);
        } else {
            const double peak = power / (power + ell);
            std::vector<double> cuts{0.0};
            for (double b = peak / 8.0; b < 1.0; b *= 2.0) cuts.push_back(b);
            cuts.push_back(1.0);
            const double tol = 1e-12 / static_cast<double>(cuts.size());
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                value += quad.integrate(integrand, cuts[i], cuts[i + 1], tol);
        }
        dist.p.push_back(value);
    }

    // Exact tails of the underlying law, seeded with the last quadrature
    // value: sum_{j>=l} p_j = p_l (r+a+l)/a and the weighted analogue with a
    // quadratic-in-l factor.
    const double l_last = static_cast<double>(k_max - m);
    const double p_last = dist.p.back();
    dist.tail_mass = p_last * ((r + a + l_last) / a - 1.0);

    double mean_head = 0.0;
    for (int l = 0; l <= k_max - m; ++l) mean_head += static_cast<double>(m + l) * dist.p[static_cast<std::size_t>(l)];
    const double u = 1.0 / (a - 1.0);
    const double v = (r + a + 1.0 + u * (1.0 + 2.0 * r)) / a;
    const double w = (u + v) * r / (a + 1.0);
    const double weighted_from_last = (u * l_last * l_last + v * l_last + w) * p_last;  // sum_{j>=l} j p_{m+j}
    dist.mean_with_tail = mean_head + static_cast<double>(m) * dist.tail_mass +
                          (weighted_from_last - l_last * p_last);
    return dist;
}

double pk_closed_form(int m, double delta, int k) {
    check_params(m, delta);
    if (k < m) return 0.0;
    const double a = 2.0 + delta / m;
    const double r = static_cast<double>(m) + delta;
    const double l = static_cast<double>(k - m);
    return std::exp(std::log(a) + std::lgamma(r + l) + std::lgamma(r + a) - std::lgamma(r) -
                    std::lgamma(r + a + 1.0 + l));
}

double pk_tail_mass(int m, double delta, int from_k) {
    check_params(m, delta);
    const int k0 = std::max(from_k, m);
    const double a = 2.0 + delta / m;
    const double r = static_cast<double>(m) + delta;
    const double l = static_cast<double>(k0 - m);
    return pk_closed_form(m, delta, k0) * (r + a + l) / a;
}

double pk_tail_weighted(int m, double delta, int from_k) {
    check_params(m, delta);
    const int k0 = std::max(from_k, m);
    const double a = 2.0 + delta / m;
    const double r = static_cast<double>(m) + delta;
    const double l = static_cast<double>(k0 - m);
    const double u = 1.0 / (a - 1.0);
    const double v = (r + a + 1.0 + u * (1.0 + 2.0 * r)) / a;
    const double w = (u + v) * r / (a + 1.0);
    const double p0 = pk_closed_form(m, delta, k0);
    // sum_{j>=l} (m+j) p_{m+j} = m * tail + sum_{j>=l} j p_{m+j}
    return static_cast<double>(m) * pk_tail_mass(m, delta, k0) + (u * l * l + v * l + w) * p0;
}

}  // namespace modbound
