#include "wigner/process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wigner {

int floor_index(int n, double s) {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("floor_index: s in [0,1]");
    double x = static_cast<double>(n) * s;
    double r = std::nearbyint(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)))
        return static_cast<int>(r);
    return static_cast<int>(std::floor(x));
}

BridgeGrid::BridgeGrid(const SpectralDecomposition& dec)
    : n_(dec.n), beta_(dec.beta), max_jump_(0.0),
      prefix_(static_cast<std::size_t>(dec.n + 1) * (dec.n + 1), 0.0) {
    const int n = n_;
    const double scale = std::sqrt(beta_ / 2.0);
    const double inv_n = 1.0 / n;
    const std::size_t stride = n + 1;
    // prefix[a][b] = prefix[a-1][b] + row-a partial sums.
    for (int a = 1; a <= n; ++a) {
        const double* prev = prefix_.data() + (a - 1) * stride;
        double* cur = prefix_.data() + a * stride;
        double rowsum = 0.0;
        cur[0] = 0.0;
        for (int b = 1; b <= n; ++b) {
            double cell = dec.abs2(a - 1, b - 1) - inv_n;
            max_jump_ = std::max(max_jump_, std::abs(cell));
            rowsum += cell;
            cur[b] = prev[b] + scale * rowsum;
        }
    }
    max_jump_ *= scale;
}

double BridgeGrid::eval(double s, double t) const {
    return at(floor_index(n_, s), floor_index(n_, t));
}

double BridgeGrid::rect_increment(double s, double s2, double t, double t2) const {
    if (!(s < s2) || !(t < t2))
        throw std::invalid_argument("rect_increment: need s < s' and t < t'");
    int a1 = floor_index(n_, s), a2 = floor_index(n_, s2);
    int b1 = floor_index(n_, t), b2 = floor_index(n_, t2);
    return at(a2, b2) - at(a1, b2) - at(a2, b1) + at(a1, b1);
}

double SignedMeasure::total_mass() const {
    double m = 0;
    for (const auto& [x, w] : atoms) m += w;
    return m;
}

double SignedMeasure::abs_mass() const {
    double m = 0;
    for (const auto& [x, w] : atoms) m += std::abs(w);
    return m;
}

CdfMomentPair signed_cdf_moment(const SignedMeasure& mu, int k) {
    if (k < 0) throw std::invalid_argument("signed_cdf_moment: k >= 0");
    double mass = mu.total_mass();
    double scale = std::max(mu.abs_mass(), 1.0);
    if (std::abs(mass) > 1e-12 * scale)
        throw std::invalid_argument("signed_cdf_moment: measure is not null-mass");

    auto sorted = mu.atoms;
    std::sort(sorted.begin(), sorted.end());

    // F is a step function vanishing outside the support hull, so the
    // integral is an exact sum of monomial increments between atoms.
    CdfMomentPair out;
    double f = 0.0;
    for (std::size_t j = 0; j + 1 < sorted.size(); ++j) {
        f += sorted[j].second;
        double lo = sorted[j].first, hi = sorted[j + 1].first;
        out.via_cdf += f * (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / (k + 1);
    }
    for (const auto& [x, w] : mu.atoms) out.via_measure -= w * std::pow(x, k + 1) / (k + 1);
    return out;
}

double EmpiricalCdf::operator()(double u) const {
    return static_cast<double>(count_leq(u)) / static_cast<double>(sorted_eigenvalues.size());
}

int EmpiricalCdf::count_leq(double u) const {
    return static_cast<int>(std::upper_bound(sorted_eigenvalues.begin(),
                                             sorted_eigenvalues.end(), u) -
                            sorted_eigenvalues.begin());
}

EmpiricalCdf empirical_cdf(const SpectralDecomposition& dec) {
    return EmpiricalCdf{dec.eigenvalues};
}

WeightedSpectralMeasure weighted_spectral_measure(const SpectralDecomposition& dec, int row) {
    if (row < 0 || row >= dec.n) throw std::invalid_argument("weighted_spectral_measure: row");
    WeightedSpectralMeasure m;
    m.locations = dec.eigenvalues;
    m.weights.resize(dec.n);
    for (int j = 0; j < dec.n; ++j) m.weights[j] = dec.abs2(row, j);
    return m;
}

double WeightedSpectralMeasure::weight_sum() const {
    double s = 0;
    for (double w : weights) s += w;
    return s;
}

double time_changed_eval(const BridgeGrid& grid, const SpectralDecomposition& dec, double s,
                         double u) {
    EmpiricalCdf f{dec.eigenvalues};
    return grid.at(floor_index(grid.n(), s), f.count_leq(u));
}

SignedMeasure overlap_signed_measure(const SpectralDecomposition& dec, double s) {
    const int n = dec.n;
    const int m = floor_index(n, s);
    const double scale = std::sqrt(dec.beta / 2.0);
    SignedMeasure mu;
    mu.atoms.reserve(n);
    for (int j = 0; j < n; ++j) {
        double w = 0;
        for (int i = 0; i < m; ++i) w += dec.abs2(i, j);
        w -= static_cast<double>(m) / n;
        mu.atoms.emplace_back(dec.eigenvalues[j], scale * w);
    }
    return mu;
}

double bridge_time_changed_moment(const BridgeGrid& grid, const SpectralDecomposition& dec,
                                  double s, int k) {
    if (k < 0) throw std::invalid_argument("bridge_time_changed_moment: k >= 0");
    const int n = dec.n;
    const int m = floor_index(n, s);
    double acc = 0;
    for (int j = 1; j < n; ++j) {
        double lo = dec.eigenvalues[j - 1], hi = dec.eigenvalues[j];
        acc += grid.at(m, j) * (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / (k + 1);
    }
    return acc;
}

double semicircle_cdf(double u) {
    if (u <= -2.0) return 0.0;
    if (u >= 2.0) return 1.0;
    constexpr double pi = 3.14159265358979323846;
    return 0.5 + u * std::sqrt(4.0 - u * u) / (4.0 * pi) + std::asin(u / 2.0) / pi;
}

}  // namespace wigner
