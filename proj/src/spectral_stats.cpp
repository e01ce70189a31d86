#include "wigner/spectral_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "wigner/process.hpp"
#include "wigner/rng.hpp"

namespace wigner {

namespace {

template <typename T>
std::vector<double> power_diagonal_impl(const Mat<T>& x, int k) {
    const int n = x.n();
    if (k < 1 || k > kMaxTraceOrder)
        throw std::invalid_argument("power_diagonal: k must be in [1, 12]");
    std::vector<double> diag(n);
    if (k == 1) {
        for (int i = 0; i < n; ++i) diag[i] = std::real(x(i, i));
        return diag;
    }
    // P = X^(k-1), then (X^k)_ii = row_i(X) . col_i(P).
    Mat<T> p = x;
    for (int j = 2; j < k; ++j) p = multiply(x, p);
    for (int i = 0; i < n; ++i) {
        T acc{};
        const T* pc = p.col(i);
        for (int j = 0; j < n; ++j) acc += x(i, j) * pc[j];
        diag[i] = std::real(acc);
    }
    return diag;
}

double t_from_diag(const std::vector<double>& diag, int n, double s) {
    const int m = floor_index(n, s);
    double trace = 0;
    for (double v : diag) trace += v;
    const double mean = trace / n;
    double t = 0;
    for (int i = 0; i < m; ++i) t += diag[i] - mean;
    return t;
}

}  // namespace

std::vector<double> power_diagonal(const RMat& x, int k) { return power_diagonal_impl(x, k); }
std::vector<double> power_diagonal(const CMat& x, int k) { return power_diagonal_impl(x, k); }

double t_stat_power(const RMat& x, double s, int k) {
    return t_from_diag(power_diagonal(x, k), x.n(), s);
}

double t_stat_power(const CMat& x, double s, int k) {
    return t_from_diag(power_diagonal(x, k), x.n(), s);
}

double t_stat_power(const WignerSample& x, double s, int k) {
    return x.beta == 1 ? t_stat_power(x.real, s, k) : t_stat_power(x.complex, s, k);
}

double t_stat_spectral(const SpectralDecomposition& dec, double s, int k) {
    if (k < 1 || k > kMaxTraceOrder)
        throw std::invalid_argument("t_stat_spectral: k must be in [1, 12]");
    const int n = dec.n;
    const int m = floor_index(n, s);
    const double inv_n = 1.0 / n;
    double t = 0;
    for (int j = 0; j < n; ++j) {
        double lk = std::pow(dec.eigenvalues[j], k);
        double w = 0;
        for (int i = 0; i < m; ++i) w += dec.abs2(i, j);
        t += lk * (w - m * inv_n);
    }
    return t;
}

DiagonalMeanOracle diag_mean_oracle(const EnsembleSpec& spec, int k, int mc_trials,
                                    std::uint64_t mc_seed) {
    spec.validate();
    if (k < 1 || k > kMaxTraceOrder)
        throw std::invalid_argument("diag_mean_oracle: k must be in [1, 12]");
    const int n = spec.n;
    if (k == 1) return {0.0, 0.0};  // centered diagonal entries
    if (k == 2) {
        // (X^2)_ii = (1/n)(sum_{j != i} |x_ij|^2 + x_ii^2).
        double off_var = to_double(spec.offdiag.variance());
        double diag_var = to_double(spec.diag.variance());
        return {((n - 1) * off_var + diag_var) / n, 0.0};
    }
    // Auxiliary Monte Carlo: average the full diagonal of X^k over trials.
    double sum = 0, sumsq = 0;
    for (int t = 0; t < mc_trials; ++t) {
        RngStream rng(mc_seed, static_cast<std::uint64_t>(t));
        WignerSample x = build_wigner(spec, rng);
        std::vector<double> diag = x.beta == 1 ? power_diagonal(x.real, k)
                                               : power_diagonal(x.complex, k);
        double trial_mean = 0;
        for (double v : diag) trial_mean += v;
        trial_mean /= n;
        sum += trial_mean;
        sumsq += trial_mean * trial_mean;
    }
    double mean = sum / mc_trials;
    double var = std::max(0.0, sumsq / mc_trials - mean * mean);
    return {mean, std::sqrt(var / mc_trials)};
}

namespace {

template <typename T>
CenteredTStat centered_impl(const Mat<T>& x, double s, int k, const DiagonalMeanOracle& oracle) {
    const int n = x.n();
    const int m = floor_index(n, s);
    std::vector<double> diag = power_diagonal_impl(x, k);
    CenteredTStat out;
    for (int i = 0; i < n; ++i) {
        double c = diag[i] - oracle.mean;
        if (i < m) out.centered += c;
        out.centered_full += c;
    }
    out.recombined = out.centered - (static_cast<double>(m) / n) * out.centered_full;
    return out;
}

}  // namespace

CenteredTStat centered_t_stat(const RMat& x, double s, int k, const DiagonalMeanOracle& oracle) {
    return centered_impl(x, s, k, oracle);
}

CenteredTStat centered_t_stat(const CMat& x, double s, int k, const DiagonalMeanOracle& oracle) {
    return centered_impl(x, s, k, oracle);
}

}  // namespace wigner
