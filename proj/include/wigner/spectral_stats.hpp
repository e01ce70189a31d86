#pragma once

#include <cstdint>
#include <vector>

#include "wigner/matrices.hpp"

namespace wigner {

// T_n(s, k) = sum_{1 <= i <= ns} ((X^k)_ii - Tr X^k / n).
//
// Two deliberately independent evaluation routes: t_stat_power forms the
// diagonal of X^k by repeated dense multiplication of X itself (never through
// the eigendecomposition), t_stat_spectral goes through eigenvalues and
// squared overlaps.  They must agree to ~1e-8 * n * max|lambda|^k, which makes
// each one an oracle for the other.

constexpr int kMaxTraceOrder = 12;

double t_stat_power(const RMat& x, double s, int k);
double t_stat_power(const CMat& x, double s, int k);
double t_stat_power(const WignerSample& x, double s, int k);

double t_stat_spectral(const SpectralDecomposition& dec, double s, int k);

// Diagonals of X^k (real because X is Hermitian), plus the trace.
std::vector<double> power_diagonal(const RMat& x, int k);
std::vector<double> power_diagonal(const CMat& x, int k);

// E[(X^k)_ii] for the ensemble -- the same for every i by exchangeability.
// Exact closed forms for k = 1, 2; Monte Carlo with a reported standard error
// otherwise.
struct DiagonalMeanOracle {
    double mean = 0;
    double se = 0;  // 0 for exact values
};
DiagonalMeanOracle diag_mean_oracle(const EnsembleSpec& spec, int k,
                                    int mc_trials = 10000, std::uint64_t mc_seed = 12345);

// Centered statistic sum_{i<=ns} ((X^k)_ii - E[(X^k)_ii]) together with its
// full-sum companion and the recombination
//   T_n(s,k) = centered(s) - (floor(ns)/n) * centered(1),
// which is an exact identity with the trace-centered statistic.
struct CenteredTStat {
    double centered = 0;       // expectation-centered partial sum
    double centered_full = 0;  // the same at s = 1
    double recombined = 0;     // trace-centered T_n(s,k) reassembled
};
CenteredTStat centered_t_stat(const RMat& x, double s, int k, const DiagonalMeanOracle& oracle);
CenteredTStat centered_t_stat(const CMat& x, double s, int k, const DiagonalMeanOracle& oracle);

}  // namespace wigner
