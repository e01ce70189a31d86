#pragma once

#include <utility>
#include <vector>

#include "wigner/matrices.hpp"

namespace wigner {

// floor(n * s) with a snap guard so that s = k/n evaluates to k even when
// n * s lands just below an integer in floating point.
int floor_index(int n, double s);

// The empirical overlap field on the (n+1) x (n+1) lattice:
//   prefix[a][b] = sqrt(beta/2) * sum_{i<=a, j<=b} (|u_ij|^2 - 1/n).
// Rows and columns of U have unit norm, so the field vanishes on the whole
// border of the lattice (up to accumulation error).  Evaluation anywhere in
// [0,1]^2 is O(1) after the O(n^2) build.
class BridgeGrid {
public:
    explicit BridgeGrid(const SpectralDecomposition& dec);

    int n() const { return n_; }
    int beta() const { return beta_; }

    double at(int a, int b) const { return prefix_[static_cast<std::size_t>(a) * (n_ + 1) + b]; }

    // B^n(s, t) = prefix[floor(n s)][floor(n t)]; cadlag in both arguments.
    double eval(double s, double t) const;

    // B(s',t') - B(s,t') - B(s',t) + B(s,t): the rectangle sum of
    // sqrt(beta/2) (|u_ij|^2 - 1/n) over ns < i <= ns', nt < j <= nt'.
    double rect_increment(double s, double s2, double t, double t2) const;

    // sqrt(beta/2) * max_ij | |u_ij|^2 - 1/n |: the largest jump of the field.
    double max_jump() const { return max_jump_; }

private:
    int n_;
    int beta_;
    double max_jump_;
    std::vector<double> prefix_;
};

// Finitely supported signed measure.
struct SignedMeasure {
    std::vector<std::pair<double, double>> atoms;  // (location, weight)

    double total_mass() const;
    double abs_mass() const;
};

// Both evaluations of integral u^k F_mu(u) du for a null-mass measure:
// exact piecewise-polynomial integration of the step function F_mu, and
// -sum_j w_j x_j^{k+1} / (k+1).  The two routes are independent oracles for
// each other and must agree to ~1e-10 relative.
struct CdfMomentPair {
    double via_cdf = 0;
    double via_measure = 0;
};
CdfMomentPair signed_cdf_moment(const SignedMeasure& mu, int k);

// F(u) = #{i : lambda_i <= u} / n for the sampled spectrum.
struct EmpiricalCdf {
    std::vector<double> sorted_eigenvalues;
    double operator()(double u) const;
    int count_leq(double u) const;
};
EmpiricalCdf empirical_cdf(const SpectralDecomposition& dec);

// The weighted spectral measure mu_{X, e_row}: mass |u_{row,j}|^2 at each
// eigenvalue.
struct WeightedSpectralMeasure {
    std::vector<double> locations;
    std::vector<double> weights;
    double weight_sum() const;
};
WeightedSpectralMeasure weighted_spectral_measure(const SpectralDecomposition& dec, int row);

// B^n(s, F(u)) for the sampled spectrum's own empirical CDF F.  As a function
// of u this is the CDF of the null-mass signed measure
// sqrt(beta/2) sum_{i<=ns} (mu_{X,e_i} - mu_X).
double time_changed_eval(const BridgeGrid& grid, const SpectralDecomposition& dec, double s,
                         double u);

// That signed measure itself, for feeding signed_cdf_moment.
SignedMeasure overlap_signed_measure(const SpectralDecomposition& dec, double s);

// integral of u^k B^n(s, F(u)) du over the spectral support: the integrand is
// a step function with breakpoints at the eigenvalues, so the quadrature is
// an exact sum of monomial increments.  Equals
// -(1/(k+1)) sqrt(beta/2) T_n(s, k+1) up to eigensolver round-off.
double bridge_time_changed_moment(const BridgeGrid& grid, const SpectralDecomposition& dec,
                                  double s, int k);

// CDF of the semicircle law: 1/2 + u sqrt(4-u^2)/(4 pi) + arcsin(u/2)/pi
// on [-2,2], clamped outside.
double semicircle_cdf(double u);

}  // namespace wigner
