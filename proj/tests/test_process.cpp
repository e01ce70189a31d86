#include <doctest.h>

#include <cmath>

#include "wigner/process.hpp"
#include "wigner/rng.hpp"
#include "wigner/spectral_stats.hpp"

using namespace wigner;

namespace {

// Decomposition with U = I: the spectrum of diag(-1, ..., +k) style inputs.
SpectralDecomposition identity_dec(int n, int beta) {
    SpectralDecomposition dec;
    dec.n = n;
    dec.beta = beta;
    dec.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) dec.eigenvalues[i] = i - (n - 1) / 2.0;
    dec.overlaps = RMat::identity(n);
    if (beta == 1)
        dec.u_real = RMat::identity(n);
    else
        dec.u_complex = CMat::identity(n);
    return dec;
}

double simpson_semicircle_mass(double hi) {
    const int panels = 200000;
    const double lo = -2.0;
    const double step = (hi - lo) / panels;
    auto density = [](double x) { return std::sqrt(std::max(0.0, 4.0 - x * x)) / (2 * M_PI); };
    double acc = 0;
    for (int i = 0; i < panels; ++i) {
        double a = lo + i * step, b = a + step;
        acc += (density(a) + 4 * density(0.5 * (a + b)) + density(b)) * step / 6;
    }
    return acc;
}

}  // namespace

TEST_CASE("floor_index hits rational boundaries exactly") {
    CHECK(floor_index(10, 0.3) == 3);
    CHECK(floor_index(10, 0.299) == 2);
    CHECK(floor_index(3, 1.0 / 3.0) == 1);
    CHECK(floor_index(7, 2.0 / 7.0) == 2);
    CHECK(floor_index(5, 0.0) == 0);
    CHECK(floor_index(5, 1.0) == 5);
    CHECK_THROWS(floor_index(5, 1.5));
}

TEST_CASE("bridge grid on trivial inputs") {
    SpectralDecomposition one = identity_dec(1, 1);
    BridgeGrid g1(one);
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) CHECK(g1.at(a, b) == 0.0);
    CHECK(g1.max_jump() == 0.0);

    SpectralDecomposition two = identity_dec(2, 1);
    BridgeGrid g2(two);
    CHECK(g2.eval(0.5, 0.5) == doctest::Approx(std::sqrt(0.5) * 0.5));
    CHECK(g2.max_jump() == doctest::Approx(std::sqrt(0.5) * 0.5));

    SpectralDecomposition two_c = identity_dec(2, 2);
    BridgeGrid g2c(two_c);
    CHECK(g2c.eval(0.5, 0.5) == doctest::Approx(0.5));  // sqrt(beta/2) = 1
}

TEST_CASE("bridge border vanishes and increments add up") {
    RngStream rng(17);
    RMat x = build_wigner_real(EnsembleSpec::goe(60), rng);
    SpectralDecomposition dec = spectral_decomposition(x);
    BridgeGrid g(dec);
    const int n = 60;

    for (int b = 0; b <= n; ++b) {
        CHECK(g.at(0, b) == 0.0);
        CHECK(g.at(b, 0) == 0.0);
        CHECK(std::abs(g.at(n, b)) <= 1e-9 * n * n);
        CHECK(std::abs(g.at(b, n)) <= 1e-9 * n * n);
    }
    CHECK(g.eval(0.0, 0.7) == 0.0);
    CHECK(std::abs(g.eval(1.0, 0.37)) <= 1e-9 * n * n);

    // Full rectangle telescopes to the corner values.
    CHECK(std::abs(g.rect_increment(0.0, 1.0, 0.0, 1.0)) <= 1e-9 * n * n);
    // Degenerate after flooring.
    CHECK(g.rect_increment(0.301, 0.309, 0.2, 0.8) == 0.0);
    // Additivity over a split.
    double whole = g.rect_increment(0.1, 0.9, 0.2, 0.8);
    double left = g.rect_increment(0.1, 0.5, 0.2, 0.8);
    double right = g.rect_increment(0.5, 0.9, 0.2, 0.8);
    CHECK(whole == doctest::Approx(left + right).epsilon(1e-12));
    CHECK_THROWS(g.rect_increment(0.5, 0.5, 0.1, 0.2));

    // max_jump against a direct scan of the overlaps.
    double direct = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            direct = std::max(direct, std::abs(dec.abs2(i, j) - 1.0 / n));
    CHECK(g.max_jump() == doctest::Approx(std::sqrt(0.5) * direct));
}

TEST_CASE("time-changed evaluation on the 2x2 identity case") {
    SpectralDecomposition dec = identity_dec(2, 1);
    BridgeGrid g(dec);
    double l1 = dec.eigenvalues[0], l2 = dec.eigenvalues[1];
    CHECK(time_changed_eval(g, dec, 0.5, l1 - 1.0) == 0.0);          // u below the spectrum
    CHECK(std::abs(time_changed_eval(g, dec, 0.5, l2)) <= 1e-15);    // u at the top: border
    CHECK(time_changed_eval(g, dec, 0.5, l1) == doctest::Approx(std::sqrt(0.5) * 0.5));
}

TEST_CASE("time-changed process is the CDF of the overlap signed measure") {
    RngStream rng(23);
    RMat x = build_wigner_real(EnsembleSpec::goe(40), rng);
    SpectralDecomposition dec = spectral_decomposition(x);
    BridgeGrid g(dec);
    const double s = 0.4;

    SignedMeasure mu = overlap_signed_measure(dec, s);
    CHECK(std::abs(mu.total_mass()) <= 1e-12 * std::max(1.0, mu.abs_mass()));

    // Evaluate the CDF of mu at midpoints and at eigenvalues.
    for (int j = 0; j < 40; j += 7) {
        double u = dec.eigenvalues[j];
        double cdf = 0;
        for (const auto& [loc, w] : mu.atoms)
            if (loc <= u) cdf += w;
        CHECK(time_changed_eval(g, dec, s, u) == doctest::Approx(cdf).epsilon(1e-9));
    }
    double below = dec.eigenvalues.front() - 0.5;
    CHECK(time_changed_eval(g, dec, s, below) == 0.0);
}

TEST_CASE("signed cdf moments: the two routes are mutual oracles") {
    SUBCASE("dipole") {
        SignedMeasure mu;
        mu.atoms = {{1.0, 1.0}, {-1.0, -1.0}};
        auto k0 = signed_cdf_moment(mu, 0);
        CHECK(k0.via_cdf == doctest::Approx(-2.0));
        CHECK(k0.via_measure == doctest::Approx(-2.0));
        auto k1 = signed_cdf_moment(mu, 1);
        CHECK(k1.via_cdf == doctest::Approx(0.0));
        CHECK(k1.via_measure == doctest::Approx(0.0));
    }

    SUBCASE("random null-mass measures") {
        RngStream rng(31);
        for (int rep = 0; rep < 30; ++rep) {
            SignedMeasure mu;
            double mass = 0;
            for (int a = 0; a < 9; ++a) {
                double x = 4.0 * rng.next_unit() - 2.0;
                double w = rng.next_gaussian();
                mass += w;
                mu.atoms.emplace_back(x, w);
            }
            mu.atoms.emplace_back(4.0 * rng.next_unit() - 2.0, -mass);
            for (int k = 0; k <= 6; ++k) {
                auto pair = signed_cdf_moment(mu, k);
                double scale = std::max({std::abs(pair.via_cdf), std::abs(pair.via_measure), 1.0});
                CHECK(std::abs(pair.via_cdf - pair.via_measure) <= 1e-10 * scale);
            }
        }
    }

    SUBCASE("non-null-mass input rejected") {
        SignedMeasure mu;
        mu.atoms = {{0.0, 1.0}, {1.0, 0.5}};
        CHECK_THROWS(signed_cdf_moment(mu, 0));
    }
}

TEST_CASE("weighted spectral measure is a probability measure") {
    RngStream rng(37);
    CMat x = build_wigner_complex(EnsembleSpec::gue(30), rng);
    SpectralDecomposition dec = spectral_decomposition(x);
    for (int row : {0, 7, 29}) {
        auto m = weighted_spectral_measure(dec, row);
        for (double w : m.weights) CHECK(w >= 0.0);
        CHECK(std::abs(m.weight_sum() - 1.0) <= 1e-10);
    }
    CHECK_THROWS(weighted_spectral_measure(dec, 30));
}

TEST_CASE("empirical cdf counts eigenvalues") {
    SpectralDecomposition dec = identity_dec(4, 1);  // eigenvalues -1.5,-0.5,0.5,1.5
    EmpiricalCdf f = empirical_cdf(dec);
    CHECK(f(-2.0) == 0.0);
    CHECK(f(-0.5) == doctest::Approx(0.5));
    CHECK(f(10.0) == 1.0);
    CHECK(f.count_leq(0.49) == 2);
}

TEST_CASE("semicircle cdf") {
    CHECK(semicircle_cdf(-2.0) == 0.0);
    CHECK(semicircle_cdf(2.0) == 1.0);
    CHECK(semicircle_cdf(0.0) == doctest::Approx(0.5));

    // Quadrature oracle first, frozen value second.
    double oracle = simpson_semicircle_mass(1.0);
    CHECK(oracle == doctest::Approx(0.8044989).epsilon(1e-6));
    CHECK(semicircle_cdf(1.0) == doctest::Approx(0.8044989).epsilon(1e-6));
    CHECK(semicircle_cdf(1.0) == doctest::Approx(oracle).epsilon(1e-8));

    double prev = -1;
    for (double u = -2.2; u <= 2.2; u += 0.01) {
        double v = semicircle_cdf(u);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("moment transfer: step quadrature vs power trace route") {
    RngStream rng(41);
    for (int rep = 0; rep < 3; ++rep) {
        RMat x = build_wigner_real(EnsembleSpec::goe(30), rng);
        SpectralDecomposition dec = spectral_decomposition(x);
        BridgeGrid g(dec);
        for (double s : {0.3, 0.5, 1.0}) {
            for (int k = 0; k <= 5; ++k) {
                double lhs = bridge_time_changed_moment(g, dec, s, k);
                double rhs = -std::sqrt(0.5) / (k + 1) * t_stat_power(x, s, k + 1);
                double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
                CHECK(std::abs(lhs - rhs) <= 1e-8 * scale);
            }
        }
    }
}
