#include <doctest.h>

#include <cmath>
#include <sstream>

#include "wigner/matrices.hpp"
#include "wigner/rng.hpp"

using namespace wigner;

TEST_CASE("build_wigner basics") {
    RngStream rng(1);
    EnsembleSpec one{1, 1, AtomSpec::rademacher(), AtomSpec::rademacher()};
    RMat x1 = build_wigner_real(one, rng);
    CHECK((x1(0, 0) == 1.0 || x1(0, 0) == -1.0));  // 1/sqrt(1) scaling

    EnsembleSpec two = EnsembleSpec::gue(2);
    CMat x2 = build_wigner_complex(two, rng);
    CHECK(x2(0, 1) == std::conj(x2(1, 0)));
    CHECK(x2(0, 0).imag() == 0.0);

    EnsembleSpec goe5 = EnsembleSpec::goe(5);
    RMat x5 = build_wigner_real(goe5, rng);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(x5(i, j) == x5(j, i));
}

TEST_CASE("ensemble validation") {
    EnsembleSpec bad{2, 4, goe_diag_spec(), goe_off_spec()};  // beta=2 wants complex offdiag
    CHECK_THROWS(bad.validate());
    EnsembleSpec bad2{1, 4, goe_diag_spec(), gue_off_spec()};
    CHECK_THROWS(bad2.validate());
    CHECK_NOTHROW(EnsembleSpec::goe(4).validate());
    CHECK_NOTHROW(EnsembleSpec::gue(4).validate());
}

TEST_CASE("2x2 exchange matrix decomposition") {
    RMat x(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    SpectralDecomposition dec = spectral_decomposition(x);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(dec.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(dec.eigenvalues[1] == doctest::Approx(1.0));
    // Phase convention: ties on modulus resolve to the lowest row entry > 0.
    CHECK(dec.u_real(0, 0) == doctest::Approx(r));
    CHECK(dec.u_real(1, 0) == doctest::Approx(-r));
    CHECK(dec.u_real(0, 1) == doctest::Approx(r));
    CHECK(dec.u_real(1, 1) == doctest::Approx(r));
}

TEST_CASE("diagonal input gives a positive permutation") {
    RMat x(3);
    x(0, 0) = 3.0;
    x(1, 1) = 1.0;
    x(2, 2) = 2.0;
    SpectralDecomposition dec = spectral_decomposition(x);
    CHECK(dec.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(dec.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(dec.eigenvalues[2] == doctest::Approx(3.0));
    // Columns are e2, e3, e1 with +1 entries.
    CHECK(dec.u_real(1, 0) == doctest::Approx(1.0));
    CHECK(dec.u_real(2, 1) == doctest::Approx(1.0));
    CHECK(dec.u_real(0, 2) == doctest::Approx(1.0));
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) CHECK(std::abs(dec.u_real(i, j)) <= 1.0 + 1e-15);
}

TEST_CASE("decomposition invariants on random ensembles") {
    RngStream rng(42);

    SUBCASE("GOE n=50") {
        RMat x = build_wigner_real(EnsembleSpec::goe(50), rng);
        SpectralDecomposition dec = spectral_decomposition(x);
        CHECK(orthonormality_residual(dec) <= 1e-10 * 50);
        CHECK(reconstruction_residual(dec, x) <= 1e-8 * 50 * abs_max(x));
        double trace = 0, lsum = 0;
        for (int i = 0; i < 50; ++i) trace += x(i, i);
        for (double l : dec.eigenvalues) lsum += l;
        CHECK(std::abs(trace - lsum) <= 1e-8 * 50 * abs_max(x));
        for (int j = 1; j < 50; ++j) CHECK(dec.eigenvalues[j - 1] <= dec.eigenvalues[j]);
    }

    SUBCASE("GUE n=40") {
        CMat x = build_wigner_complex(EnsembleSpec::gue(40), rng);
        SpectralDecomposition dec = spectral_decomposition(x);
        CHECK(orthonormality_residual(dec) <= 1e-10 * 40);
        CHECK(reconstruction_residual(dec, x) <= 1e-8 * 40 * abs_max(x));
        // Phase convention: the pivot entry of each column is real positive.
        for (int j = 0; j < 40; ++j) {
            int best = 0;
            double best_abs = 0;
            for (int i = 0; i < 40; ++i) {
                double a = std::abs(dec.u_complex(i, j));
                if (a > best_abs) {
                    best_abs = a;
                    best = i;
                }
            }
            CHECK(dec.u_complex(best, j).imag() == 0.0);
            CHECK(dec.u_complex(best, j).real() > 0.0);
        }
    }

    SUBCASE("degenerate complex spectrum (identity)") {
        CMat x(6);
        for (int i = 0; i < 6; ++i) x(i, i) = 1.0;
        SpectralDecomposition dec = spectral_decomposition(x);
        CHECK(orthonormality_residual(dec) <= 1e-12);
        for (double l : dec.eigenvalues) CHECK(l == doctest::Approx(1.0));
    }
}

TEST_CASE("decomposition is deterministic") {
    RngStream rng(5);
    RMat x = build_wigner_real(EnsembleSpec::goe(30), rng);
    SpectralDecomposition a = spectral_decomposition(x);
    SpectralDecomposition b = spectral_decomposition(x);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.u_real.data() == b.u_real.data());
}

TEST_CASE("eigenvalues-only path agrees with the full solve") {
    RngStream rng(9);
    RMat x = build_wigner_real(EnsembleSpec::goe(25), rng);
    auto vals = symmetric_eigenvalues(x);
    SpectralDecomposition dec = spectral_decomposition(x);
    for (int i = 0; i < 25; ++i) CHECK(vals[i] == doctest::Approx(dec.eigenvalues[i]).epsilon(1e-12));

    CMat xc = build_wigner_complex(EnsembleSpec::gue(20), rng);
    auto cvals = hermitian_eigenvalues(xc);
    SpectralDecomposition cdec = spectral_decomposition(xc);
    for (int i = 0; i < 20; ++i)
        CHECK(cvals[i] == doctest::Approx(cdec.eigenvalues[i]).epsilon(1e-12));
}

TEST_CASE("haar sampling basics") {
    RngStream rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        RMat u = haar_orthogonal(1, rng);
        CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-14);
    }

    // n=2 Haar unitary: |u11|^2 is uniform on [0,1], so E = 1/2, E of square 1/3.
    const int samples = 20000;
    double m1 = 0, m2 = 0;
    for (int t = 0; t < samples; ++t) {
        CMat u = haar_unitary(2, rng);
        double v = std::norm(u(0, 0));
        m1 += v;
        m2 += v * v;
    }
    m1 /= samples;
    m2 /= samples;
    // Var(|u11|^2) = 1/12, Var(|u11|^4) = 1/5 - 1/9.
    CHECK(std::abs(m1 - 0.5) < 3 * std::sqrt(1.0 / 12 / samples));
    CHECK(std::abs(m2 - 1.0 / 3) < 3 * std::sqrt((0.2 - 1.0 / 9) / samples));

    // Orthogonality of the sampled frame.
    RMat q = haar_orthogonal(15, rng);
    for (int a = 0; a < 15; ++a)
        for (int b = 0; b < 15; ++b) {
            double dot = 0;
            for (int i = 0; i < 15; ++i) dot += q(i, a) * q(i, b);
            CHECK(std::abs(dot - (a == b ? 1 : 0)) < 1e-12);
        }
}

TEST_CASE("matrix dump format") {
    RngStream rng(3);
    WignerSample x = build_wigner(EnsembleSpec::gue(2), rng);
    std::ostringstream os;
    dump_matrix(os, x);
    std::string text = os.str();
    CHECK(text.rfind("# n=2 beta=2", 0) == 0);
    CHECK(text.find('j') != std::string::npos);  // complex entries as re+imj
}
