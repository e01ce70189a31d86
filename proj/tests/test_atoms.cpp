#include <doctest.h>

#include <cmath>

#include "wigner/atoms.hpp"
#include "wigner/rng.hpp"

using namespace wigner;

namespace {

// Independent quadrature oracle for moments of the uniform law on [-h, h]:
// Simpson's rule on x^k / (2h).
double uniform_moment_quadrature(double h, int k) {
    const int panels = 20000;
    const double step = 2 * h / panels;
    double acc = 0;
    for (int i = 0; i < panels; ++i) {
        double a = -h + i * step, b = a + step, m = 0.5 * (a + b);
        acc += (std::pow(a, k) + 4 * std::pow(m, k) + std::pow(b, k)) * step / 6;
    }
    return acc / (2 * h);
}

}  // namespace

TEST_CASE("exact moments of the shipped atom kinds") {
    CHECK(AtomSpec::rademacher().moment(4, 0).value == Rat(1));
    CHECK(AtomSpec::gauss_real(1).moment(4, 0).value == Rat(3));
    CHECK(AtomSpec::gauss_real(2).moment(4, 0).value == Rat(12));
    CHECK(AtomSpec::gauss_complex(1).moment(2, 2).value == Rat(2));  // E|x|^4 = 4 - beta, beta=2
    CHECK(AtomSpec::gauss_complex(1).moment(2, 0).value == Rat(0));  // E[x^2] = 0
    CHECK(AtomSpec::gauss_complex(1).moment(1, 1).value == Rat(1));

    // Quadrature oracle first, frozen value second.
    double oracle = uniform_moment_quadrature(std::sqrt(3.0), 4);
    CHECK(std::abs(oracle - 1.8) < 1e-9);
    CHECK(AtomSpec::uniform_sym_h2(3).moment(4, 0).value == Rat(9, 5));
    CHECK(AtomSpec::uniform_sym_h2(3).moment(2, 0).value == Rat(1));
}

TEST_CASE("two-point specs hit target moments at unit variance") {
    AtomSpec sym = AtomSpec::two_point_sym_m4(3);
    CHECK(sym.moment(2, 0).value == Rat(1));
    CHECK(sym.moment(4, 0).value == Rat(3));
    CHECK(sym.moment(3, 0).value == Rat(0));

    AtomSpec asym = AtomSpec::two_point_asym(2, 1);
    CHECK(asym.moment(1, 0).value == Rat(0));
    CHECK(asym.moment(2, 0).value == Rat(1));
    CHECK(asym.moment(3, 0).value == Rat(1));  // a - b
    CHECK(asym.moment(4, 0).value == Rat(3));  // a^2 - ab + b^2
}

TEST_CASE("pareto spec reports divergent moments honestly") {
    AtomSpec p = AtomSpec::pareto_sym(Rat(11, 5));  // alpha = 2.2
    CHECK(p.moment(0, 0).value == Rat(1));
    CHECK(p.moment(1, 0).value == Rat(0));
    CHECK(p.moment(2, 0).value == Rat(1));  // unit variance by construction
    CHECK_FALSE(p.moment(3, 0).finite);
    CHECK_FALSE(p.moment(4, 0).finite);
    CHECK_THROWS(AtomSpec::pareto_sym(2));  // needs alpha > 2
}

TEST_CASE("odd moments vanish for every symmetric kind") {
    const AtomSpec specs[] = {
        AtomSpec::gauss_real(2),    AtomSpec::rademacher(),
        AtomSpec::uniform_sym_h2(3), AtomSpec::two_point_sym_m4(5),
    };
    for (const auto& s : specs)
        for (int k = 1; k <= 7; k += 2) CHECK(s.moment(k, 0).value == Rat(0));
}

TEST_CASE("moment preconditions") {
    CHECK_THROWS(AtomSpec::rademacher().moment(2, 1));  // b = 0 required for real specs
    CHECK_THROWS(AtomSpec::rademacher().moment(-1, 0));
    CHECK_NOTHROW(AtomSpec::gauss_complex(1).moment(2, 1));
}

TEST_CASE("samplers match their law at desk scale") {
    RngStream rng(2024);

    AtomSpec rad = AtomSpec::rademacher();
    for (int i = 0; i < 100; ++i) {
        double v = rad.sample_real(rng);
        CHECK((v == 1.0 || v == -1.0));
    }

    const int n = 100000;
    AtomSpec g2 = AtomSpec::gauss_real(2);
    double mean = 0;
    for (int i = 0; i < n; ++i) mean += g2.sample_real(rng);
    mean /= n;
    CHECK(std::abs(mean) < 4.0 * std::sqrt(2.0) / std::sqrt(static_cast<double>(n)));

    AtomSpec uni = AtomSpec::uniform_sym_h2(3);
    double m2 = 0, m4 = 0;
    for (int i = 0; i < n; ++i) {
        double v = uni.sample_real(rng);
        m2 += v * v;
        m4 += v * v * v * v;
    }
    m2 /= n;
    m4 /= n;
    double se = std::sqrt((m4 - m2 * m2) / n);
    CHECK(std::abs(m2 - 1.0) < 3 * se);
}

TEST_CASE("complex sampler is centered with unit modulus variance") {
    RngStream rng(7);
    AtomSpec gc = AtomSpec::gauss_complex(1);
    const int n = 50000;
    std::complex<double> mean = 0;
    double mod2 = 0;
    std::complex<double> sq = 0;
    for (int i = 0; i < n; ++i) {
        auto z = gc.sample(rng);
        mean += z;
        mod2 += std::norm(z);
        sq += z * z;
    }
    CHECK(std::abs(mean) / n < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(mod2 / n - 1.0) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sq) / n < 5.0 / std::sqrt(static_cast<double>(n)));  // E[x^2] = 0
}

TEST_CASE("GOE/GUE moment matching") {
    CHECK(goe_gue_match_check(goe_diag_spec(), goe_off_spec(), 1, 12).empty());
    CHECK(goe_gue_match_check(gue_diag_spec(), gue_off_spec(), 2, 12).empty());

    auto mism = goe_gue_match_check(goe_diag_spec(), AtomSpec::rademacher(), 1, 4);
    bool has40 = false;
    for (auto [a, b] : mism) has40 = has40 || (a == 4 && b == 0);
    CHECK(has40);

    CHECK(goe_gue_match_check(goe_diag_spec(), AtomSpec::uniform_sym_h2(3), 1, 2).empty());

    // Divergent moments propagate as mismatches.
    CHECK_FALSE(goe_gue_match_check(goe_diag_spec(), AtomSpec::pareto_sym(Rat(11, 5)), 1, 4).empty());
    CHECK_THROWS(goe_gue_match_check(goe_diag_spec(), goe_off_spec(), 1, 1));
}

TEST_CASE("spec grammar round trip") {
    CHECK(AtomSpec::gauss_real(2).to_string() == "kind=gauss-real sigma2=2");
    CHECK(AtomSpec::rademacher().to_string() == "kind=rademacher");
    CHECK(AtomSpec::two_point_sym_m4(3).to_string() == "kind=two-point-sym a2=3 p=1/6");
}
