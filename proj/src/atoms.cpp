#include "wigner/atoms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wigner/rng.hpp"

namespace wigner {

namespace {

// (k-1)!! for even k: E[g^k] of a standard Gaussian.
BigInt odd_double_factorial(int k) {
    BigInt acc = 1;
    for (int j = k - 1; j >= 1; j -= 2) acc *= j;
    return acc;
}

BigInt factorial(int k) {
    BigInt acc = 1;
    for (int j = 2; j <= k; ++j) acc *= j;
    return acc;
}

}  // namespace

AtomSpec AtomSpec::gauss_real(Rat sigma2) {
    if (sigma2 <= 0) throw std::invalid_argument("gauss_real: sigma2 must be positive");
    AtomSpec s;
    s.kind = AtomKind::GaussReal;
    s.par1 = std::move(sigma2);
    return s;
}

AtomSpec AtomSpec::gauss_complex(Rat v) {
    if (v <= 0) throw std::invalid_argument("gauss_complex: v must be positive");
    AtomSpec s;
    s.kind = AtomKind::GaussComplex;
    s.is_complex = true;
    s.par1 = std::move(v);
    return s;
}

AtomSpec AtomSpec::rademacher() {
    AtomSpec s;
    s.kind = AtomKind::Rademacher;
    return s;
}

AtomSpec AtomSpec::uniform_sym_h2(Rat h2) {
    if (h2 <= 0) throw std::invalid_argument("uniform_sym: h2 must be positive");
    AtomSpec s;
    s.kind = AtomKind::UniformSym;
    s.par1 = std::move(h2);
    return s;
}

AtomSpec AtomSpec::two_point_sym(Rat a2, Rat p) {
    if (a2 <= 0 || p <= 0 || 2 * p > 1)
        throw std::invalid_argument("two_point_sym: need a2 > 0 and 0 < p <= 1/2");
    AtomSpec s;
    s.kind = AtomKind::TwoPointSym;
    s.par1 = std::move(a2);
    s.par2 = std::move(p);
    return s;
}

AtomSpec AtomSpec::two_point_sym_m4(Rat m4) {
    if (m4 < 1) throw std::invalid_argument("two_point_sym_m4: m4 >= 1 required at unit variance");
    Rat p = Rat(1) / (2 * m4);
    return two_point_sym(std::move(m4), std::move(p));
}

AtomSpec AtomSpec::two_point_asym(Rat a, Rat b) {
    if (a <= 0 || b <= 0 || a * b < 1)
        throw std::invalid_argument("two_point_asym: need a,b > 0 and ab >= 1");
    AtomSpec s;
    s.kind = AtomKind::TwoPointAsym;
    s.par1 = std::move(a);
    s.par2 = std::move(b);
    return s;
}

AtomSpec AtomSpec::pareto_sym(Rat alpha) {
    if (alpha <= 2) throw std::invalid_argument("pareto_sym: alpha > 2 required for unit variance");
    AtomSpec s;
    s.kind = AtomKind::ParetoSym;
    s.par1 = alpha;
    s.par2 = (alpha - 2) / alpha;  // xm^2 making E[x^2] = alpha*xm^2/(alpha-2) = 1
    return s;
}

MomentValue AtomSpec::moment(int a, int b) const {
    if (a < 0 || b < 0) throw std::invalid_argument("moment: negative order");
    if (!is_complex && b != 0)
        throw std::invalid_argument("moment: b = 0 required for a real atom spec");
    int k = a + b;
    switch (kind) {
        case AtomKind::GaussReal:
            if (k % 2 != 0) return Rat(0);
            return Rat(odd_double_factorial(k)) * rat_pow(par1, k / 2);
        case AtomKind::GaussComplex:
            // Rotation invariance kills everything but |x|^(2a).
            if (a != b) return Rat(0);
            return Rat(factorial(a)) * rat_pow(par1, a);
        case AtomKind::Rademacher:
            return k % 2 == 0 ? Rat(1) : Rat(0);
        case AtomKind::UniformSym:
            if (k % 2 != 0) return Rat(0);
            return rat_pow(par1, k / 2) / (k + 1);
        case AtomKind::TwoPointSym:
            if (k % 2 != 0) return Rat(0);
            if (k == 0) return Rat(1);
            return 2 * par2 * rat_pow(par1, k / 2);
        case AtomKind::TwoPointAsym: {
            if (k == 0) return Rat(1);
            const Rat& av = par1;
            const Rat& bv = par2;
            Rat p = Rat(1) / (av * (av + bv));
            Rat q = Rat(1) / (bv * (av + bv));
            Rat neg = rat_pow(bv, k);
            if (k % 2 != 0) neg = -neg;
            return p * rat_pow(av, k) + q * neg;
        }
        case AtomKind::ParetoSym:
            if (Rat(k) >= par1) return MomentValue::infinite();
            if (k % 2 != 0) return Rat(0);
            return par1 * rat_pow(par2, k / 2) / (par1 - k);
    }
    throw std::logic_error("moment: unknown atom kind");
}

Rat AtomSpec::variance() const {
    MomentValue m = is_complex ? moment(1, 1) : moment(2, 0);
    if (!m.finite) throw std::logic_error("variance: divergent second moment");
    return m.value;
}

double AtomSpec::sample_real(RngStream& rng) const {
    switch (kind) {
        case AtomKind::GaussReal:
            return std::sqrt(to_double(par1)) * rng.next_gaussian();
        case AtomKind::Rademacher:
            return rng.next_u64() & 1 ? 1.0 : -1.0;
        case AtomKind::UniformSym:
            return std::sqrt(to_double(par1)) * (2.0 * rng.next_unit() - 1.0);
        case AtomKind::TwoPointSym: {
            double p = to_double(par2);
            double a = std::sqrt(to_double(par1));
            double u = rng.next_unit();
            if (u < p) return a;
            if (u < 2 * p) return -a;
            return 0.0;
        }
        case AtomKind::TwoPointAsym: {
            double a = to_double(par1);
            double b = to_double(par2);
            double p = 1.0 / (a * (a + b));
            double q = 1.0 / (b * (a + b));
            double u = rng.next_unit();
            if (u < p) return a;
            if (u < p + q) return -b;
            return 0.0;
        }
        case AtomKind::ParetoSym: {
            double alpha = to_double(par1);
            double xm = std::sqrt(to_double(par2));
            double mag = xm * std::pow(rng.next_unit(), -1.0 / alpha);
            return rng.next_u64() & 1 ? mag : -mag;
        }
        case AtomKind::GaussComplex:
            throw std::invalid_argument("sample_real: complex atom spec");
    }
    throw std::logic_error("sample_real: unknown atom kind");
}

std::complex<double> AtomSpec::sample(RngStream& rng) const {
    if (kind == AtomKind::GaussComplex)
        return std::sqrt(to_double(par1)) * rng.next_complex_gaussian();
    return {sample_real(rng), 0.0};
}

std::string AtomSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case AtomKind::GaussReal: os << "kind=gauss-real sigma2=" << rat_string(par1); break;
        case AtomKind::GaussComplex: os << "kind=gauss-complex v=" << rat_string(par1); break;
        case AtomKind::Rademacher: os << "kind=rademacher"; break;
        case AtomKind::UniformSym: os << "kind=uniform-sym h2=" << rat_string(par1); break;
        case AtomKind::TwoPointSym:
            os << "kind=two-point-sym a2=" << rat_string(par1) << " p=" << rat_string(par2);
            break;
        case AtomKind::TwoPointAsym:
            os << "kind=two-point-asym a=" << rat_string(par1) << " b=" << rat_string(par2);
            break;
        case AtomKind::ParetoSym: os << "kind=pareto-sym alpha=" << rat_string(par1); break;
    }
    return os.str();
}

AtomSpec goe_diag_spec() { return AtomSpec::gauss_real(2); }
AtomSpec goe_off_spec() { return AtomSpec::gauss_real(1); }
AtomSpec gue_diag_spec() { return AtomSpec::gauss_real(1); }
AtomSpec gue_off_spec() { return AtomSpec::gauss_complex(1); }

namespace {

// Equality of possibly-divergent moments; any divergence is a mismatch.
bool moments_agree(const MomentValue& x, const MomentValue& y) {
    if (!x.finite || !y.finite) return false;
    return x.value == y.value;
}

}  // namespace

std::vector<std::pair<int, int>> goe_gue_match_check(const AtomSpec& diag,
                                                     const AtomSpec& off,
                                                     int beta, int m) {
    if (beta != 1 && beta != 2) throw std::invalid_argument("goe_gue_match_check: beta in {1,2}");
    if (m < 2) throw std::invalid_argument("goe_gue_match_check: m >= 2");
    AtomSpec ref_diag = beta == 1 ? goe_diag_spec() : gue_diag_spec();
    AtomSpec ref_off = beta == 1 ? goe_off_spec() : gue_off_spec();

    std::vector<std::pair<int, int>> mismatches;
    for (int k = 1; k <= m - 2; ++k) {
        if (!moments_agree(diag.moment(k, 0), ref_diag.moment(k, 0)))
            mismatches.emplace_back(k, 0);
    }
    for (int k = 1; k <= m; ++k) {
        for (int b = 0; b <= k; ++b) {
            int a = k - b;
            if (!off.is_complex && b > 0) continue;
            MomentValue lhs = off.is_complex ? off.moment(a, b)
                                             : off.moment(a, 0);
            MomentValue rhs = ref_off.is_complex ? ref_off.moment(a, b)
                                                 : ref_off.moment(a, 0);
            // Comparing a real spec against a complex reference (or vice
            // versa) only makes sense inside one symmetry class; the beta
            // argument fixes the reference, so the bases line up.
            if (off.is_complex != ref_off.is_complex) {
                mismatches.emplace_back(a, b);
                continue;
            }
            if (!moments_agree(lhs, rhs)) mismatches.emplace_back(a, b);
        }
    }
    return mismatches;
}

}  // namespace wigner
