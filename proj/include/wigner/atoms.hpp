#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "wigner/rational.hpp"
#include "wigner/rng.hpp"

namespace wigner {

class RngStream;

enum class AtomKind {
    GaussReal,     // N(0, sigma2)
    GaussComplex,  // standard complex Gaussian scaled to E|x|^2 = v, E[x^2] = 0
    Rademacher,    // +-1 with probability 1/2
    UniformSym,    // uniform on [-h, h], parametrized by h2 = h^2
    TwoPointSym,   // +-a with probability p each, 0 otherwise; a2 = a^2
    TwoPointAsym,  // a w.p. 1/(a(a+b)), -b w.p. 1/(b(a+b)), 0 otherwise; unit variance
    ParetoSym,     // symmetrized Pareto, tail index alpha, minimum modulus xm = sqrt(xm2)
};

// An entry ("atom") distribution: a sampler paired with an exact joint-moment
// oracle E[x^a conj(x)^b].  All shipped kinds are centered and symmetric, and
// every finite closed-form moment is an exact rational, so the combinatorial
// engine can run in exact arithmetic on top of this oracle.
class AtomSpec {
public:
    AtomKind kind = AtomKind::Rademacher;
    bool is_complex = false;
    Rat par1 = 0;  // sigma2 / v / h2 / a2 / a / alpha
    Rat par2 = 0;  // TwoPointSym: p; TwoPointAsym: b; ParetoSym: xm2

    static AtomSpec gauss_real(Rat sigma2);
    static AtomSpec gauss_complex(Rat v);
    static AtomSpec rademacher();
    static AtomSpec uniform_sym_h2(Rat h2);
    // +-a with 2 p a^2 = 1, so m4 = a^2: the tuning knob for a target fourth
    // moment at unit variance.
    static AtomSpec two_point_sym_m4(Rat m4);
    static AtomSpec two_point_sym(Rat a2, Rat p);
    // Masses at a and -b (ab >= 1): mean 0, variance 1, m3 = a-b,
    // m4 = a^2 - ab + b^2.
    static AtomSpec two_point_asym(Rat a, Rat b);
    // Symmetrized Pareto P(|x| > t) = (xm/t)^alpha, scaled so E[x^2] = 1
    // (requires alpha > 2); moments of order >= alpha diverge.
    static AtomSpec pareto_sym(Rat alpha);

    // Exact E[x^a conj(x)^b]; for real specs b must be 0.  Divergent moments
    // come back with the infinite flag set, never truncated.
    MomentValue moment(int a, int b) const;

    // E|x|^2 (must be finite for every shipped kind).
    Rat variance() const;

    double sample_real(RngStream& rng) const;            // real kinds only
    std::complex<double> sample(RngStream& rng) const;   // any kind

    std::string to_string() const;  // "kind=gauss-real sigma2=2" grammar
};

// Lists the (r,s) moment pairs, in the E[x^r conj(x)^s] basis, where
// (diag, off) fail to match a standard GOE (beta=1) or GUE (beta=2) matrix:
// diagonal moments up to order m-2, off-diagonal up to order m.  A divergent
// moment counts as a mismatch.  Empty result means the ensembles match.
std::vector<std::pair<int, int>> goe_gue_match_check(const AtomSpec& diag,
                                                     const AtomSpec& off,
                                                     int beta, int m);

// GOE/GUE entry conventions: diagonal N(0, 2/beta * beta...) -- concretely
// GOE uses diag N(0,2), off N(0,1); GUE uses diag N(0,1), off standard
// complex Gaussian.  Both give E|x_offdiag|^4 = 4 - beta.
AtomSpec goe_diag_spec();
AtomSpec goe_off_spec();
AtomSpec gue_diag_spec();
AtomSpec gue_off_spec();

}  // namespace wigner
