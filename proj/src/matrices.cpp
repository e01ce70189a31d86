#include "wigner/matrices.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace wigner {

void EnsembleSpec::validate() const {
    if (beta != 1 && beta != 2) throw std::invalid_argument("EnsembleSpec: beta must be 1 or 2");
    if (n < 1) throw std::invalid_argument("EnsembleSpec: n >= 1");
    if (diag.is_complex) throw std::invalid_argument("EnsembleSpec: diagonal spec must be real");
    if (beta == 1 && offdiag.is_complex)
        throw std::invalid_argument("EnsembleSpec: beta=1 requires a real off-diagonal spec");
    if (beta == 2 && !offdiag.is_complex)
        throw std::invalid_argument("EnsembleSpec: beta=2 requires a complex off-diagonal spec");
}

RMat build_wigner_real(const EnsembleSpec& spec, RngStream& rng) {
    spec.validate();
    if (spec.beta != 1) throw std::invalid_argument("build_wigner_real: beta=1 spec expected");
    const int n = spec.n;
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    RMat x(n);
    for (int i = 0; i < n; ++i) {
        x(i, i) = spec.diag.sample_real(rng) * inv_sqrt_n;
        for (int j = i + 1; j < n; ++j) {
            double v = spec.offdiag.sample_real(rng) * inv_sqrt_n;
            x(i, j) = v;
            x(j, i) = v;
        }
    }
    return x;
}

CMat build_wigner_complex(const EnsembleSpec& spec, RngStream& rng) {
    spec.validate();
    if (spec.beta != 2) throw std::invalid_argument("build_wigner_complex: beta=2 spec expected");
    const int n = spec.n;
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    CMat x(n);
    for (int i = 0; i < n; ++i) {
        x(i, i) = spec.diag.sample_real(rng) * inv_sqrt_n;
        for (int j = i + 1; j < n; ++j) {
            std::complex<double> v = spec.offdiag.sample(rng) * inv_sqrt_n;
            x(i, j) = v;
            x(j, i) = std::conj(v);
        }
    }
    return x;
}

WignerSample build_wigner(const EnsembleSpec& spec, RngStream& rng) {
    WignerSample s;
    s.beta = spec.beta;
    if (spec.beta == 1)
        s.real = build_wigner_real(spec, rng);
    else
        s.complex = build_wigner_complex(spec, rng);
    return s;
}

namespace {

// Largest-modulus entry per column becomes real and strictly positive,
// ties broken by the lowest row index.
void apply_phase_convention(RMat& u) {
    const int n = u.n();
    for (int j = 0; j < n; ++j) {
        double* c = u.col(j);
        int best = 0;
        double best_abs = std::abs(c[0]);
        for (int i = 1; i < n; ++i) {
            double a = std::abs(c[i]);
            if (a > best_abs) {
                best_abs = a;
                best = i;
            }
        }
        if (c[best] < 0)
            for (int i = 0; i < n; ++i) c[i] = -c[i];
    }
}

void apply_phase_convention(CMat& u) {
    const int n = u.n();
    for (int j = 0; j < n; ++j) {
        std::complex<double>* c = u.col(j);
        int best = 0;
        double best_abs = std::abs(c[0]);
        for (int i = 1; i < n; ++i) {
            double a = std::abs(c[i]);
            if (a > best_abs) {
                best_abs = a;
                best = i;
            }
        }
        if (best_abs == 0.0) continue;  // zero column; nothing to fix
        std::complex<double> phase = std::conj(c[best]) / best_abs;
        for (int i = 0; i < n; ++i) c[i] *= phase;
        c[best] = {std::abs(c[best]), 0.0};  // kill round-off in the pivot entry
    }
}

RMat squared_overlaps(const RMat& u) {
    const int n = u.n();
    RMat w(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w(i, j) = u(i, j) * u(i, j);
    return w;
}

RMat squared_overlaps(const CMat& u) {
    const int n = u.n();
    RMat w(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w(i, j) = std::norm(u(i, j));
    return w;
}

}  // namespace

SpectralDecomposition spectral_decomposition(const RMat& x) {
    SpectralDecomposition dec;
    dec.n = x.n();
    dec.beta = 1;
    symmetric_eigen(x, dec.eigenvalues, dec.u_real);
    apply_phase_convention(dec.u_real);
    dec.overlaps = squared_overlaps(dec.u_real);
    return dec;
}

SpectralDecomposition spectral_decomposition(const CMat& x) {
    SpectralDecomposition dec;
    dec.n = x.n();
    dec.beta = 2;
    hermitian_eigen(x, dec.eigenvalues, dec.u_complex);
    apply_phase_convention(dec.u_complex);
    dec.overlaps = squared_overlaps(dec.u_complex);
    return dec;
}

SpectralDecomposition spectral_decomposition(const WignerSample& x) {
    return x.beta == 1 ? spectral_decomposition(x.real) : spectral_decomposition(x.complex);
}

double SpectralDecomposition::max_abs_eigenvalue() const {
    double m = 0;
    for (double v : eigenvalues) m = std::max(m, std::abs(v));
    return m;
}

double orthonormality_residual(const SpectralDecomposition& dec) {
    const int n = dec.n;
    double worst = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            if (dec.beta == 1) {
                const double* ca = dec.u_real.col(a);
                const double* cb = dec.u_real.col(b);
                double dot = 0;
                for (int i = 0; i < n; ++i) dot += ca[i] * cb[i];
                worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
            } else {
                const std::complex<double>* ca = dec.u_complex.col(a);
                const std::complex<double>* cb = dec.u_complex.col(b);
                std::complex<double> dot = 0;
                for (int i = 0; i < n; ++i) dot += std::conj(ca[i]) * cb[i];
                worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
            }
        }
    }
    return worst;
}

double reconstruction_residual(const SpectralDecomposition& dec, const RMat& x) {
    const int n = dec.n;
    double worst = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            double acc = 0;
            for (int k = 0; k < n; ++k)
                acc += dec.eigenvalues[k] * dec.u_real(i, k) * dec.u_real(j, k);
            worst = std::max(worst, std::abs(acc - x(i, j)));
        }
    }
    return worst;
}

double reconstruction_residual(const SpectralDecomposition& dec, const CMat& x) {
    const int n = dec.n;
    double worst = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) {
            std::complex<double> acc = 0;
            for (int k = 0; k < n; ++k)
                acc += dec.eigenvalues[k] * dec.u_complex(i, k) * std::conj(dec.u_complex(j, k));
            worst = std::max(worst, std::abs(acc - x(i, j)));
        }
    }
    return worst;
}

double reconstruction_residual(const SpectralDecomposition& dec, const WignerSample& x) {
    return x.beta == 1 ? reconstruction_residual(dec, x.real)
                       : reconstruction_residual(dec, x.complex);
}

RMat haar_orthogonal(int n, RngStream& rng) {
    RMat g(n);
    for (auto& v : g.data()) v = rng.next_gaussian();
    // Modified Gram-Schmidt; column norms are positive a.s., which fixes the
    // triangular factor's diagonal sign and yields the exact Haar law.
    for (int j = 0; j < n; ++j) {
        double* cj = g.col(j);
        for (int k = 0; k < j; ++k) {
            const double* ck = g.col(k);
            double dot = 0;
            for (int i = 0; i < n; ++i) dot += ck[i] * cj[i];
            for (int i = 0; i < n; ++i) cj[i] -= dot * ck[i];
        }
        double norm = 0;
        for (int i = 0; i < n; ++i) norm += cj[i] * cj[i];
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) cj[i] /= norm;
    }
    return g;
}

CMat haar_unitary(int n, RngStream& rng) {
    CMat g(n);
    for (auto& v : g.data()) v = rng.next_complex_gaussian();
    for (int j = 0; j < n; ++j) {
        std::complex<double>* cj = g.col(j);
        for (int k = 0; k < j; ++k) {
            const std::complex<double>* ck = g.col(k);
            std::complex<double> dot = 0;
            for (int i = 0; i < n; ++i) dot += std::conj(ck[i]) * cj[i];
            for (int i = 0; i < n; ++i) cj[i] -= dot * ck[i];
        }
        double norm = 0;
        for (int i = 0; i < n; ++i) norm += std::norm(cj[i]);
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) cj[i] /= norm;
    }
    return g;
}

void dump_matrix(std::ostream& os, const WignerSample& x) {
    const int n = x.n();
    os << "# n=" << n << " beta=" << x.beta << "\n";
    os.precision(17);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << " ";
            if (x.beta == 1) {
                os << x.real(i, j);
            } else {
                const auto& v = x.complex(i, j);
                os << v.real();
                if (v.imag() >= 0) os << "+";
                os << v.imag() << "j";
            }
        }
        os << "\n";
    }
}

}  // namespace wigner
