#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "wigner/atoms.hpp"
#include "wigner/eigen_sym.hpp"
#include "wigner/matrix.hpp"
#include "wigner/rng.hpp"

namespace wigner {

// A Wigner ensemble: symmetry class, size, and the two atom distributions.
struct EnsembleSpec {
    int beta = 1;  // 1 = real symmetric, 2 = complex Hermitian
    int n = 1;
    AtomSpec diag = goe_diag_spec();
    AtomSpec offdiag = goe_off_spec();

    void validate() const;

    static EnsembleSpec goe(int n) { return {1, n, goe_diag_spec(), goe_off_spec()}; }
    static EnsembleSpec gue(int n) { return {2, n, gue_diag_spec(), gue_off_spec()}; }
};

// One sampled matrix X = n^{-1/2} [x_ij]; exactly one of the two storages is
// populated, selected by beta.
struct WignerSample {
    int beta = 1;
    RMat real;
    CMat complex;

    int n() const { return beta == 1 ? real.n() : complex.n(); }
    double entry_abs_max() const { return beta == 1 ? abs_max(real) : abs_max(complex); }
};

RMat build_wigner_real(const EnsembleSpec& spec, RngStream& rng);
CMat build_wigner_complex(const EnsembleSpec& spec, RngStream& rng);
WignerSample build_wigner(const EnsembleSpec& spec, RngStream& rng);

// Eigenvalues ascending, eigenvector columns matching, and the squared
// overlaps cached.  The phase convention makes the decomposition a
// deterministic function of the input: in each column the entry of largest
// modulus (lowest row index on ties) is made real and strictly positive.
struct SpectralDecomposition {
    int n = 0;
    int beta = 1;
    std::vector<double> eigenvalues;
    RMat u_real;     // beta == 1
    CMat u_complex;  // beta == 2
    RMat overlaps;   // |u_ij|^2

    double abs2(int i, int j) const { return overlaps(i, j); }
    double max_abs_eigenvalue() const;
};

SpectralDecomposition spectral_decomposition(const RMat& x);
SpectralDecomposition spectral_decomposition(const CMat& x);
SpectralDecomposition spectral_decomposition(const WignerSample& x);

// Residual diagnostics for the decomposition invariants.
double orthonormality_residual(const SpectralDecomposition& dec);           // ||U*U - I||_max
double reconstruction_residual(const SpectralDecomposition& dec, const RMat& x);
double reconstruction_residual(const SpectralDecomposition& dec, const CMat& x);
double reconstruction_residual(const SpectralDecomposition& dec, const WignerSample& x);

// Haar-distributed orthogonal / unitary matrices: QR (modified Gram-Schmidt)
// of an i.i.d. Gaussian matrix, triangular diagonal normalized positive.
RMat haar_orthogonal(int n, RngStream& rng);
CMat haar_unitary(int n, RngStream& rng);

// Plain-text dump: "# n=<n> beta=<beta>" then one row per line, entries as
// "re" or "re+imj".
void dump_matrix(std::ostream& os, const WignerSample& x);

}  // namespace wigner
