#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wigner/matrix.hpp"

namespace wigner {

// Raised when the tridiagonal QL iteration fails to converge within the
// iteration cap (50 sweeps per eigenvalue).  Callers never receive a
// partially converged decomposition.
class EigensolverError : public std::runtime_error {
public:
    explicit EigensolverError(const std::string& what) : std::runtime_error(what) {}
};

// Dense symmetric / Hermitian eigensolvers: Householder tridiagonalization
// followed by the implicit-shift QL iteration, ported from the EISPACK
// routines tred2 / tql2 / htridi / htribk (Martin, Reinsch & Wilkinson,
// Num. Math. 11, 1968; Handbook for Auto. Comp. II).
//
// Eigenvalues come back ascending; vectors are the matching orthonormal
// columns.  Only the lower triangle of the input is read.

void symmetric_eigen(const RMat& x, std::vector<double>& values, RMat& vectors);
std::vector<double> symmetric_eigenvalues(const RMat& x);

void hermitian_eigen(const CMat& x, std::vector<double>& values, CMat& vectors);
std::vector<double> hermitian_eigenvalues(const CMat& x);

}  // namespace wigner
