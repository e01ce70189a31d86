#include "wigner/eigen_sym.hpp"

#include <cmath>
#include <cstdlib>

namespace wigner {

namespace {

constexpr int kIterationCap = 50;

// Fortran DSIGN(a, b): |a| carrying the sign of b, with b = 0 counted positive.
inline double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

inline double pythag(double a, double b) { return std::hypot(a, b); }

// ---------------------------------------------------------------------------
// EISPACK tred2: Householder reduction of a real symmetric matrix to
// tridiagonal form, accumulating the orthogonal transformation in z.
// All arrays are 1-based as in the original; z is column-major n x n.
// On exit d holds the diagonal, e the subdiagonal in e[2..n] (e[1] = 0).
// ---------------------------------------------------------------------------
void tred2(int n, const double* a0, double* d0, double* e0, double* z0) {
    auto a = [&](int i, int j) -> const double& { return a0[(j - 1) * n + (i - 1)]; };
    auto z = [&](int i, int j) -> double& { return z0[(j - 1) * n + (i - 1)]; };
    auto d = [&](int i) -> double& { return d0[i - 1]; };
    auto e = [&](int i) -> double& { return e0[i - 1]; };

    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) z(j, i) = a(j, i);
        d(i) = a(n, i);
    }

    if (n > 1) {
        for (int i = n; i >= 2; --i) {
            int l = i - 1;
            double h = 0.0, scale = 0.0;
            if (l >= 2)
                for (int k = 1; k <= l; ++k) scale += std::abs(d(k));
            if (scale == 0.0) {
                e(i) = d(l);
                for (int j = 1; j <= l; ++j) {
                    d(j) = z(l, j);
                    z(i, j) = 0.0;
                    z(j, i) = 0.0;
                }
            } else {
                for (int k = 1; k <= l; ++k) {
                    d(k) /= scale;
                    h += d(k) * d(k);
                }
                double f = d(l);
                double g = -sign_of(std::sqrt(h), f);
                e(i) = scale * g;
                h -= f * g;
                d(l) = f - g;
                for (int j = 1; j <= l; ++j) e(j) = 0.0;
                for (int j = 1; j <= l; ++j) {
                    f = d(j);
                    z(j, i) = f;
                    g = e(j) + z(j, j) * f;
                    for (int k = j + 1; k <= l; ++k) {
                        g += z(k, j) * d(k);
                        e(k) += z(k, j) * f;
                    }
                    e(j) = g;
                }
                f = 0.0;
                for (int j = 1; j <= l; ++j) {
                    e(j) /= h;
                    f += e(j) * d(j);
                }
                double hh = f / (h + h);
                for (int j = 1; j <= l; ++j) e(j) -= hh * d(j);
                for (int j = 1; j <= l; ++j) {
                    f = d(j);
                    g = e(j);
                    for (int k = j; k <= l; ++k) z(k, j) = z(k, j) - f * e(k) - g * d(k);
                    d(j) = z(l, j);
                    z(i, j) = 0.0;
                }
            }
            d(i) = h;
        }
        // Accumulate the transformation matrices.
        for (int i = 2; i <= n; ++i) {
            int l = i - 1;
            z(n, l) = z(l, l);
            z(l, l) = 1.0;
            double h = d(i);
            if (h != 0.0) {
                for (int k = 1; k <= l; ++k) d(k) = z(k, i) / h;
                for (int j = 1; j <= l; ++j) {
                    double g = 0.0;
                    for (int k = 1; k <= l; ++k) g += z(k, i) * z(k, j);
                    for (int k = 1; k <= l; ++k) z(k, j) -= g * d(k);
                }
            }
            for (int k = 1; k <= l; ++k) z(k, i) = 0.0;
        }
    }

    for (int i = 1; i <= n; ++i) {
        d(i) = z(n, i);
        z(n, i) = 0.0;
    }
    z(n, n) = 1.0;
    e(1) = 0.0;
}

// ---------------------------------------------------------------------------
// EISPACK tql2: QL iteration with implicit shifts on a symmetric tridiagonal
// matrix, rotating the columns of z alongside (skipped when z0 == nullptr).
// Eigenvalues are returned ascending; ties keep the QL output order.
// ---------------------------------------------------------------------------
void tql2(int n, double* d0, double* e0, double* z0) {
    auto d = [&](int i) -> double& { return d0[i - 1]; };
    auto e = [&](int i) -> double& { return e0[i - 1]; };
    auto zcol = [&](int j) -> double* { return z0 + static_cast<std::size_t>(j - 1) * n; };

    if (n == 1) return;

    for (int i = 2; i <= n; ++i) e(i - 1) = e(i);
    e(n) = 0.0;

    double f = 0.0, tst1 = 0.0;
    for (int l = 1; l <= n; ++l) {
        int iter = 0;
        double h = std::abs(d(l)) + std::abs(e(l));
        if (tst1 < h) tst1 = h;
        // Look for a small subdiagonal element; e(n) = 0 guarantees an exit.
        int m = l;
        for (; m <= n; ++m) {
            double tst2 = tst1 + std::abs(e(m));
            if (tst2 == tst1) break;
        }
        if (m != l) {
            for (;;) {
                if (iter == kIterationCap)
                    throw EigensolverError("tql2: eigenvalue " + std::to_string(l) +
                                           " not converged after " +
                                           std::to_string(kIterationCap) + " sweeps");
                ++iter;
                int l1 = l + 1;
                double g = d(l);
                double p = (d(l1) - g) / (2.0 * e(l));
                double r = pythag(p, 1.0);
                d(l) = e(l) / (p + sign_of(r, p));
                d(l1) = e(l) * (p + sign_of(r, p));
                double dl1 = d(l1);
                h = g - d(l);
                for (int i = l1 + 1; i <= n; ++i) d(i) -= h;
                f += h;
                // QL transformation.
                p = d(m);
                double c = 1.0, c2 = c, c3 = c;
                double el1 = e(l1);
                double s = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e(i);
                    h = c * p;
                    r = pythag(p, e(i));
                    e(i + 1) = s * r;
                    s = e(i) / r;
                    c = p / r;
                    p = c * d(i) - s * g;
                    d(i + 1) = h + s * (c * g + s * d(i));
                    if (z0 != nullptr) {
                        double* zi = zcol(i);
                        double* zi1 = zcol(i + 1);
                        for (int k = 0; k < n; ++k) {
                            h = zi1[k];
                            zi1[k] = s * zi[k] + c * h;
                            zi[k] = c * zi[k] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e(l) / dl1;
                e(l) = s * p;
                d(l) = c * p;
                double tst2 = tst1 + std::abs(e(l));
                if (tst2 <= tst1) break;
            }
        }
        d(l) += f;
    }

    // Order eigenvalues (and vectors) ascending.
    for (int i = 1; i < n; ++i) {
        int k = i;
        double p = d(i);
        for (int j = i + 1; j <= n; ++j) {
            if (d(j) < p) {
                k = j;
                p = d(j);
            }
        }
        if (k != i) {
            d(k) = d(i);
            d(i) = p;
            if (z0 != nullptr) {
                double* zi = zcol(i);
                double* zk = zcol(k);
                for (int j = 0; j < n; ++j) std::swap(zi[j], zk[j]);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// EISPACK htridi: unitary reduction of a complex Hermitian matrix, given as
// (ar, ai), to a real symmetric tridiagonal matrix.  The transformation data
// are left in the lower triangles of ar/ai plus tau; htribk consumes them.
// ---------------------------------------------------------------------------
void htridi(int n, double* ar0, double* ai0, double* d0, double* e0, double* tau0) {
    auto ar = [&](int i, int j) -> double& { return ar0[(j - 1) * n + (i - 1)]; };
    auto ai = [&](int i, int j) -> double& { return ai0[(j - 1) * n + (i - 1)]; };
    auto d = [&](int i) -> double& { return d0[i - 1]; };
    auto e = [&](int i) -> double& { return e0[i - 1]; };
    auto tau = [&](int r, int k) -> double& { return tau0[(k - 1) * 2 + (r - 1)]; };

    tau(1, n) = 1.0;
    tau(2, n) = 0.0;

    for (int i = 1; i <= n; ++i) d(i) = ar(i, i);

    for (int i = n; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        double si = 0.0;
        bool skip = true;
        if (l >= 1) {
            for (int k = 1; k <= l; ++k) scale += std::abs(ar(i, k)) + std::abs(ai(i, k));
            if (scale == 0.0) {
                tau(1, l) = 1.0;
                tau(2, l) = 0.0;
            } else {
                skip = false;
            }
        }
        if (skip) {
            e(i) = 0.0;
        } else {
            for (int k = 1; k <= l; ++k) {
                ar(i, k) /= scale;
                ai(i, k) /= scale;
                h += ar(i, k) * ar(i, k) + ai(i, k) * ai(i, k);
            }
            double g = std::sqrt(h);
            e(i) = scale * g;
            double f = pythag(ar(i, l), ai(i, l));
            // Form next diagonal element of the tridiagonal matrix.
            bool inner = true;
            if (f != 0.0) {
                tau(1, l) = (ai(i, l) * tau(2, i) - ar(i, l) * tau(1, i)) / f;
                si = (ar(i, l) * tau(2, i) + ai(i, l) * tau(1, i)) / f;
                h += f * g;
                g = g / f + 1.0;
                ar(i, l) = g * ar(i, l);
                ai(i, l) = g * ai(i, l);
                if (l == 1) inner = false;
            } else {
                tau(1, l) = -tau(1, i);
                si = tau(2, i);
                ar(i, l) = g;
            }
            if (inner) {
                double f2 = 0.0;
                for (int j = 1; j <= l; ++j) {
                    double gr = 0.0, gi = 0.0;
                    // Form element of A*u.
                    for (int k = 1; k <= j; ++k) {
                        gr += ar(j, k) * ar(i, k) + ai(j, k) * ai(i, k);
                        gi -= ar(j, k) * ai(i, k) - ai(j, k) * ar(i, k);
                    }
                    for (int k = j + 1; k <= l; ++k) {
                        gr += ar(k, j) * ar(i, k) - ai(k, j) * ai(i, k);
                        gi -= ar(k, j) * ai(i, k) + ai(k, j) * ar(i, k);
                    }
                    // Form element of p.
                    e(j) = gr / h;
                    tau(2, j) = gi / h;
                    f2 += e(j) * ar(i, j) - tau(2, j) * ai(i, j);
                }
                double hh = f2 / (h + h);
                // Form the reduced matrix.
                for (int j = 1; j <= l; ++j) {
                    double f3 = ar(i, j);
                    double g3 = e(j) - hh * f3;
                    e(j) = g3;
                    double fi = -ai(i, j);
                    double gi3 = tau(2, j) - hh * fi;
                    tau(2, j) = -gi3;
                    for (int k = 1; k <= j; ++k) {
                        ar(j, k) = ar(j, k) - f3 * e(k) - g3 * ar(i, k) + fi * tau(2, k) +
                                   gi3 * ai(i, k);
                        ai(j, k) = ai(j, k) - f3 * tau(2, k) - g3 * ai(i, k) - fi * e(k) -
                                   gi3 * ar(i, k);
                    }
                }
            }
            for (int k = 1; k <= l; ++k) {
                ar(i, k) = scale * ar(i, k);
                ai(i, k) = scale * ai(i, k);
            }
            tau(2, l) = -si;
        }
        double hh = d(i);
        d(i) = ar(i, i);
        ar(i, i) = hh;
        ai(i, i) = scale * std::sqrt(h);
    }
}

// ---------------------------------------------------------------------------
// EISPACK htribk: back-transform eigenvectors of the tridiagonal matrix
// produced by htridi into eigenvectors (zr, zi) of the original Hermitian
// matrix.
// ---------------------------------------------------------------------------
void htribk(int n, const double* ar0, const double* ai0, const double* tau0, double* zr0,
            double* zi0) {
    auto ar = [&](int i, int j) -> const double& { return ar0[(j - 1) * n + (i - 1)]; };
    auto ai = [&](int i, int j) -> const double& { return ai0[(j - 1) * n + (i - 1)]; };
    auto tau = [&](int r, int k) -> const double& { return tau0[(k - 1) * 2 + (r - 1)]; };
    auto zr = [&](int i, int j) -> double& { return zr0[(j - 1) * n + (i - 1)]; };
    auto zi = [&](int i, int j) -> double& { return zi0[(j - 1) * n + (i - 1)]; };

    // Eigenvectors of the real tridiagonal matrix become eigenvectors of the
    // Hermitian tridiagonal matrix under the phase diagonal stored in tau.
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
            zi(k, j) = -zr(k, j) * tau(2, k);
            zr(k, j) = zr(k, j) * tau(1, k);
        }
    }
    if (n == 1) return;

    // Recover and apply the Householder matrices.
    for (int i = 2; i <= n; ++i) {
        int l = i - 1;
        double h = ai(i, i);
        if (h == 0.0) continue;
        for (int j = 1; j <= n; ++j) {
            double s = 0.0, si = 0.0;
            for (int k = 1; k <= l; ++k) {
                s += ar(i, k) * zr(k, j) - ai(i, k) * zi(k, j);
                si += ar(i, k) * zi(k, j) + ai(i, k) * zr(k, j);
            }
            s = s / h / h;
            si = si / h / h;
            for (int k = 1; k <= l; ++k) {
                zr(k, j) = zr(k, j) - s * ar(i, k) - si * ai(i, k);
                zi(k, j) = zi(k, j) - si * ar(i, k) + s * ai(i, k);
            }
        }
    }
}

}  // namespace

void symmetric_eigen(const RMat& x, std::vector<double>& values, RMat& vectors) {
    const int n = x.n();
    values.assign(n, 0.0);
    vectors = RMat(n);
    std::vector<double> e(n, 0.0);
    tred2(n, x.data().data(), values.data(), e.data(), vectors.data().data());
    tql2(n, values.data(), e.data(), vectors.data().data());
}

std::vector<double> symmetric_eigenvalues(const RMat& x) {
    const int n = x.n();
    std::vector<double> d(n, 0.0), e(n, 0.0);
    RMat scratch(n);
    tred2(n, x.data().data(), d.data(), e.data(), scratch.data().data());
    tql2(n, d.data(), e.data(), nullptr);
    return d;
}

void hermitian_eigen(const CMat& x, std::vector<double>& values, CMat& vectors) {
    const int n = x.n();
    std::vector<double> ar(static_cast<std::size_t>(n) * n), ai(ar.size());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            ar[static_cast<std::size_t>(j) * n + i] = x(i, j).real();
            ai[static_cast<std::size_t>(j) * n + i] = x(i, j).imag();
        }
    values.assign(n, 0.0);
    std::vector<double> e(n, 0.0), tau(2 * static_cast<std::size_t>(n), 0.0);
    htridi(n, ar.data(), ai.data(), values.data(), e.data(), tau.data());

    RMat zr = RMat::identity(n);
    tql2(n, values.data(), e.data(), zr.data().data());

    std::vector<double> zi(static_cast<std::size_t>(n) * n, 0.0);
    htribk(n, ar.data(), ai.data(), tau.data(), zr.data().data(), zi.data());

    vectors = CMat(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            vectors(i, j) = {zr(i, j), zi[static_cast<std::size_t>(j) * n + i]};
}

std::vector<double> hermitian_eigenvalues(const CMat& x) {
    const int n = x.n();
    std::vector<double> ar(static_cast<std::size_t>(n) * n), ai(ar.size());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            ar[static_cast<std::size_t>(j) * n + i] = x(i, j).real();
            ai[static_cast<std::size_t>(j) * n + i] = x(i, j).imag();
        }
    std::vector<double> d(n, 0.0), e(n, 0.0), tau(2 * static_cast<std::size_t>(n), 0.0);
    htridi(n, ar.data(), ai.data(), d.data(), e.data(), tau.data());
    tql2(n, d.data(), e.data(), nullptr);
    return d;
}

}  // namespace wigner
