#include "lanfa/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lanfa {

Tridiagonal Tridiagonal::prefix(Index k) const {
    if (k < 1 || k > size())
        throw ValidationError("Tridiagonal::prefix: k out of range");
    return Tridiagonal{alphas.head(k), betas.head(k - 1)};
}

Matrix Tridiagonal::to_dense() const {
    const Index k = size();
    Matrix m = Matrix::Zero(k, k);
    m.diagonal() = alphas;
    if (k > 1) {
        m.diagonal(1) = betas;
        m.diagonal(-1) = betas;
    }
    return m;
}

namespace {

void validate(const Tridiagonal& t) {
    if (t.size() == 0)
        throw ValidationError("Tridiagonal: empty matrix");
    if (t.betas.size() != t.size() - 1)
        throw ValidationError("Tridiagonal: betas length " + std::to_string(t.betas.size()) +
                              " != alphas length - 1 (" + std::to_string(t.size() - 1) + ")");
    if (!t.alphas.allFinite() || !t.betas.allFinite())
        throw ValidationError("Tridiagonal: non-finite coefficients");
}

// Implicit-shift QL for symmetric tridiagonal matrices (EISPACK tql lineage).
// d holds the diagonal on entry and eigenvalues on exit; e is destroyed.
// If z is non-null the rotations are accumulated into its columns.
void ql_implicit_shift(Vector& d, Vector& e, Matrix* z) {
    const Index n = d.size();
    if (n == 1)
        return;
    const double eps = std::numeric_limits<double>::epsilon();

    for (Index l = 0; l < n; ++l) {
        Index iter = 0;
        Index m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 64)
                    throw NumericalError("tridiag QL: too many iterations at row " +
                                         std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                Index i = m - 1;
                bool underflow = false;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (Index k = 0; k < n; ++k) {
                            f = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                            (*z)(k, i) = c * (*z)(k, i) - s * f;
                        }
                    }
                }
                if (underflow && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

void sort_ascending(Vector& d, Matrix* z) {
    const Index n = d.size();
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::sort(perm.begin(), perm.end(), [&](Index a, Index b) { return d[a] < d[b]; });
    Vector ds(n);
    for (Index i = 0; i < n; ++i)
        ds[i] = d[perm[i]];
    d = ds;
    if (z) {
        Matrix zs(n, n);
        for (Index i = 0; i < n; ++i)
            zs.col(i) = z->col(perm[i]);
        *z = zs;
    }
}

} // namespace

Vector tridiag_eigvals(const Tridiagonal& t) {
    validate(t);
    Vector d = t.alphas;
    Vector e(t.size());
    e.setZero();
    if (t.size() > 1)
        e.head(t.size() - 1) = t.betas;
    ql_implicit_shift(d, e, nullptr);
    sort_ascending(d, nullptr);
    return d;
}

EighResult tridiag_eigh(const Tridiagonal& t) {
    validate(t);
    Vector d = t.alphas;
    Vector e(t.size());
    e.setZero();
    if (t.size() > 1)
        e.head(t.size() - 1) = t.betas;
    Matrix z = Matrix::Identity(t.size(), t.size());
    ql_implicit_shift(d, e, &z);
    sort_ascending(d, &z);
    return EighResult{d, z};
}

namespace {

// Characteristic-polynomial value det(T - z I) = prod_i (theta_i - z), kept as
// mantissa * 2^exponent so long products stay representable.
struct ScaledDet {
    Complex mantissa;
    long exponent;
};

ScaledDet char_poly_scaled(const Tridiagonal& t, Complex z) {
    const Index k = t.size();
    Complex p_prev(1.0, 0.0);
    Complex p = t.alphas[0] - z;
    long exponent = 0;
    for (Index j = 1; j < k; ++j) {
        const double b2 = t.betas[j - 1] * t.betas[j - 1];
        const Complex p_next = (t.alphas[j] - z) * p - b2 * p_prev;
        p_prev = p;
        p = p_next;
        const double mag = std::max({std::abs(p.real()), std::abs(p.imag()),
                                     std::abs(p_prev.real()), std::abs(p_prev.imag())});
        if (mag > 0.0 && std::isfinite(mag)) {
            const int ex = std::ilogb(mag);
            if (ex > 256 || ex < -256) {
                const double scale = std::ldexp(1.0, -ex);
                p *= scale;
                p_prev *= scale;
                exponent += ex;
            }
        }
    }
    return ScaledDet{p, exponent};
}

void singular_guard(const Vector& ritz, Complex z) {
    const double spread = ritz[ritz.size() - 1] - ritz[0];
    const double tol = 1e-14 * (spread + 1.0);
    double best = std::numeric_limits<double>::infinity();
    double offender = 0.0;
    for (Index i = 0; i < ritz.size(); ++i) {
        const double dist = std::abs(z - Complex(ritz[i], 0.0));
        if (dist < best) {
            best = dist;
            offender = ritz[i];
        }
    }
    if (best < tol)
        throw SingularShiftError("det_ratio: shift z within singular tolerance of Ritz value " +
                                     std::to_string(offender),
                                 offender);
}

} // namespace

Complex det_ratio(const Tridiagonal& t, double w, Complex z, const Vector& ritz) {
    validate(t);
    if (z == Complex(w, 0.0))
        return Complex(1.0, 0.0);
    singular_guard(ritz, z);
    const ScaledDet num = char_poly_scaled(t, Complex(w, 0.0));
    const ScaledDet den = char_poly_scaled(t, z);
    const Complex ratio = num.mantissa / den.mantissa;
    const double scale = std::ldexp(1.0, static_cast<int>(std::clamp<long>(
                                             num.exponent - den.exponent, -2000, 2000)));
    return ratio * scale;
}

Complex det_ratio(const Tridiagonal& t, double w, Complex z) {
    validate(t);
    if (z == Complex(w, 0.0))
        return Complex(1.0, 0.0);
    return det_ratio(t, w, z, tridiag_eigvals(t));
}

double det_ratio_log_abs(const Tridiagonal& t, double w, Complex z) {
    validate(t);
    if (z == Complex(w, 0.0))
        return 0.0;
    const ScaledDet num = char_poly_scaled(t, Complex(w, 0.0));
    const ScaledDet den = char_poly_scaled(t, z);
    return std::log(std::abs(num.mantissa)) - std::log(std::abs(den.mantissa)) +
           static_cast<double>(num.exponent - den.exponent) * std::log(2.0);
}


// (T - z I)^{-1} e_1 by tridiagonal LU with partial pivoting (gtsv lineage);
// near-singular pivots fall back to a dense solve
ComplexVector tridiag_solve_e1(const Tridiagonal& t, Complex z) {
    const Index k = t.size();
    ComplexVector d(k), dl(std::max<Index>(k - 1, 1)), du(std::max<Index>(k - 1, 1)),
        du2(std::max<Index>(k - 2, 1));
    for (Index i = 0; i < k; ++i)
        d[i] = Complex(t.alphas[i], 0.0) - z;
    for (Index i = 0; i + 1 < k; ++i)
        dl[i] = du[i] = Complex(t.betas[i], 0.0);
    du2.setZero();
    ComplexVector b = ComplexVector::Zero(k);
    b[0] = Complex(1.0, 0.0);

    bool ok = true;
    for (Index i = 0; i + 1 < k && ok; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (std::abs(d[i]) == 0.0) {
                ok = false;
                break;
            }
            const Complex factor = dl[i] / d[i];
            d[i + 1] -= factor * du[i];
            b[i + 1] -= factor * b[i];
            if (i + 2 < k)
                du2[i] = Complex(0.0, 0.0);
        } else {
            const Complex factor = d[i] / dl[i];
            d[i] = dl[i];
            const Complex temp = d[i + 1];
            d[i + 1] = du[i] - factor * temp;
            if (i + 2 < k) {
                du2[i] = du[i + 1];
                du[i + 1] = -factor * du2[i];
            }
            du[i] = temp;
            const Complex tb = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tb - factor * b[i];
        }
    }
    if (ok && std::abs(d[k - 1]) == 0.0)
        ok = false;

    if (ok) {
        ComplexVector x(k);
        x[k - 1] = b[k - 1] / d[k - 1];
        if (k > 1)
            x[k - 2] = (b[k - 2] - du[k - 2] * x[k - 1]) / d[k - 2];
        for (Index i = k - 3; i >= 0; --i)
            x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
        if (x.allFinite())
            return x;
    }
    ComplexMatrix m = t.to_dense().cast<Complex>();
    m.diagonal().array() -= z;
    ComplexVector rhs = ComplexVector::Zero(k);
    rhs[0] = Complex(1.0, 0.0);
    return m.partialPivLu().solve(rhs);
}

} // namespace lanfa
