#pragma once

#include "lanfa/eigh.hpp"
#include "lanfa/types.hpp"

namespace lanfa {

/// Real symmetric tridiagonal matrix: alphas on the diagonal (length k),
/// betas off the diagonal (length k-1).
struct Tridiagonal {
    Vector alphas;
    Vector betas;

    Index size() const { return alphas.size(); }
    Tridiagonal prefix(Index k) const;
    Matrix to_dense() const;
};

/// Ascending eigenvalues via implicit-shift QL specialized to symmetric
/// tridiagonal matrices.
Vector tridiag_eigvals(const Tridiagonal& t);

/// Full eigendecomposition (QL with accumulated rotations), ascending order.
EighResult tridiag_eigh(const Tridiagonal& t);

/// det(T - w I) / det(T - z I) by the three-term characteristic-polynomial
/// recurrence at both shifts, carried in mantissa/exponent form so the
/// determinants themselves never overflow. Throws SingularShiftError when z
/// is within 1e-14 * (spread(T) + 1) of a Ritz value.
Complex det_ratio(const Tridiagonal& t, double w, Complex z);

/// Same, reusing precomputed Ritz values for the singular-shift guard.
Complex det_ratio(const Tridiagonal& t, double w, Complex z, const Vector& ritz);

/// log |det_ratio|, usable when the ratio itself would overflow.
double det_ratio_log_abs(const Tridiagonal& t, double w, Complex z);

/// (T - z I)^{-1} e_1 by tridiagonal LU with partial pivoting; falls back to a
/// dense solve near singular pivots.
ComplexVector tridiag_solve_e1(const Tridiagonal& t, Complex z);

} // namespace lanfa
