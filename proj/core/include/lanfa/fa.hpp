#pragma once

#include "lanfa/lanczos.hpp"
#include "lanfa/scalar_function.hpp"
#include "lanfa/symmetric_operator.hpp"

namespace lanfa {

/// Error and residual of the Lanczos iterate for the shifted system
/// (A - z I) x = b.
struct ShiftedSolveRecord {
    Complex z;
    ComplexVector err;
    ComplexVector res;
};

/// Q_k f(T_k) e_1 ||b||, evaluated through the tridiagonal eigendecomposition.
/// Throws DomainError naming the Ritz value where f is undefined.
Vector lanczos_fa(const LanczosFactorization& fact, const ScalarFunction& f);

/// Same for the leading j-step prefix of a longer factorization.
Vector lanczos_fa_prefix(const LanczosFactorization& fact, const ScalarFunction& f, Index j);

/// f(A) b through the spectral oracle (diagonal kind at any size, dense eigh
/// otherwise up to the desk-scale limit).
Vector ground_truth(const SymmetricOperator& a, const Vector& b, const ScalarFunction& f);

/// (A - z I)^{-1} b: elementwise for the diagonal kind, dense LU otherwise.
ComplexVector shifted_solve(const SymmetricOperator& a, const Vector& b, Complex z);

/// err_k(z) and res_k(z) from the definitions (fp64, oracle solve for err).
ShiftedSolveRecord shifted_err_res(const LanczosFactorization& fact, const SymmetricOperator& a,
                                   const Vector& b, Complex z);

/// The scalar s with res_k(z) = s q_{k+1}: ((-1)^k prod beta_j / det(T_k - zI)) ||b||.
Complex lemma_residual_scalar(const LanczosFactorization& fact, Complex z);

/// The Lanczos-FA linear-system iterate Q_k (T_k - zI)^{-1} e_1 ||b||.
ComplexVector shifted_iterate(const LanczosFactorization& fact, Complex z);
Vector shifted_iterate(const LanczosFactorization& fact, double w);
Vector shifted_iterate_prefix(const LanczosFactorization& fact, double w, Index j);

/// ||b||^2 e_1^T f(T_k) e_1, the k-node Gaussian quadrature of b^H f(A) b.
double quadform(const LanczosFactorization& fact, const ScalarFunction& f);
double quadform_prefix(const LanczosFactorization& fact, const ScalarFunction& f, Index j);

} // namespace lanfa
