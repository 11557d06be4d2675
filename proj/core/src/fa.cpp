#include "lanfa/fa.hpp"

#include <Eigen/LU>

#include <cmath>

namespace lanfa {

namespace {

// f(T_j) e_1 ||b|| in the Ritz basis
Vector f_of_t_e1(const Tridiagonal& t, const ScalarFunction& f, double b_norm) {
    const EighResult es = tridiag_eigh(t);
    const Vector fvals = apply_to_spectrum(f, es.eigenvalues, "Ritz value");
    const Vector first_row = es.eigenvectors.row(0).transpose();
    return es.eigenvectors * (fvals.array() * first_row.array()).matrix() * b_norm;
}

} // namespace

Vector lanczos_fa_prefix(const LanczosFactorization& fact, const ScalarFunction& f, Index j) {
    const Vector y = f_of_t_e1(fact.prefix_t(j), f, fact.b_norm);
    return fact.q.leftCols(j) * y;
}

Vector lanczos_fa(const LanczosFactorization& fact, const ScalarFunction& f) {
    return lanczos_fa_prefix(fact, f, fact.steps());
}

Vector ground_truth(const SymmetricOperator& a, const Vector& b, const ScalarFunction& f) {
    if (b.size() != a.dim())
        throw ValidationError("ground_truth: dimension mismatch");
    if (a.kind() == OperatorKind::Diagonal) {
        const Vector fvals = apply_to_spectrum(f, a.diagonal_spectrum());
        return fvals.array() * b.array();
    }
    const EighResult& es = a.eigh();
    const Vector fvals = apply_to_spectrum(f, es.eigenvalues);
    return es.eigenvectors *
           (fvals.array() * (es.eigenvectors.transpose() * b).array()).matrix();
}

ComplexVector shifted_solve(const SymmetricOperator& a, const Vector& b, Complex z) {
    if (a.kind() == OperatorKind::Diagonal) {
        const Vector& d = a.diagonal_spectrum();
        ComplexVector x(a.dim());
        for (Index i = 0; i < a.dim(); ++i) {
            const Complex den = Complex(d[i], 0.0) - z;
            if (std::abs(den) == 0.0)
                throw SingularShiftError("shifted_solve: z equals eigenvalue " +
                                             std::to_string(d[i]),
                                         d[i]);
            x[i] = b[i] / den;
        }
        return x;
    }
    if (a.dim() > SymmetricOperator::kDeskScaleLimit)
        throw ValidationError("shifted_solve: dimension exceeds the desk-scale oracle limit");
    ComplexMatrix m = a.to_dense().cast<Complex>();
    m.diagonal().array() -= z;
    Eigen::PartialPivLU<ComplexMatrix> lu(m);
    return lu.solve(b.cast<Complex>());
}

ComplexVector shifted_iterate(const LanczosFactorization& fact, Complex z) {
    const ComplexVector y =
        tridiag_solve_e1(fact.t, z) * Complex(fact.b_norm, 0.0);
    return fact.q.leftCols(fact.steps()).cast<Complex>() * y;
}

Vector shifted_iterate(const LanczosFactorization& fact, double w) {
    return shifted_iterate_prefix(fact, w, fact.steps());
}

Vector shifted_iterate_prefix(const LanczosFactorization& fact, double w, Index j) {
    const ComplexVector y = tridiag_solve_e1(fact.prefix_t(j), Complex(w, 0.0));
    return fact.q.leftCols(j) * (y.real() * fact.b_norm);
}

ShiftedSolveRecord shifted_err_res(const LanczosFactorization& fact, const SymmetricOperator& a,
                                   const Vector& b, Complex z) {
    if (fact.dim() != a.dim() || b.size() != a.dim())
        throw ValidationError("shifted_err_res: dimension mismatch");
    ShiftedSolveRecord rec;
    rec.z = z;
    const ComplexVector iterate = shifted_iterate(fact, z);
    rec.res = b.cast<Complex>() - (a.apply(iterate) - z * iterate);
    rec.err = shifted_solve(a, b, z) - iterate;
    return rec;
}

Complex lemma_residual_scalar(const LanczosFactorization& fact, Complex z) {
    const Index k = fact.steps();
    // log-scaled prod beta_j / det(T_k - z I); betas include the coupling beta_k
    double log_num = 0.0;
    for (Index j = 0; j + 1 < k; ++j)
        log_num += std::log(fact.t.betas[j]);
    log_num += std::log(std::max(fact.beta_k, 0.0));
    if (!std::isfinite(log_num))
        return Complex(0.0, 0.0); // breakdown: beta_k = 0, residual vanishes

    const Vector ritz = tridiag_eigvals(fact.t);
    double log_den = 0.0;
    double arg = 0.0;
    for (Index i = 0; i < k; ++i) {
        const Complex d = Complex(ritz[i], 0.0) - z;
        const double m = std::abs(d);
        if (m == 0.0)
            throw SingularShiftError("lemma_residual_scalar: z equals Ritz value " +
                                         std::to_string(ritz[i]),
                                     ritz[i]);
        log_den += std::log(m);
        arg += std::arg(d);
    }
    // det(T - zI) = prod (theta_i - z); the (-1)^k of the lemma cancels against
    // writing the determinant in root form
    const double log_mag = log_num - log_den + std::log(fact.b_norm);
    return std::exp(Complex(log_mag, -arg)) * std::pow(-1.0, static_cast<double>(k));
}

double quadform_prefix(const LanczosFactorization& fact, const ScalarFunction& f, Index j) {
    const EighResult es = tridiag_eigh(fact.prefix_t(j));
    const Vector fvals = apply_to_spectrum(f, es.eigenvalues, "Ritz value");
    const Vector first_row = es.eigenvectors.row(0).transpose();
    return fact.b_norm * fact.b_norm * (fvals.array() * first_row.array().square()).sum();
}

double quadform(const LanczosFactorization& fact, const ScalarFunction& f) {
    return quadform_prefix(fact, f, fact.steps());
}

} // namespace lanfa
