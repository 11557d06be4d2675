#include "lanfa/lanczos.hpp"

#include <cmath>

namespace lanfa {

namespace {

inline double round32(double x) { return static_cast<double>(static_cast<float>(x)); }

inline void round32_inplace(Vector& v) {
    for (Index i = 0; i < v.size(); ++i)
        v[i] = round32(v[i]);
}

} // namespace

LanczosFactorization lanczos(const SymmetricOperator& a, const Vector& b, Index k,
                             LanczosOptions opts) {
    const Index n = a.dim();
    if (b.size() != n)
        throw ValidationError("lanczos: right-hand side length " + std::to_string(b.size()) +
                              " != dimension " + std::to_string(n));
    if (k < 1)
        throw ValidationError("lanczos: k must be at least 1");
    if (k > n)
        throw ValidationError("lanczos: k = " + std::to_string(k) + " exceeds dimension " +
                              std::to_string(n));
    const double b_norm = b.norm();
    if (b_norm == 0.0)
        throw ValidationError("lanczos: right-hand side is zero");

    const bool fp32 = opts.precision == Precision::Fp32Recurrence;
    const double breakdown_tol = 1e-13 * a.norm_estimate();

    Matrix q(n, k + 1);
    Vector alphas(k), betas(k);
    alphas.setZero();
    betas.setZero();

    Vector q_cur = b / b_norm;
    if (fp32)
        round32_inplace(q_cur);
    q.col(0) = q_cur;

    Vector q_prev = Vector::Zero(n);
    double beta_prev = 0.0;
    Index done = 0;
    bool broke = false;

    for (Index j = 0; j < k; ++j) {
        // matvec accumulates in fp64; the fp32 mode rounds the result
        Vector qt = a.apply(q_cur);
        if (fp32)
            round32_inplace(qt);
        qt -= beta_prev * q_prev;
        if (fp32)
            round32_inplace(qt);

        double alpha = qt.dot(q_cur);
        if (fp32)
            alpha = round32(alpha);
        qt -= alpha * q_cur;
        if (fp32)
            round32_inplace(qt);

        if (opts.reorthogonalize) {
            // double classical Gram-Schmidt against all prior columns
            for (int pass = 0; pass < 2; ++pass) {
                auto basis = q.leftCols(j + 1);
                qt -= basis * (basis.transpose() * qt);
                if (fp32)
                    round32_inplace(qt);
            }
        }

        double beta = qt.norm();
        if (fp32)
            beta = round32(beta);

        alphas[j] = alpha;
        ++done;

        if (beta <= breakdown_tol) {
            // invariant subspace found; only counts as early when j + 1 < k
            betas[j] = 0.0;
            q.col(j + 1).setZero();
            broke = j + 1 < k;
            break;
        }

        betas[j] = beta;
        Vector q_next = qt / beta;
        if (fp32)
            round32_inplace(q_next);
        q.col(j + 1) = q_next;

        q_prev = q_cur;
        q_cur = q_next;
        beta_prev = beta;
    }

    LanczosFactorization fact;
    fact.q = q.leftCols(done + 1);
    fact.t = Tridiagonal{alphas.head(done), betas.head(std::max<Index>(done - 1, 0))};
    fact.beta_k = broke ? 0.0 : betas[done - 1];
    fact.b_norm = b_norm;
    fact.reorthogonalized = opts.reorthogonalize;
    fact.precision = opts.precision;
    fact.terminated_early = broke;
    return fact;
}

std::pair<Matrix, double> recurrence_residual(const SymmetricOperator& a,
                                              const LanczosFactorization& fact) {
    if (fact.dim() != a.dim())
        throw ValidationError("recurrence_residual: operator dimension " +
                              std::to_string(a.dim()) + " != factorization dimension " +
                              std::to_string(fact.dim()));
    const Index k = fact.steps();
    Matrix f(fact.dim(), k);
    for (Index j = 0; j < k; ++j) {
        Vector col = a.apply(Vector(fact.q.col(j)));
        if (j > 0)
            col -= fact.t.betas[j - 1] * fact.q.col(j - 1);
        col -= fact.t.alphas[j] * fact.q.col(j);
        col -= fact.coupling_beta(j + 1) * fact.q.col(j + 1);
        f.col(j) = col;
    }
    return {f, f.norm()};
}

} // namespace lanfa
