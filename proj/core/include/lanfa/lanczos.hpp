#pragma once

#include "lanfa/symmetric_operator.hpp"
#include "lanfa/tridiagonal.hpp"
#include "lanfa/types.hpp"

#include <utility>

namespace lanfa {

enum class Precision { Fp64, Fp32Recurrence };

struct LanczosOptions {
    bool reorthogonalize = true;
    Precision precision = Precision::Fp64;
};

/// Output of k Lanczos steps on (A, b): the basis q (n x (k+1), last column is
/// q_{k+1}), the tridiagonal coefficients, and the trailing coupling beta_k.
/// Immutable; prefix_t(j)/coupling_beta(j)/next_vector(j) expose the leading
/// j-step factorization contained in a longer run.
struct LanczosFactorization {
    Matrix q;
    Tridiagonal t;
    double beta_k = 0.0;
    double b_norm = 0.0;
    bool reorthogonalized = false;
    Precision precision = Precision::Fp64;
    bool terminated_early = false;

    Index steps() const { return t.size(); }
    Index dim() const { return q.rows(); }

    Tridiagonal prefix_t(Index j) const { return t.prefix(j); }

    /// beta_j coupling q_{j+1} to the leading j-step factorization.
    double coupling_beta(Index j) const {
        if (j < 1 || j > steps())
            throw ValidationError("coupling_beta: step out of range");
        return j == steps() ? beta_k : t.betas[j - 1];
    }

    /// q_{j+1}, the vector coupled by beta_j.
    Vector next_vector(Index j) const {
        if (j < 1 || j > steps())
            throw ValidationError("next_vector: step out of range");
        return q.col(j);
    }
};

/// Lanczos iteration with optional double classical Gram-Schmidt
/// reorthogonalization and an optional fp32-rounded recurrence. Terminates
/// early (invariant subspace) when beta_j <= 1e-13 * ||A||-estimate.
LanczosFactorization lanczos(const SymmetricOperator& a, const Vector& b, Index k,
                             LanczosOptions opts = {});

/// Perturbed-recurrence residual F_j = A Q_j - Q_j T_j - beta_j q_{j+1} e_j^T
/// for every prefix j <= steps: column i of the returned matrix is the residual
/// of the i-th recurrence line, so F_j is the leading j columns. Always
/// evaluated in fp64. Returns (F, ||F||_F) for the full factorization.
std::pair<Matrix, double> recurrence_residual(const SymmetricOperator& a,
                                              const LanczosFactorization& fact);

} // namespace lanfa
