#pragma once

#include "lanfa/eigh.hpp"
#include "lanfa/types.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace lanfa {

enum class OperatorKind { Dense, Diagonal, SparseCoo };

/// One coordinate entry of a sparse symmetric matrix (0-based indices).
struct CooEntry {
    Index row;
    Index col;
    double value;
};

/// A real symmetric linear map, stored dense, as a diagonal spectrum, or as
/// mirrored coordinate entries. Immutable after construction; the spectral
/// oracle and norm estimate are cached behind a mutex so sharing across
/// threads stays safe.
class SymmetricOperator {
public:
    static SymmetricOperator dense(Matrix m);
    static SymmetricOperator diagonal(Vector eigenvalues);
    static SymmetricOperator sparse(Index n, std::vector<CooEntry> entries);

    Index dim() const { return n_; }
    OperatorKind kind() const { return kind_; }

    Vector apply(const Vector& v) const;
    ComplexVector apply(const ComplexVector& v) const;

    /// A - w I as a new operator of the same kind.
    SymmetricOperator shifted(double w) const;

    /// Estimate of ||A||_2: exact max |eigenvalue| for the diagonal kind,
    /// otherwise the largest |Ritz value| of a deterministic 10-step probe.
    double norm_estimate() const;

    /// Diagonal kind only: the ascending spectrum.
    const Vector& diagonal_spectrum() const;

    /// Dense kind only: the stored matrix.
    const Matrix& dense_matrix() const;

    /// Materialize as a dense matrix (any kind).
    Matrix to_dense() const;

    /// Cached full eigendecomposition; exact for the diagonal kind, dense
    /// eigh otherwise. Throws ValidationError above the desk-scale limit.
    const EighResult& eigh() const;

    /// Smallest and largest eigenvalue via the cached oracle.
    double lambda_min() const { return eigh().eigenvalues[0]; }
    double lambda_max() const { return eigh().eigenvalues[dim() - 1]; }

    /// Hermitian-ness audit: |<Au,v> - <u,Av>| over random unit u, v.
    double symmetry_defect(std::uint64_t seed = 7) const;

    static constexpr Index kDeskScaleLimit = 5000;

private:
    SymmetricOperator() = default;

    Index n_ = 0;
    OperatorKind kind_ = OperatorKind::Dense;
    Matrix dense_;
    Vector diag_;
    std::vector<CooEntry> coo_;

    struct Cache {
        std::mutex mutex;
        bool has_eigh = false;
        EighResult eigh;
        bool has_norm = false;
        double norm = 0.0;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

} // namespace lanfa
