#include "lanfa/symmetric_operator.hpp"

#include "lanfa/tridiagonal.hpp"

#include <algorithm>
#include <cmath>

namespace lanfa {

SymmetricOperator SymmetricOperator::dense(Matrix m) {
    if (m.rows() != m.cols())
        throw ValidationError("SymmetricOperator::dense: matrix is not square");
    const double scale = std::max(m.norm(), 1e-300);
    if ((m - m.transpose()).norm() > 1e-12 * scale)
        throw ValidationError("SymmetricOperator::dense: matrix is not symmetric");
    SymmetricOperator op;
    op.kind_ = OperatorKind::Dense;
    op.n_ = m.rows();
    op.dense_ = 0.5 * (m + m.transpose().eval());
    return op;
}

SymmetricOperator SymmetricOperator::diagonal(Vector eigenvalues) {
    if (eigenvalues.size() == 0)
        throw ValidationError("SymmetricOperator::diagonal: empty spectrum");
    std::sort(eigenvalues.begin(), eigenvalues.end());
    SymmetricOperator op;
    op.kind_ = OperatorKind::Diagonal;
    op.n_ = eigenvalues.size();
    op.diag_ = std::move(eigenvalues);
    return op;
}

SymmetricOperator SymmetricOperator::sparse(Index n, std::vector<CooEntry> entries) {
    if (n <= 0)
        throw ValidationError("SymmetricOperator::sparse: dimension must be positive");
    for (const auto& e : entries) {
        if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n)
            throw ValidationError("SymmetricOperator::sparse: entry index out of range");
    }
    SymmetricOperator op;
    op.kind_ = OperatorKind::SparseCoo;
    op.n_ = n;
    op.coo_ = std::move(entries);
    return op;
}

namespace {

template <class Vec>
Vec apply_impl(OperatorKind kind, Index n, const Matrix& dense, const Vector& diag,
               const std::vector<CooEntry>& coo, const Vec& v) {
    if (v.size() != n)
        throw ValidationError("SymmetricOperator::apply: vector length " +
                              std::to_string(v.size()) + " != dimension " + std::to_string(n));
    switch (kind) {
    case OperatorKind::Dense:
        return dense * v;
    case OperatorKind::Diagonal:
        return diag.array() * v.array();
    case OperatorKind::SparseCoo: {
        Vec out = Vec::Zero(n);
        for (const auto& e : coo) {
            out[e.row] += e.value * v[e.col];
            if (e.row != e.col)
                out[e.col] += e.value * v[e.row];
        }
        return out;
    }
    }
    throw ValidationError("SymmetricOperator::apply: unknown kind");
}

} // namespace

Vector SymmetricOperator::apply(const Vector& v) const {
    return apply_impl(kind_, n_, dense_, diag_, coo_, v);
}

ComplexVector SymmetricOperator::apply(const ComplexVector& v) const {
    return apply_impl(kind_, n_, dense_, diag_, coo_, v);
}

SymmetricOperator SymmetricOperator::shifted(double w) const {
    switch (kind_) {
    case OperatorKind::Dense: {
        Matrix m = dense_;
        m.diagonal().array() -= w;
        return dense(std::move(m));
    }
    case OperatorKind::Diagonal:
        return diagonal(diag_.array() - w);
    case OperatorKind::SparseCoo: {
        auto entries = coo_;
        // one diagonal entry per row; merge with existing on-diagonal entries
        std::vector<bool> seen(n_, false);
        for (auto& e : entries) {
            if (e.row == e.col && !seen[e.row]) {
                e.value -= w;
                seen[e.row] = true;
            }
        }
        for (Index i = 0; i < n_; ++i)
            if (!seen[i])
                entries.push_back({i, i, -w});
        return sparse(n_, std::move(entries));
    }
    }
    throw ValidationError("SymmetricOperator::shifted: unknown kind");
}

double SymmetricOperator::norm_estimate() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->has_norm)
        return cache_->norm;

    double est = 0.0;
    if (kind_ == OperatorKind::Diagonal) {
        est = std::max(std::abs(diag_[0]), std::abs(diag_[n_ - 1]));
    } else {
        // 10-step plain Lanczos probe with a fixed seed; max |Ritz value|
        const Index steps = std::min<Index>(10, n_);
        Vector q = rng::gaussian_vector(0x6c616e66ULL, n_);
        q.normalize();
        Vector q_prev = Vector::Zero(n_);
        Vector alphas(steps), betas(steps);
        double beta_prev = 0.0;
        Index done = 0;
        for (Index j = 0; j < steps; ++j) {
            Vector v = apply_impl(kind_, n_, dense_, diag_, coo_, q);
            v -= beta_prev * q_prev;
            const double alpha = q.dot(v);
            v -= alpha * q;
            alphas[j] = alpha;
            const double beta = v.norm();
            ++done;
            if (beta < 1e-300) {
                betas[j] = 0.0;
                break;
            }
            betas[j] = beta;
            q_prev = q;
            q = v / beta;
            beta_prev = beta;
        }
        Tridiagonal t{alphas.head(done), betas.head(std::max<Index>(done - 1, 0))};
        const Vector ritz = tridiag_eigvals(t);
        est = std::max(std::abs(ritz[0]), std::abs(ritz[ritz.size() - 1]));
    }
    cache_->norm = est;
    cache_->has_norm = true;
    return est;
}

const Vector& SymmetricOperator::diagonal_spectrum() const {
    if (kind_ != OperatorKind::Diagonal)
        throw ValidationError("diagonal_spectrum: operator is not diagonal kind");
    return diag_;
}

const Matrix& SymmetricOperator::dense_matrix() const {
    if (kind_ != OperatorKind::Dense)
        throw ValidationError("dense_matrix: operator is not dense kind");
    return dense_;
}

Matrix SymmetricOperator::to_dense() const {
    switch (kind_) {
    case OperatorKind::Dense:
        return dense_;
    case OperatorKind::Diagonal:
        return diag_.asDiagonal();
    case OperatorKind::SparseCoo: {
        Matrix m = Matrix::Zero(n_, n_);
        for (const auto& e : coo_) {
            m(e.row, e.col) += e.value;
            if (e.row != e.col)
                m(e.col, e.row) += e.value;
        }
        return m;
    }
    }
    throw ValidationError("to_dense: unknown kind");
}

const EighResult& SymmetricOperator::eigh() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->has_eigh)
        return cache_->eigh;
    if (kind_ == OperatorKind::Diagonal) {
        cache_->eigh = EighResult{diag_, Matrix::Identity(n_, n_)};
    } else {
        if (n_ > kDeskScaleLimit)
            throw ValidationError("eigh: dimension " + std::to_string(n_) +
                                  " exceeds the desk-scale oracle limit " +
                                  std::to_string(kDeskScaleLimit));
        cache_->eigh = dense_sym_eigh(to_dense());
    }
    cache_->has_eigh = true;
    return cache_->eigh;
}

double SymmetricOperator::symmetry_defect(std::uint64_t seed) const {
    Vector u = rng::gaussian_vector(seed, n_, 0);
    Vector v = rng::gaussian_vector(seed, n_, 1);
    u.normalize();
    v.normalize();
    return std::abs(apply(u).dot(v) - u.dot(apply(v)));
}

} // namespace lanfa
