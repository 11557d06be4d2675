#pragma once

#include "lanfa/types.hpp"

namespace lanfa {

/// Full symmetric eigendecomposition M = V diag(lambda) V^T, eigenvalues ascending.
struct EighResult {
    Vector eigenvalues;
    Matrix eigenvectors;
};

/// Dense symmetric eigendecomposition (ground-truth oracle for everything else).
/// Requires M square and symmetric to 1e-12 relative; throws ValidationError otherwise.
EighResult dense_sym_eigh(const Matrix& m);

} // namespace lanfa
