#pragma once

#include "lanfa/symmetric_operator.hpp"

#include <string>

namespace lanfa {

/// Read a Matrix Market file: "coordinate real symmetric" (mirrored across the
/// diagonal) or "array real general" (must be symmetric to 1e-12 relative).
/// Coordinate data is densified below 2001 rows, kept as coordinates above.
SymmetricOperator read_matrix_market(const std::string& path);

/// Write in coordinate real symmetric format (lower triangle).
void write_matrix_market(const SymmetricOperator& a, const std::string& path);

} // namespace lanfa
