#include "lanfa/eigh.hpp"

#include <Eigen/Eigenvalues>

namespace lanfa {

EighResult dense_sym_eigh(const Matrix& m) {
    if (m.rows() != m.cols())
        throw ValidationError("dense_sym_eigh: matrix is not square (" +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
    const double scale = m.norm();
    const double defect = (m - m.transpose()).norm();
    if (defect > 1e-12 * std::max(scale, 1e-300))
        throw ValidationError("dense_sym_eigh: matrix is not symmetric (relative defect " +
                              std::to_string(defect / scale) + ")");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw NumericalError("dense_sym_eigh: eigensolver did not converge");
    return EighResult{solver.eigenvalues(), solver.eigenvectors()};
}

} // namespace lanfa
