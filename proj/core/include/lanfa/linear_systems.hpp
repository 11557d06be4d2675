#pragma once

#include "lanfa/lanczos.hpp"
#include "lanfa/symmetric_operator.hpp"

#include <vector>

namespace lanfa {

/// Residual 2-norm histories of the Lanczos (Galerkin) iterate and MINRES on
/// (A - w I) x = b over the same Krylov data. Index j holds step k = j, so
/// entry 0 is ||b||. NaN marks Lanczos entries at singular-T_k steps.
struct ResidualHistory {
    std::vector<double> lanczos_res_2norms;
    std::vector<double> minres_res_2norms;
    double w = 0.0;
};

/// ||r_k^M||_2 for k = 0..steps: minimum-residual norms over the Krylov
/// subspace, from the (k+1) x k extended tridiagonal least-squares problem.
std::vector<double> minres_residual_norms(const LanczosFactorization& fact, double w);

/// Measured Lanczos residual norms ||res_k(w)||_2 for k = 0..steps (fp64,
/// direct definition); NaN where T_k - wI is numerically singular.
std::vector<double> lanczos_residual_norms(const SymmetricOperator& a, const Vector& b,
                                           const LanczosFactorization& fact, double w);

/// Galerkin residual norms predicted from MINRES norms:
/// ||res_k||/||res_0|| = (m_k/m_0) / sqrt(1 - (m_k/m_{k-1})^2), scaled back by
/// m_0. Entries at stagnation (ratio >= 1 - 1e-12) are NaN.
std::vector<double> galerkin_from_minres(const std::vector<double>& minres_norms);

/// 2 ((sqrt(kappa)-1)/(sqrt(kappa)+1))^k
double cg_apriori_bound(double kappa, Index k);

/// The weaker exponential form 2 exp(-2k/sqrt(kappa)).
double cg_apriori_bound_exp(double kappa, Index k);

struct IndefiniteIterationBound {
    double gamma;
    double k_bound;
};

/// For spectra in [a,b] u [c,d] with a<b<0<c<d and b-a = d-c:
/// gamma = sqrt(|ad|/|bc|) and the step count 2 gamma log(sqrt(2) gamma / eps)
/// within which some Lanczos iterate reaches relative residual eps.
IndefiniteIterationBound indefinite_iteration_bound(double a, double b, double c, double d,
                                                    double eps);

} // namespace lanfa
