#include "lanfa/linear_systems.hpp"

#include "lanfa/fa.hpp"

#include <Eigen/QR>

#include <cmath>
#include <limits>

namespace lanfa {

std::vector<double> minres_residual_norms(const LanczosFactorization& fact, double w) {
    const Index steps = fact.steps();
    std::vector<double> norms;
    norms.reserve(static_cast<std::size_t>(steps) + 1);
    norms.push_back(fact.b_norm);

    for (Index k = 1; k <= steps; ++k) {
        // extended tridiagonal of (A - wI): (k+1) x k
        Matrix ext = Matrix::Zero(k + 1, k);
        for (Index i = 0; i < k; ++i) {
            ext(i, i) = fact.t.alphas[i] - w;
            if (i + 1 < k) {
                ext(i, i + 1) = fact.t.betas[i];
                ext(i + 1, i) = fact.t.betas[i];
            }
        }
        ext(k, k - 1) = fact.coupling_beta(k);
        Vector rhs = Vector::Zero(k + 1);
        rhs[0] = fact.b_norm;
        const Vector y = ext.colPivHouseholderQr().solve(rhs);
        norms.push_back((rhs - ext * y).norm());
    }
    return norms;
}

std::vector<double> lanczos_residual_norms(const SymmetricOperator& a, const Vector& b,
                                           const LanczosFactorization& fact, double w) {
    const Index steps = fact.steps();
    std::vector<double> norms;
    norms.reserve(static_cast<std::size_t>(steps) + 1);
    norms.push_back(b.norm());
    for (Index k = 1; k <= steps; ++k) {
        try {
            const Vector x = shifted_iterate_prefix(fact, w, k);
            norms.push_back((b - (a.apply(x) - w * x)).norm());
        } catch (const Error&) {
            norms.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    return norms;
}

std::vector<double> galerkin_from_minres(const std::vector<double>& minres_norms) {
    if (minres_norms.empty())
        throw ValidationError("galerkin_from_minres: empty history");
    const double m0 = minres_norms[0];
    std::vector<double> pred(minres_norms.size(), std::numeric_limits<double>::quiet_NaN());
    pred[0] = m0;
    for (std::size_t k = 1; k < minres_norms.size(); ++k) {
        const double mk = minres_norms[k];
        const double mk1 = minres_norms[k - 1];
        if (!(mk1 > 0.0))
            continue;
        const double ratio = mk / mk1;
        if (ratio >= 1.0 - 1e-12)
            continue; // stagnation: the Galerkin step is singular
        pred[k] = mk / std::sqrt(1.0 - ratio * ratio);
    }
    return pred;
}

double cg_apriori_bound(double kappa, Index k) {
    if (!(kappa >= 1.0))
        throw ValidationError("cg_apriori_bound: kappa must be at least 1");
    const double s = std::sqrt(kappa);
    return 2.0 * std::pow((s - 1.0) / (s + 1.0), static_cast<double>(k));
}

double cg_apriori_bound_exp(double kappa, Index k) {
    if (!(kappa >= 1.0))
        throw ValidationError("cg_apriori_bound_exp: kappa must be at least 1");
    return 2.0 * std::exp(-2.0 * static_cast<double>(k) / std::sqrt(kappa));
}

IndefiniteIterationBound indefinite_iteration_bound(double a, double b, double c, double d,
                                                    double eps) {
    if (!(a < b && b < 0.0 && 0.0 < c && c < d))
        throw ValidationError("indefinite_iteration_bound: need a < b < 0 < c < d");
    const double widths = std::abs((b - a) - (d - c));
    if (widths > 1e-12 * (d - a))
        throw ValidationError("indefinite_iteration_bound: cluster widths differ (b-a != d-c)");
    const double gamma = std::sqrt(std::abs(a * d) / std::abs(b * c));
    if (!(eps > 0.0 && eps < gamma / 4.0))
        throw ValidationError("indefinite_iteration_bound: eps must lie in (0, gamma/4)");
    return {gamma, 2.0 * gamma * std::log(std::sqrt(2.0) * gamma / eps)};
}

} // namespace lanfa
