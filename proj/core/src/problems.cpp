#include "lanfa/problems.hpp"

#include "lanfa/matrix_market.hpp"

#include <cmath>

namespace lanfa {

SymmetricOperator gen_uniform(Index n, double lmin, double lmax) {
    if (n < 2)
        throw ValidationError("gen_uniform: need n >= 2");
    if (!(lmin < lmax))
        throw ValidationError("gen_uniform: need lmin < lmax");
    Vector lambda(n);
    for (Index i = 0; i < n; ++i)
        lambda[i] = lmin + static_cast<double>(i) / static_cast<double>(n - 1) * (lmax - lmin);
    return SymmetricOperator::diagonal(std::move(lambda));
}

SymmetricOperator gen_strakos(Index n, double lambda1, double lambdan, double rho) {
    if (n < 2)
        throw ValidationError("gen_strakos: need n >= 2");
    if (!(lambdan < lambda1))
        throw ValidationError("gen_strakos: need lambda_n < lambda_1");
    if (!(rho > 0.0 && rho < 1.0))
        throw ValidationError("gen_strakos: need rho in (0,1)");
    Vector lambda(n);
    for (Index i = 1; i <= n; ++i)
        lambda[i - 1] = lambdan + (static_cast<double>(n - i) / static_cast<double>(n - 1)) *
                                      (lambda1 - lambdan) * std::pow(rho, i - 1);
    return SymmetricOperator::diagonal(std::move(lambda));
}

SymmetricOperator gen_wishart(Index n, Index m, std::uint64_t seed) {
    if (n < 1 || m < n)
        throw ValidationError("gen_wishart: need m >= n >= 1");
    const double sigma = 1.0 / std::sqrt(static_cast<double>(m));
    Matrix x(n, m);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j)
            x(i, j) = sigma * rng::gaussian(seed, static_cast<std::uint64_t>(i) *
                                                      static_cast<std::uint64_t>(m) +
                                                  static_cast<std::uint64_t>(j));
    return SymmetricOperator::dense(x * x.transpose());
}

SymmetricOperator gen_outlier(Index n, double kappa) {
    if (n < 3)
        throw ValidationError("gen_outlier: need n >= 3");
    if (!(kappa > 1.0))
        throw ValidationError("gen_outlier: need kappa > 1");
    Vector lambda(n);
    for (Index i = 0; i < n - 1; ++i)
        lambda[i] = static_cast<double>(i) / static_cast<double>(n - 2);
    lambda[n - 1] = kappa;
    return SymmetricOperator::diagonal(std::move(lambda));
}

SymmetricOperator gen_problem(const ProblemSpec& spec) {
    if (spec.generator == "uniform")
        return gen_uniform(spec.n, spec.lmin, spec.lmax);
    if (spec.generator == "strakos")
        return gen_strakos(spec.n, spec.lambda1, spec.lambdan, spec.rho);
    if (spec.generator == "wishart")
        return gen_wishart(spec.n, spec.m, spec.seed);
    if (spec.generator == "outlier")
        return gen_outlier(spec.n, spec.kappa);
    if (spec.generator == "mm")
        return read_matrix_market(spec.path);
    throw ValidationError("gen_problem: unknown generator '" + spec.generator + "'");
}

Vector gen_rhs(RhsPolicy policy, std::uint64_t seed, const SymmetricOperator& a) {
    const Index n = a.dim();
    switch (policy) {
    case RhsPolicy::EqualEigenprojection: {
        if (a.kind() == OperatorKind::Diagonal)
            return Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
        if (a.kind() == OperatorKind::SparseCoo && n > SymmetricOperator::kDeskScaleLimit)
            throw ValidationError("gen_rhs: equal-eigenprojection policy needs the spectral "
                                  "oracle, unavailable for sparse operators of this size");
        const EighResult& es = a.eigh();
        Vector ones = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
        return es.eigenvectors * ones;
    }
    case RhsPolicy::RandomGaussianUnit: {
        Vector b = rng::gaussian_vector(seed, n, /*stream=*/0xb);
        b.normalize();
        return b;
    }
    }
    throw ValidationError("gen_rhs: unknown policy");
}

Vector gen_rhs(const ProblemSpec& spec, const SymmetricOperator& a) {
    return gen_rhs(spec.rhs_policy, spec.seed, a);
}

} // namespace lanfa
