#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lanfa/fa.hpp"
#include "lanfa/linear_systems.hpp"
#include "lanfa/problems.hpp"

#include "test_support.hpp"

#include <Eigen/QR>

using namespace lanfa;
using namespace lanfa::testing;

TEST_CASE("minres_residual_norms: exhausted space drives the residual to zero") {
    const Index n = 10;
    const SymmetricOperator a = SymmetricOperator::dense(random_symmetric(n, 1));
    const Vector b = random_vector(n, 2);
    const LanczosFactorization fact = lanczos(a, b, n);
    REQUIRE(!fact.terminated_early);
    const auto norms = minres_residual_norms(fact, 0.0);
    CHECK(norms.back() <= 1e-8 * b.norm());
}

TEST_CASE("minres_residual_norms: matches brute force over explicit Krylov vectors") {
    Vector d(2);
    d << 1.0, 2.0;
    const SymmetricOperator a = SymmetricOperator::diagonal(d);
    const Vector b = Vector::Constant(2, 1.0 / std::sqrt(2.0));
    const LanczosFactorization fact = lanczos(a, b, 2);
    const auto norms = minres_residual_norms(fact, 0.0);

    // brute force: min ||b - A K y|| over the explicit Krylov basis
    for (Index k = 1; k <= 2; ++k) {
        Matrix krylov(2, k);
        Vector v = b;
        for (Index j = 0; j < k; ++j) {
            krylov.col(j) = v;
            v = a.apply(v);
        }
        const Matrix ak = a.to_dense() * krylov;
        const Vector y = ak.colPivHouseholderQr().solve(b);
        const double want = (b - ak * y).norm();
        CHECK(std::abs(norms[static_cast<std::size_t>(k)] - want) <= 1e-10 * b.norm());
    }
}

TEST_CASE("minres_residual_norms: non-increasing on an indefinite problem") {
    const Index n = 60;
    const SymmetricOperator a = SymmetricOperator::dense(random_symmetric(n, 3));
    const Vector b = random_vector(n, 4);
    const LanczosFactorization fact = lanczos(a, b, 30);
    const auto norms = minres_residual_norms(fact, 0.0);
    for (std::size_t k = 1; k < norms.size(); ++k)
        CHECK(norms[k] <= norms[k - 1] * (1.0 + 1e-12));
}

TEST_CASE("minres optimality: never above the Galerkin residual") {
    const Index n = 50;
    const SymmetricOperator a = SymmetricOperator::dense(random_symmetric(n, 5));
    const Vector b = random_vector(n, 6);
    const LanczosFactorization fact = lanczos(a, b, 25);
    const double w = 0.4;
    const auto minres = minres_residual_norms(fact, w);
    const auto galerkin = lanczos_residual_norms(a, b, fact, w);
    for (std::size_t k = 0; k < minres.size(); ++k) {
        if (std::isnan(galerkin[k]))
            continue;
        CHECK(minres[k] <= galerkin[k] * (1.0 + 1e-9));
    }
}

TEST_CASE("galerkin_from_minres: limits and stagnation flags") {
    // strong progress: prediction collapses to the MINRES value
    const std::vector<double> fast{1.0, 1e-6};
    const auto pred_fast = galerkin_from_minres(fast);
    CHECK(pred_fast[1] == doctest::Approx(1e-6).epsilon(1e-9));

    // stagnation: undefined entry
    const std::vector<double> stuck{1.0, 1.0};
    CHECK(std::isnan(galerkin_from_minres(stuck)[1]));
}

TEST_CASE("galerkin_from_minres: matches the measured Lanczos residuals") {
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 80;
        const SymmetricOperator a =
            SymmetricOperator::dense(random_symmetric(n, 100 + static_cast<std::uint64_t>(trial)));
        const Vector b = random_vector(n, 200 + static_cast<std::uint64_t>(trial));
        const LanczosFactorization fact = lanczos(a, b, 20);
        const double w = 0.1; // likely indefinite shift for a centered spectrum
        const auto minres = minres_residual_norms(fact, w);
        const auto pred = galerkin_from_minres(minres);
        const auto measured = lanczos_residual_norms(a, b, fact, w);
        for (std::size_t k = 1; k < pred.size(); ++k) {
            if (std::isnan(pred[k]) || std::isnan(measured[k]))
                continue;
            if (minres[k] / minres[k - 1] > 1.0 - 1e-6)
                continue; // close to stagnation: the identity is ill-conditioned
            CHECK(rel_diff(pred[k], measured[k]) <= 1e-6);
        }
    }
}

TEST_CASE("cg_apriori_bound: values and domination") {
    CHECK(cg_apriori_bound(1.0, 3) == doctest::Approx(0.0));
    CHECK(cg_apriori_bound(9.0, 3) == doctest::Approx(0.25));
    CHECK(cg_apriori_bound_exp(9.0, 3) >= cg_apriori_bound(9.0, 3));

    // bound >= measured A-norm error on a positive definite problem
    const SymmetricOperator a = gen_uniform(80, 1.0, 25.0); // kappa = 25
    const Vector b = gen_rhs(RhsPolicy::RandomGaussianUnit, 7, a);
    const LanczosFactorization fact = lanczos(a, b, 20);
    const Vector x = shifted_solve(a, b, Complex(0.0, 0.0)).real();
    const auto a_norm = [&](const Vector& v) { return std::sqrt(v.dot(a.apply(v))); };
    const double err0 = a_norm(x);
    for (const Index k : {2, 6, 12, 20}) {
        const double errk = a_norm(x - shifted_iterate_prefix(fact, 0.0, k));
        CHECK(errk / err0 <= cg_apriori_bound(25.0, k) * (1.0 + 1e-9));
    }
}

TEST_CASE("indefinite_iteration_bound: worked example") {
    const auto got = indefinite_iteration_bound(-2.0, -1.0, 1.0, 2.0, 0.01);
    CHECK(got.gamma == doctest::Approx(2.0));
    CHECK(got.k_bound == doctest::Approx(4.0 * std::log(200.0 * std::sqrt(2.0))).epsilon(1e-10));
    CHECK(got.k_bound == doctest::Approx(22.58).epsilon(1e-3));

    CHECK_THROWS_AS(indefinite_iteration_bound(-3.0, -1.0, 1.0, 2.0, 0.01), ValidationError);
    CHECK_THROWS_AS(indefinite_iteration_bound(-2.0, -1.0, 1.0, 2.0, 0.9), ValidationError);
}

TEST_CASE("indefinite_iteration_bound: empirical on a two-cluster spectrum") {
    const Index n = 200;
    Vector lambda(n);
    for (Index i = 0; i < n / 2; ++i)
        lambda[i] = -2.0 + static_cast<double>(i) / (n / 2 - 1);
    for (Index i = 0; i < n / 2; ++i)
        lambda[n / 2 + i] = 1.0 + static_cast<double>(i) / (n / 2 - 1);
    const SymmetricOperator a = SymmetricOperator::diagonal(lambda);
    const Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);

    const auto bound = indefinite_iteration_bound(-2.0, -1.0, 1.0, 2.0, 0.01);
    const Index k_cap = static_cast<Index>(std::ceil(bound.k_bound));
    const LanczosFactorization fact = lanczos(a, b, k_cap);
    const auto res = lanczos_residual_norms(a, b, fact, 0.0);
    bool reached = false;
    for (std::size_t k = 1; k < res.size(); ++k)
        if (!std::isnan(res[k]) && res[k] / res[0] < 0.01)
            reached = true;
    CHECK(reached);
}

TEST_CASE("minres two-cluster rate bound") {
    const Index n = 120;
    Vector lambda(n);
    for (Index i = 0; i < n / 2; ++i)
        lambda[i] = -2.0 + static_cast<double>(i) / (n / 2 - 1);
    for (Index i = 0; i < n / 2; ++i)
        lambda[n / 2 + i] = 1.0 + static_cast<double>(i) / (n / 2 - 1);
    const SymmetricOperator a = SymmetricOperator::diagonal(lambda);
    const Vector b = gen_rhs(RhsPolicy::RandomGaussianUnit, 11, a);
    const LanczosFactorization fact = lanczos(a, b, 40);
    const auto norms = minres_residual_norms(fact, 0.0);
    const double gamma = 2.0;
    for (std::size_t j = 0; j < norms.size(); ++j) {
        const double rate =
            2.0 * std::pow((gamma - 1.0) / (gamma + 1.0), std::floor(j / 2.0));
        CHECK(norms[j] / norms[0] <= rate * (1.0 + 1e-9));
    }
}
