#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lanfa/lanczos.hpp"
#include "lanfa/problems.hpp"

#include "test_support.hpp"

using namespace lanfa;
using namespace lanfa::testing;

TEST_CASE("gen_uniform: endpoints, spacing, condition number") {
    const SymmetricOperator two = gen_uniform(2, 0.5, 3.5);
    CHECK(two.diagonal_spectrum()[0] == 0.5);
    CHECK(two.diagonal_spectrum()[1] == 3.5);

    const SymmetricOperator a = gen_uniform(1000, 1e-2, 1e2);
    const Vector& d = a.diagonal_spectrum();
    CHECK(d[0] == 1e-2);
    CHECK(d[999] == 1e2);
    const double gap = d[1] - d[0];
    for (Index i = 0; i + 1 < 1000; ++i)
        CHECK(d[i + 1] - d[i] == doctest::Approx(gap).epsilon(1e-10));
    CHECK(d[999] / d[0] == doctest::Approx(1e4));

    CHECK_THROWS_AS(gen_uniform(1, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(gen_uniform(5, 2.0, 1.0), ValidationError);
}

TEST_CASE("gen_strakos: formula endpoints and clustering") {
    const SymmetricOperator a = gen_strakos(50, 1.0, 0.001, 0.8);
    const Vector& d = a.diagonal_spectrum();
    CHECK(d[49] == doctest::Approx(1.0).epsilon(1e-14));   // i = 1 term
    CHECK(d[0] == doctest::Approx(0.001).epsilon(1e-14));  // i = n term
    // geometric damping clusters eigenvalues toward the small end
    Index below_mid = 0;
    for (Index i = 0; i < 50; ++i)
        if (d[i] < 0.5)
            ++below_mid;
    CHECK(below_mid > 35);
    CHECK_THROWS_AS(gen_strakos(50, 0.001, 1.0, 0.8), ValidationError);
}

TEST_CASE("gen_wishart: psd, deterministic, expected trace") {
    const SymmetricOperator a = gen_wishart(60, 120, 42);
    CHECK(a.kind() == OperatorKind::Dense);
    CHECK(a.lambda_min() >= -1e-10);

    const SymmetricOperator b = gen_wishart(60, 120, 42);
    CHECK((a.to_dense() - b.to_dense()).norm() == 0.0);

    // E[trace] = n; average over seeds within 5%
    double tr = 0.0;
    const int seeds = 12;
    for (int s = 0; s < seeds; ++s)
        tr += gen_wishart(60, 120, 1000 + static_cast<std::uint64_t>(s)).to_dense().trace();
    tr /= seeds;
    CHECK(std::abs(tr - 60.0) <= 0.05 * 60.0);
}

TEST_CASE("gen_outlier: layout and Ritz gap behavior") {
    const SymmetricOperator small = gen_outlier(3, 5.0);
    CHECK(small.diagonal_spectrum()[0] == 0.0);
    CHECK(small.diagonal_spectrum()[1] == 1.0);
    CHECK(small.diagonal_spectrum()[2] == 5.0);

    const SymmetricOperator a = gen_outlier(200, 5.0);
    const Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
    const LanczosFactorization fact = lanczos(a, b, 25);
    for (const Index k : {5, 12, 25}) {
        const Vector ritz = tridiag_eigvals(fact.prefix_t(k));
        Index in_gap = 0;
        for (Index i = 0; i < ritz.size(); ++i)
            if (ritz[i] > 1.0 + 1e-9 && ritz[i] < 5.0 - 1e-9)
                ++in_gap;
        CHECK(in_gap <= 1);
    }
}

TEST_CASE("gen_rhs: equal projection and determinism") {
    const SymmetricOperator diag = gen_uniform(16, 1.0, 2.0);
    const Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, diag);
    for (Index i = 0; i < 16; ++i)
        CHECK(b[i] == doctest::Approx(0.25));
    CHECK(std::abs(b.norm() - 1.0) <= 1e-14);

    const SymmetricOperator dense = gen_wishart(30, 60, 7);
    const Vector g1 = gen_rhs(RhsPolicy::RandomGaussianUnit, 9, dense);
    const Vector g2 = gen_rhs(RhsPolicy::RandomGaussianUnit, 9, dense);
    CHECK((g1 - g2).norm() == 0.0);
    CHECK(std::abs(g1.norm() - 1.0) <= 1e-14);
    const Vector g3 = gen_rhs(RhsPolicy::RandomGaussianUnit, 10, dense);
    CHECK((g1 - g3).norm() > 0.0);

    // equal projection in a dense eigenbasis: coefficients all 1/sqrt(n)
    const Vector beq = gen_rhs(RhsPolicy::EqualEigenprojection, 0, dense);
    const Vector coeffs = dense.eigh().eigenvectors.transpose() * beq;
    for (Index i = 0; i < coeffs.size(); ++i)
        CHECK(coeffs[i] == doctest::Approx(1.0 / std::sqrt(30.0)).epsilon(1e-10));
}

TEST_CASE("gen_problem: dispatch and determinism by spec") {
    ProblemSpec spec;
    spec.generator = "strakos";
    spec.n = 50;
    spec.lambda1 = 1.0;
    spec.lambdan = 0.001;
    spec.rho = 0.8;
    spec.seed = 3;
    spec.rhs_policy = RhsPolicy::RandomGaussianUnit;
    const SymmetricOperator a1 = gen_problem(spec);
    const SymmetricOperator a2 = gen_problem(spec);
    CHECK((a1.diagonal_spectrum() - a2.diagonal_spectrum()).norm() == 0.0);
    const Vector b1 = gen_rhs(spec, a1);
    const Vector b2 = gen_rhs(spec, a2);
    CHECK((b1 - b2).norm() == 0.0);

    spec.generator = "nope";
    CHECK_THROWS_AS(gen_problem(spec), ValidationError);
}
