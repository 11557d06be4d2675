#pragma once

#include "lanfa/symmetric_operator.hpp"

#include <cstdint>
#include <string>

namespace lanfa {

enum class RhsPolicy { EqualEigenprojection, RandomGaussianUnit };

/// Reproducible synthetic test problem: generator id + parameters + seed.
/// Identical spec and seed produce bit-identical operators and right-hand
/// sides (counter-based PRNG, no global state).
struct ProblemSpec {
    std::string generator; // uniform | strakos | wishart | outlier | mm
    Index n = 0;
    Index m = 0;          // wishart columns
    double lmin = 0.0;    // uniform
    double lmax = 0.0;
    double lambda1 = 0.0; // strakos extremes
    double lambdan = 0.0;
    double rho = 0.0;
    double kappa = 0.0;   // outlier
    std::string path;     // mm
    std::uint64_t seed = 0;
    RhsPolicy rhs_policy = RhsPolicy::EqualEigenprojection;
};

/// Eigenvalues lmin + (i-1)/(n-1) (lmax - lmin), diagonal kind.
SymmetricOperator gen_uniform(Index n, double lmin, double lmax);

/// lambda_i = lambda_n + ((n-i)/(n-1)) (lambda_1 - lambda_n) rho^{i-1};
/// i = 1 gives lambda_1, i = n gives lambda_n. Diagonal kind (sorted).
SymmetricOperator gen_strakos(Index n, double lambda1, double lambdan, double rho);

/// A = X X^T with X of size n x m, entries N(0, 1/m). Dense kind.
SymmetricOperator gen_wishart(Index n, Index m, std::uint64_t seed);

/// n-1 uniform eigenvalues on [0,1] plus the isolated {kappa}. Diagonal kind.
SymmetricOperator gen_outlier(Index n, double kappa);

SymmetricOperator gen_problem(const ProblemSpec& spec);

/// Right-hand side per policy: unit vector with equal coefficients in the
/// eigenbasis, or a seeded unit Gaussian.
Vector gen_rhs(const ProblemSpec& spec, const SymmetricOperator& a);
Vector gen_rhs(RhsPolicy policy, std::uint64_t seed, const SymmetricOperator& a);

} // namespace lanfa
