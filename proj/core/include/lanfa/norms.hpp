#pragma once

#include "lanfa/symmetric_operator.hpp"
#include "lanfa/types.hpp"

#include <string>

namespace lanfa {

enum class NormKind { Two, A, A2Shift };

/// A vector norm induced by a matrix commuting with A: the 2-norm, the A-norm
/// sqrt(v^T A v) for positive definite A, or the (A - w I)^2-norm ||(A-wI)v||_2.
struct Norm {
    NormKind kind = NormKind::Two;
    double shift = 0.0;

    static Norm two() { return {NormKind::Two, 0.0}; }
    static Norm a() { return {NormKind::A, 0.0}; }
    static Norm a2shift(double w) { return {NormKind::A2Shift, w}; }

    std::string name() const;
};

double weighted_norm(const Vector& v, const SymmetricOperator& a, const Norm& norm);

} // namespace lanfa
