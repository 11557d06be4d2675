#include "lanfa/norms.hpp"

#include <cmath>

namespace lanfa {

std::string Norm::name() const {
    switch (kind) {
    case NormKind::Two:
        return "two";
    case NormKind::A:
        return "a";
    case NormKind::A2Shift:
        return "a2shift(" + std::to_string(shift) + ")";
    }
    return "?";
}

double weighted_norm(const Vector& v, const SymmetricOperator& a, const Norm& norm) {
    switch (norm.kind) {
    case NormKind::Two:
        return v.norm();
    case NormKind::A: {
        const double lo = a.lambda_min();
        if (lo < -1e-10 * std::max(a.norm_estimate(), 1.0))
            throw DomainError("weighted_norm: A-norm requested with indefinite operator "
                              "(lambda_min = " +
                              std::to_string(lo) + ")");
        const double q = v.dot(a.apply(v));
        return std::sqrt(std::max(q, 0.0));
    }
    case NormKind::A2Shift:
        return (a.apply(v) - norm.shift * v).norm();
    }
    throw ValidationError("weighted_norm: unknown norm kind");
}

} // namespace lanfa
