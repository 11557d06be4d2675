#pragma once

#include "lanfa/types.hpp"

#include <string>

namespace lanfa {

/// A named scalar function with real and complex-plane evaluation plus the
/// domain/growth metadata the bound machinery needs. Piecewise functions use
/// the half-plane continuation: pieces switch on Re(z) at the breakpoint.
class ScalarFunction {
public:
    enum class Kind {
        Sqrt,
        Log,
        Inverse,
        InversePow, // x^{-q}, q > 1
        Step,       // step(x - a)
        AbsShift,   // |x - a|
        StepOverX,  // step(x - a) / x  (0 left of a, 1/z right)
        Polynomial,
        Rational,
    };

    static ScalarFunction sqrt();
    static ScalarFunction log();
    static ScalarFunction inverse();
    static ScalarFunction inverse_pow(double q);
    static ScalarFunction step(double a);
    static ScalarFunction abs_shift(double a);
    static ScalarFunction step_over_x(double a);
    static ScalarFunction polynomial(Vector coeffs); // ascending powers
    static ScalarFunction rational(Vector num, Vector den);
    static ScalarFunction identity();
    static ScalarFunction constant(double c);

    double operator()(double x) const;
    Complex operator()(Complex z) const;

    /// Can f(x) be evaluated as a finite real number at x?
    bool defined_at(double x) const;

    Kind kind() const { return kind_; }
    std::string name() const;

    /// Piecewise breakpoint a (Step/AbsShift/StepOverX only).
    double breakpoint() const;

    /// Exponent of x^{-q} (InversePow only).
    double exponent() const { return q_; }

    /// g with |f(x)| = O(|x|^g) as x -> -inf just off the axis; used to decide
    /// whether a truncated-ray integral can converge against |h|^{k+1} decay.
    double growth_exponent() const;

    /// True when f has a singularity or branch point at the origin, so
    /// contours must exclude 0.
    bool singular_at_origin() const;

private:
    explicit ScalarFunction(Kind kind) : kind_(kind) {}

    Kind kind_;
    double a_ = 0.0;
    double q_ = 0.0;
    Vector num_;
    Vector den_;
};

/// Elementwise f over a spectrum; throws DomainError naming the first value
/// where f is undefined.
Vector apply_to_spectrum(const ScalarFunction& f, const Vector& lambdas,
                         const std::string& what = "eigenvalue");

} // namespace lanfa
