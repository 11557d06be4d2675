#include "lanfa/scalar_function.hpp"

#include <cmath>
#include <sstream>

namespace lanfa {

ScalarFunction ScalarFunction::sqrt() { return ScalarFunction(Kind::Sqrt); }
ScalarFunction ScalarFunction::log() { return ScalarFunction(Kind::Log); }
ScalarFunction ScalarFunction::inverse() { return ScalarFunction(Kind::Inverse); }

ScalarFunction ScalarFunction::inverse_pow(double q) {
    if (q <= 1.0)
        throw ValidationError("ScalarFunction::inverse_pow: q must exceed 1");
    ScalarFunction f(Kind::InversePow);
    f.q_ = q;
    return f;
}

ScalarFunction ScalarFunction::step(double a) {
    ScalarFunction f(Kind::Step);
    f.a_ = a;
    return f;
}

ScalarFunction ScalarFunction::abs_shift(double a) {
    ScalarFunction f(Kind::AbsShift);
    f.a_ = a;
    return f;
}

ScalarFunction ScalarFunction::step_over_x(double a) {
    if (a <= 0.0)
        throw ValidationError("ScalarFunction::step_over_x: breakpoint must be positive");
    ScalarFunction f(Kind::StepOverX);
    f.a_ = a;
    return f;
}

ScalarFunction ScalarFunction::polynomial(Vector coeffs) {
    if (coeffs.size() == 0)
        throw ValidationError("ScalarFunction::polynomial: empty coefficient list");
    ScalarFunction f(Kind::Polynomial);
    f.num_ = std::move(coeffs);
    return f;
}

ScalarFunction ScalarFunction::rational(Vector num, Vector den) {
    if (num.size() == 0 || den.size() == 0)
        throw ValidationError("ScalarFunction::rational: empty coefficient list");
    ScalarFunction f(Kind::Rational);
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

ScalarFunction ScalarFunction::identity() {
    Vector c(2);
    c << 0.0, 1.0;
    return polynomial(c);
}

ScalarFunction ScalarFunction::constant(double c) {
    Vector v(1);
    v << c;
    return polynomial(v);
}

namespace {

template <class T>
T horner(const Vector& coeffs, T x) {
    T acc = T(coeffs[coeffs.size() - 1]);
    for (Index i = coeffs.size() - 2; i >= 0; --i)
        acc = acc * x + T(coeffs[i]);
    return acc;
}

} // namespace

double ScalarFunction::operator()(double x) const {
    switch (kind_) {
    case Kind::Sqrt:
        return std::sqrt(x);
    case Kind::Log:
        return std::log(x);
    case Kind::Inverse:
        return 1.0 / x;
    case Kind::InversePow:
        return std::pow(x, -q_);
    case Kind::Step:
        return x >= a_ ? 1.0 : 0.0;
    case Kind::AbsShift:
        return std::abs(x - a_);
    case Kind::StepOverX:
        return x >= a_ ? 1.0 / x : 0.0;
    case Kind::Polynomial:
        return horner<double>(num_, x);
    case Kind::Rational:
        return horner<double>(num_, x) / horner<double>(den_, x);
    }
    throw ValidationError("ScalarFunction: unknown kind");
}

Complex ScalarFunction::operator()(Complex z) const {
    switch (kind_) {
    case Kind::Sqrt:
        return std::sqrt(z);
    case Kind::Log:
        return std::log(z);
    case Kind::Inverse:
        return 1.0 / z;
    case Kind::InversePow:
        return std::pow(z, -q_);
    case Kind::Step:
        return z.real() >= a_ ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    case Kind::AbsShift:
        return z.real() > a_ ? z - a_ : a_ - z;
    case Kind::StepOverX:
        return z.real() >= a_ ? 1.0 / z : Complex(0.0, 0.0);
    case Kind::Polynomial:
        return horner<Complex>(num_, z);
    case Kind::Rational:
        return horner<Complex>(num_, z) / horner<Complex>(den_, z);
    }
    throw ValidationError("ScalarFunction: unknown kind");
}

bool ScalarFunction::defined_at(double x) const {
    switch (kind_) {
    case Kind::Sqrt:
        return x >= 0.0;
    case Kind::Log:
        return x > 0.0;
    case Kind::Inverse:
        return x != 0.0;
    case Kind::InversePow:
        return x > 0.0;
    case Kind::Step:
    case Kind::AbsShift:
        return true;
    case Kind::StepOverX:
        return x >= a_ ? x != 0.0 : true;
    case Kind::Polynomial:
        return true;
    case Kind::Rational:
        return horner<double>(den_, x) != 0.0;
    }
    return false;
}

std::string ScalarFunction::name() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Sqrt:
        return "sqrt";
    case Kind::Log:
        return "log";
    case Kind::Inverse:
        return "inv";
    case Kind::InversePow:
        os << "x^-" << q_;
        return os.str();
    case Kind::Step:
        os << "step(x-" << a_ << ")";
        return os.str();
    case Kind::AbsShift:
        os << "|x-" << a_ << "|";
        return os.str();
    case Kind::StepOverX:
        os << "step(x-" << a_ << ")/x";
        return os.str();
    case Kind::Polynomial:
        os << "poly(deg " << num_.size() - 1 << ")";
        return os.str();
    case Kind::Rational:
        os << "rational(" << num_.size() - 1 << "/" << den_.size() - 1 << ")";
        return os.str();
    }
    return "?";
}

double ScalarFunction::breakpoint() const {
    if (kind_ != Kind::Step && kind_ != Kind::AbsShift && kind_ != Kind::StepOverX)
        throw ValidationError("ScalarFunction::breakpoint: not a piecewise function");
    return a_;
}

double ScalarFunction::growth_exponent() const {
    switch (kind_) {
    case Kind::Sqrt:
        return 0.5;
    case Kind::Log:
        return 0.1; // log grows slower than any power; a small exponent is safe
    case Kind::Inverse:
    case Kind::InversePow:
        return 0.0;
    case Kind::Step:
    case Kind::StepOverX:
        return 0.0;
    case Kind::AbsShift:
        return 1.0;
    case Kind::Polynomial:
        return static_cast<double>(num_.size() - 1);
    case Kind::Rational:
        return static_cast<double>(num_.size() - den_.size());
    }
    return 0.0;
}

bool ScalarFunction::singular_at_origin() const {
    switch (kind_) {
    case Kind::Sqrt:
    case Kind::Log:
    case Kind::Inverse:
    case Kind::InversePow:
        return true;
    default:
        return false;
    }
}

Vector apply_to_spectrum(const ScalarFunction& f, const Vector& lambdas,
                         const std::string& what) {
    Vector out(lambdas.size());
    for (Index i = 0; i < lambdas.size(); ++i) {
        if (!f.defined_at(lambdas[i]))
            throw DomainError(f.name() + " is undefined at " + what + " " +
                              std::to_string(lambdas[i]));
        out[i] = f(lambdas[i]);
    }
    return out;
}

} // namespace lanfa
