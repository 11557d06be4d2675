#include "lanfa/hfun.hpp"

#include <algorithm>
#include <cmath>

namespace lanfa {

namespace {

inline double h_value(double w, Complex z, double x) {
    return std::abs(x - w) / std::abs(Complex(x, 0.0) - z);
}

void check_off_interval(Complex z, double a, double b) {
    if (std::abs(z.imag()) <= 1e-14 && z.real() >= a && z.real() <= b)
        throw DomainError("h-norm: shift z = " + std::to_string(z.real()) +
                          " lies inside [" + std::to_string(a) + ", " + std::to_string(b) + "]");
}

} // namespace

double h_norm_interval(double w, Complex z, double a, double b) {
    if (!(a <= b))
        throw ValidationError("h_norm_interval: inverted interval");
    check_off_interval(z, a, b);
    if (z == Complex(w, 0.0))
        return 1.0; // h_{w,w} == 1 identically

    double sup = std::max(h_value(w, z, a), h_value(w, z, b));

    // interior stationary point; absent when Re(z) == w (it escapes to infinity)
    const double re = z.real(), im = z.imag();
    if (std::abs(re - w) > 0.0) {
        const double x_star = (re * re + im * im - re * w) / (re - w);
        if (x_star >= a && x_star <= b && im != 0.0)
            sup = std::max(sup, std::abs(z - Complex(w, 0.0)) / std::abs(im));
    }
    return sup;
}

double h_norm_sets(double w, Complex z, const RealSet& s) {
    if (s.empty())
        throw ValidationError("h_norm_sets: empty set");
    double sup = 0.0;
    for (const auto& iv : s.intervals())
        sup = std::max(sup, h_norm_interval(w, z, iv.lo, iv.hi));
    for (double p : s.points()) {
        const double den = std::abs(Complex(p, 0.0) - z);
        if (den == 0.0)
            throw DomainError("h_norm_sets: z equals set point " + std::to_string(p));
        sup = std::max(sup, std::abs(p - w) / den);
    }
    return sup;
}

double hz_norm_interval(Complex z, double a, double b) {
    if (!(a <= b))
        throw ValidationError("hz_norm_interval: inverted interval");
    check_off_interval(z, a, b);
    const double re = z.real();
    if (re < a)
        return 1.0 / std::abs(Complex(a, 0.0) - z);
    if (re > b)
        return 1.0 / std::abs(Complex(b, 0.0) - z);
    return 1.0 / std::abs(z.imag());
}

double hz_norm_sets(Complex z, const RealSet& s) {
    if (s.empty())
        throw ValidationError("hz_norm_sets: empty set");
    double sup = 0.0;
    for (const auto& iv : s.intervals())
        sup = std::max(sup, hz_norm_interval(z, iv.lo, iv.hi));
    for (double p : s.points()) {
        const double den = std::abs(Complex(p, 0.0) - z);
        if (den == 0.0)
            throw DomainError("hz_norm_sets: z equals set point " + std::to_string(p));
        sup = std::max(sup, 1.0 / den);
    }
    return sup;
}

bool region_membership(double w, double r, double a, double b, Complex z) {
    if (!(r > 0.0))
        throw ValidationError("region_membership: r must be positive");
    if (!(a <= b))
        throw ValidationError("region_membership: inverted interval");

    // g(x) = |z - x| r - |x - w| is convex on each side of w; golden-section
    // minimize per piece and test the sign of the minimum.
    const auto g = [&](double x) { return std::abs(z - Complex(x, 0.0)) * r - std::abs(x - w); };
    const auto minimize = [&](double lo, double hi) {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double g1 = g(x1), g2 = g(x2);
        for (int it = 0; it < 200 && hi - lo > 1e-14 * (std::abs(hi) + std::abs(lo) + 1.0); ++it) {
            if (g1 < g2) {
                hi = x2;
                x2 = x1;
                g2 = g1;
                x1 = hi - inv_phi * (hi - lo);
                g1 = g(x1);
            } else {
                lo = x1;
                x1 = x2;
                g1 = g2;
                x2 = lo + inv_phi * (hi - lo);
                g2 = g(x2);
            }
        }
        return std::min({g(lo), g(hi), g1, g2});
    };

    double gmin = std::min(g(a), g(b));
    if (w > a && w < b) {
        gmin = std::min(gmin, minimize(a, w));
        gmin = std::min(gmin, minimize(w, b));
    } else {
        gmin = std::min(gmin, minimize(a, b));
    }

    const double scale = std::abs(z) + std::abs(w) + std::abs(a) + std::abs(b) + 1.0;
    return gmin <= 1e-12 * scale;
}

} // namespace lanfa
