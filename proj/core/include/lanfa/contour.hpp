#pragma once

#include "lanfa/intervals.hpp"
#include "lanfa/types.hpp"

#include <functional>
#include <vector>

namespace lanfa {

/// One parametrized piece of a contour: a circular arc (phi0 -> phi1, signed
/// direction) or a straight line. A line may conceptually extend to infinity
/// past one end; quadrature then continues it with doubling blocks until a
/// certified tail criterion is met.
struct ContourSegment {
    enum class Type { Arc, Line };

    Type type = Type::Line;
    Complex center;
    double radius = 0.0;
    double phi0 = 0.0, phi1 = 0.0;
    Complex p0, p1;
    int extend_end = 0; // 0 none, -1 beyond p0, +1 beyond p1

    static ContourSegment arc(Complex center, double radius, double phi0, double phi1);
    static ContourSegment line(Complex p0, Complex p1, int extend_end = 0);

    double length() const;
    Complex point(double t) const;      // t in [0,1]
    Complex derivative(double t) const; // dz/dt
    Complex start() const { return point(0.0); }
    Complex end() const { return point(1.0); }
    double distance(Complex p) const;
};

enum class ContourKind { Circle, PacMan, DoubleCircle, Custom };

/// A closed curve (or union of closed curves) with a fixed quadrature node
/// set: nodes z_i, positive arclength weights (for integrals against |dz|)
/// and complex signed weights (for integrals against dz). The Pac-Man with
/// R = infinity is open on the far left; it is closed in the limit and its
/// enclosure test accounts for that.
struct Contour {
    std::vector<ContourSegment> segments;
    std::vector<int> segment_component;
    ComplexVector nodes;
    Vector arclength_weights;
    ComplexVector signed_weights;
    std::vector<int> node_component;

    ContourKind kind = ContourKind::Custom;
    double center = 0.0, radius = 0.0;
    double w = 0.0, r = 0.0, outer_radius = 0.0, eps = 0.0;
    double lo = 0.0, hi = 0.0; // double-circle: lambda_min / lambda_max used at construction
    bool infinite = false;

    double total_length() const;
    std::vector<double> component_lengths() const;
    int num_components() const;

    double distance(Complex p) const;
    int winding_number(Complex p) const;
    bool encloses_point(double x) const;
    bool encloses(const RealSet& s) const;

    static Contour custom(std::vector<ContourSegment> segments, std::vector<int> components,
                          Index n_nodes);
};

Contour make_circle(double center, double radius, Index n_nodes = 64);

/// Boundary of D(w, R) minus the slit {Re(z) <= w, |Im(z)| < r} and the disc
/// D(w, r). Pass R = infinity for the limit form, realized as two horizontal
/// rays at heights +-r closed by the small right cap.
Contour make_pacman(double w, double r, double R, Index n_nodes = 128);

/// Floor used to realize r -> 0 numerically.
double pacman_r_floor(double lambda_min, double lambda_max);

/// Union of the circles around D(lambda_min, w - lambda_min - eps) and
/// D(lambda_max, lambda_max - w - eps).
Contour make_double_circle(double w, double lambda_min, double lambda_max, double eps,
                           Index n_nodes = 128);

struct QuadratureOptions {
    double rel_tol = 1e-8;   // target relative error of the adaptive quadrature
    int max_depth = 14;      // bisection depth per initial panel
    bool adaptive = true;    // false: plain sum over the stored node set
    double ray_tail_rel = 1e-3; // certified relative tail left on truncated rays
    int max_ray_doublings = 48;
};

struct RealQuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    double ray_extent = 0.0; // distance from w actually covered on rays
    Index evaluations = 0;
};

struct ComplexQuadResult {
    Complex value;
    double err_estimate = 0.0;
    Index evaluations = 0;
};

/// Integral of g(z) |dz| over the contour (g real, typically nonnegative).
RealQuadResult contour_integral_arclength(const Contour& c,
                                          const std::function<double(Complex)>& g,
                                          QuadratureOptions opts = {});

/// Integral of g(z) dz over the contour (finite contours only).
ComplexQuadResult contour_integral_signed(const Contour& c,
                                          const std::function<Complex(Complex)>& g,
                                          QuadratureOptions opts = {});

/// Plain weighted sum over the stored node set (no adaptivity, no rays).
double fixed_node_sum(const Contour& c, const std::function<double(Complex)>& g);

} // namespace lanfa
