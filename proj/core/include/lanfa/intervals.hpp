#pragma once

#include "lanfa/types.hpp"

#include <string>
#include <vector>

namespace lanfa {

struct RealInterval {
    double lo;
    double hi;
};

/// Finite union of closed real intervals and singleton points.
class RealSet {
public:
    RealSet() = default;
    static RealSet interval(double lo, double hi);
    static RealSet point(double x);
    static RealSet two_intervals(double lo1, double hi1, double lo2, double hi2);

    RealSet& add_interval(double lo, double hi);
    RealSet& add_point(double x);

    const std::vector<RealInterval>& intervals() const { return intervals_; }
    const std::vector<double>& points() const { return points_; }
    bool empty() const { return intervals_.empty() && points_.empty(); }

    bool contains(double x, double tol = 0.0) const;
    double min() const;
    double max() const;
    /// Distance from a complex point to the set.
    double distance(Complex z) const;

    std::string describe() const;

private:
    std::vector<RealInterval> intervals_;
    std::vector<double> points_;
};

/// The sets S_0 (superset of the spectrum of A) and S_1..S_k (each containing
/// one Ritz value) that parametrize the integral-term bound.
struct SpectrumSets {
    RealSet s0;
    std::vector<RealSet> s_list;
    bool uniform = false; // all S_i equal S_0, so the h-product collapses to a power
    // multiplier on the h-product covering Ritz values that escape the S_i.
    // For a split union around a gap the contour crosses, interlacing allows a
    // single Ritz value inside the gap; its factor is at most 2 while every
    // split sup is at least 1/2, so a factor 4 (16 for squared products)
    // restores a rigorous product bound.
    double slack = 1.0;

    /// A priori: every S_i equals S_0.
    static SpectrumSets apriori(RealSet s0, Index k);
    /// A posteriori: S_i is the singleton {theta_i}.
    static SpectrumSets aposteriori(RealSet s0, const Vector& ritz);
};

/// S_0 for contours crossing the real axis at w: [lambda_min, lam_left] u
/// [lam_right, lambda_max] where lam_left < w < lam_right are consecutive
/// eigenvalues around the crossing.
RealSet split_interval_at(double w, double lam_left, double lam_right, double lambda_min,
                          double lambda_max);

/// Margin variant when the bracketing eigenvalues are only estimated:
/// endpoints w -+ gamma with gamma = min_dist / 100.
RealSet split_interval_margin(double w, double min_dist, double lambda_min, double lambda_max);

} // namespace lanfa
