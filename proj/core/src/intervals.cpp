#include "lanfa/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lanfa {

RealSet RealSet::interval(double lo, double hi) { return RealSet().add_interval(lo, hi); }

RealSet RealSet::point(double x) { return RealSet().add_point(x); }

RealSet RealSet::two_intervals(double lo1, double hi1, double lo2, double hi2) {
    return RealSet().add_interval(lo1, hi1).add_interval(lo2, hi2);
}

RealSet& RealSet::add_interval(double lo, double hi) {
    if (!(lo <= hi))
        throw ValidationError("RealSet: interval [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "] is inverted");
    intervals_.push_back({lo, hi});
    return *this;
}

RealSet& RealSet::add_point(double x) {
    if (!std::isfinite(x))
        throw ValidationError("RealSet: non-finite point");
    points_.push_back(x);
    return *this;
}

bool RealSet::contains(double x, double tol) const {
    for (const auto& iv : intervals_)
        if (x >= iv.lo - tol && x <= iv.hi + tol)
            return true;
    for (double p : points_)
        if (std::abs(x - p) <= tol)
            return true;
    return false;
}

double RealSet::min() const {
    if (empty())
        throw ValidationError("RealSet::min: empty set");
    double m = std::numeric_limits<double>::infinity();
    for (const auto& iv : intervals_)
        m = std::min(m, iv.lo);
    for (double p : points_)
        m = std::min(m, p);
    return m;
}

double RealSet::max() const {
    if (empty())
        throw ValidationError("RealSet::max: empty set");
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& iv : intervals_)
        m = std::max(m, iv.hi);
    for (double p : points_)
        m = std::max(m, p);
    return m;
}

double RealSet::distance(Complex z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : intervals_) {
        const double x = std::clamp(z.real(), iv.lo, iv.hi);
        best = std::min(best, std::abs(z - Complex(x, 0.0)));
    }
    for (double p : points_)
        best = std::min(best, std::abs(z - Complex(p, 0.0)));
    return best;
}

std::string RealSet::describe() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& iv : intervals_) {
        if (!first)
            os << " u ";
        os << "[" << iv.lo << ", " << iv.hi << "]";
        first = false;
    }
    for (double p : points_) {
        if (!first)
            os << " u ";
        os << "{" << p << "}";
        first = false;
    }
    if (first)
        os << "{}";
    return os.str();
}

SpectrumSets SpectrumSets::apriori(RealSet s0, Index k) {
    if (k < 1)
        throw ValidationError("SpectrumSets::apriori: k must be positive");
    SpectrumSets sets;
    sets.s_list.assign(static_cast<std::size_t>(k), s0);
    sets.s0 = std::move(s0);
    sets.uniform = true;
    return sets;
}

SpectrumSets SpectrumSets::aposteriori(RealSet s0, const Vector& ritz) {
    if (ritz.size() == 0)
        throw ValidationError("SpectrumSets::aposteriori: no Ritz values");
    SpectrumSets sets;
    sets.s0 = std::move(s0);
    sets.s_list.reserve(static_cast<std::size_t>(ritz.size()));
    for (Index i = 0; i < ritz.size(); ++i)
        sets.s_list.push_back(RealSet::point(ritz[i]));
    return sets;
}

RealSet split_interval_at(double w, double lam_left, double lam_right, double lambda_min,
                          double lambda_max) {
    if (!(lambda_min <= lam_left && lam_left < w && w < lam_right && lam_right <= lambda_max))
        throw ValidationError("split_interval_at: need lambda_min <= lam_left < w < lam_right "
                              "<= lambda_max");
    return RealSet::two_intervals(lambda_min, lam_left, lam_right, lambda_max);
}

RealSet split_interval_margin(double w, double min_dist, double lambda_min, double lambda_max) {
    if (!(min_dist > 0.0))
        throw ValidationError("split_interval_margin: min_dist must be positive");
    const double gamma = min_dist / 100.0;
    if (!(lambda_min <= w - gamma && w + gamma <= lambda_max))
        throw ValidationError("split_interval_margin: margin does not fit inside the range");
    return RealSet::two_intervals(lambda_min, w - gamma, w + gamma, lambda_max);
}

} // namespace lanfa
