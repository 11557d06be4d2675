#pragma once

#include "lanfa/intervals.hpp"
#include "lanfa/types.hpp"

namespace lanfa {

/// sup over x in [a,b] of |x - w| / |x - z|; the candidates are the endpoints
/// and the single interior stationary point x*. Throws DomainError when z lies
/// in the interval.
double h_norm_interval(double w, Complex z, double a, double b);

/// Max of h_norm over all interval and point components of s.
double h_norm_sets(double w, Complex z, const RealSet& s);

/// sup over x in [a,b] of 1 / |x - z|.
double hz_norm_interval(Complex z, double a, double b);

/// Max of hz_norm over all components of s.
double hz_norm_sets(Complex z, const RealSet& s);

/// Is z inside X_r, the union of discs D(x, |x-w|/r) over x in [a,b]?
/// Decided by minimizing |z-x| r - |x-w| over the interval (boundary counts
/// as inside); on the boundary sup |h_{w,z}| over [a,b] equals r.
bool region_membership(double w, double r, double a, double b, Complex z);

} // namespace lanfa
