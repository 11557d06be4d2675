#include "lanfa/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace lanfa {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1]
constexpr int kGL = 16;
constexpr double kGLNodes[kGL] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kGLWeights[kGL] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

std::string complex_str(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

} // namespace

ContourSegment ContourSegment::arc(Complex center, double radius, double phi0, double phi1) {
    if (!(radius > 0.0))
        throw ValidationError("ContourSegment::arc: radius must be positive");
    ContourSegment s;
    s.type = Type::Arc;
    s.center = center;
    s.radius = radius;
    s.phi0 = phi0;
    s.phi1 = phi1;
    return s;
}

ContourSegment ContourSegment::line(Complex p0, Complex p1, int extend_end) {
    ContourSegment s;
    s.type = Type::Line;
    s.p0 = p0;
    s.p1 = p1;
    s.extend_end = extend_end;
    return s;
}

double ContourSegment::length() const {
    return type == Type::Arc ? radius * std::abs(phi1 - phi0) : std::abs(p1 - p0);
}

Complex ContourSegment::point(double t) const {
    if (type == Type::Arc) {
        const double phi = phi0 + t * (phi1 - phi0);
        return center + radius * Complex(std::cos(phi), std::sin(phi));
    }
    return p0 + t * (p1 - p0);
}

Complex ContourSegment::derivative(double t) const {
    if (type == Type::Arc) {
        const double phi = phi0 + t * (phi1 - phi0);
        return radius * (phi1 - phi0) * Complex(-std::sin(phi), std::cos(phi));
    }
    return p1 - p0;
}

double ContourSegment::distance(Complex p) const {
    if (type == Type::Arc) {
        const Complex d = p - center;
        const double phi = std::atan2(d.imag(), d.real());
        const double lo = std::min(phi0, phi1), hi = std::max(phi0, phi1);
        // account for 2*pi periodicity of the angle
        for (int shift = -1; shift <= 1; ++shift) {
            const double a = phi + 2.0 * M_PI * shift;
            if (a >= lo && a <= hi)
                return std::abs(std::abs(d) - radius);
        }
        return std::min(std::abs(p - start()), std::abs(p - end()));
    }
    const Complex d = p1 - p0;
    const double len2 = std::norm(d);
    if (len2 == 0.0)
        return std::abs(p - p0);
    const double t = std::clamp(((p - p0) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (p0 + t * d));
}

double Contour::total_length() const {
    double len = 0.0;
    for (const auto& s : segments)
        len += s.length();
    return len;
}

std::vector<double> Contour::component_lengths() const {
    std::vector<double> lens(static_cast<std::size_t>(num_components()), 0.0);
    for (std::size_t i = 0; i < segments.size(); ++i)
        lens[static_cast<std::size_t>(segment_component[i])] += segments[i].length();
    return lens;
}

int Contour::num_components() const {
    int m = 0;
    for (int c : segment_component)
        m = std::max(m, c + 1);
    return m;
}

double Contour::distance(Complex p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : segments)
        best = std::min(best, s.distance(p));
    return best;
}

int Contour::winding_number(Complex p) const {
    int total = 0;
    for (int comp = 0; comp < num_components(); ++comp) {
        double angle = 0.0;
        bool have_prev = false;
        Complex prev;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            if (segment_component[i] != comp)
                continue;
            const auto& s = segments[i];
            const int samples = 64;
            for (int j = have_prev ? 1 : 0; j <= samples; ++j) {
                const Complex cur = s.point(static_cast<double>(j) / samples) - p;
                if (have_prev)
                    angle += std::arg(cur / prev);
                prev = cur;
                have_prev = true;
            }
        }
        total += static_cast<int>(std::lround(angle / (2.0 * M_PI)));
    }
    return total;
}

bool Contour::encloses_point(double x) const {
    if (infinite) {
        // limit Pac-Man encloses everything except the slit and the cap disc
        return x > w + r;
    }
    const double scale = std::abs(x) + total_length() + 1.0;
    if (distance(Complex(x, 0.0)) < 1e-13 * scale)
        return false;
    return winding_number(Complex(x, 0.0)) == 1;
}

bool Contour::encloses(const RealSet& s) const {
    for (const auto& iv : s.intervals()) {
        if (!encloses_point(iv.lo) || !encloses_point(iv.hi) ||
            !encloses_point(0.5 * (iv.lo + iv.hi)))
            return false;
    }
    for (double p : s.points())
        if (!encloses_point(p))
            return false;
    return true;
}

namespace {

// distribute roughly n_nodes/16 initial panels across segments by length
std::vector<int> panel_allocation(const std::vector<ContourSegment>& segments, Index n_nodes) {
    const int total_panels = std::max<int>(1, static_cast<int>(n_nodes / kGL));
    double total_len = 0.0;
    for (const auto& s : segments)
        total_len += s.length();
    std::vector<int> panels(segments.size(), 1);
    int used = static_cast<int>(segments.size());
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const int extra =
            static_cast<int>(std::floor(total_panels * segments[i].length() / total_len)) - 1;
        if (extra > 0) {
            panels[i] += extra;
            used += extra;
        }
    }
    (void)used;
    return panels;
}

} // namespace

Contour Contour::custom(std::vector<ContourSegment> segments, std::vector<int> components,
                        Index n_nodes) {
    if (segments.empty())
        throw ValidationError("Contour: no segments");
    if (components.size() != segments.size())
        throw ValidationError("Contour: component list length mismatch");
    Contour c;
    c.segments = std::move(segments);
    c.segment_component = std::move(components);

    const auto panels = panel_allocation(c.segments, n_nodes);
    std::vector<Complex> nodes, signed_w;
    std::vector<double> arc_w;
    std::vector<int> node_comp;
    for (std::size_t i = 0; i < c.segments.size(); ++i) {
        const auto& s = c.segments[i];
        for (int p = 0; p < panels[i]; ++p) {
            const double t0 = static_cast<double>(p) / panels[i];
            const double t1 = static_cast<double>(p + 1) / panels[i];
            for (int j = 0; j < kGL; ++j) {
                const double t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * kGLNodes[j];
                const Complex dz = s.derivative(t);
                const double wq = 0.5 * (t1 - t0) * kGLWeights[j];
                nodes.push_back(s.point(t));
                arc_w.push_back(wq * std::abs(dz));
                signed_w.push_back(wq * dz);
                node_comp.push_back(c.segment_component[i]);
            }
        }
    }
    c.nodes = Eigen::Map<ComplexVector>(nodes.data(), static_cast<Index>(nodes.size()));
    c.arclength_weights = Eigen::Map<Vector>(arc_w.data(), static_cast<Index>(arc_w.size()));
    c.signed_weights =
        Eigen::Map<ComplexVector>(signed_w.data(), static_cast<Index>(signed_w.size()));
    c.node_component = std::move(node_comp);
    return c;
}

Contour make_circle(double center, double radius, Index n_nodes) {
    if (!(radius > 0.0))
        throw ValidationError("make_circle: radius must be positive");
    std::vector<ContourSegment> segs;
    for (int q = 0; q < 4; ++q)
        segs.push_back(ContourSegment::arc(Complex(center, 0.0), radius, q * M_PI_2,
                                           (q + 1) * M_PI_2));
    Contour c = Contour::custom(std::move(segs), {0, 0, 0, 0}, n_nodes);
    c.kind = ContourKind::Circle;
    c.center = center;
    c.radius = radius;
    return c;
}

double pacman_r_floor(double lambda_min, double lambda_max) {
    if (!(lambda_max > lambda_min))
        throw ValidationError("pacman_r_floor: empty spectral range");
    return 1e-8 * (lambda_max - lambda_min);
}

Contour make_pacman(double w, double r, double R, Index n_nodes) {
    if (!(r > 0.0))
        throw ValidationError("make_pacman: r must be positive (use pacman_r_floor for r -> 0)");

    const Complex cw(w, 0.0);
    std::vector<ContourSegment> segs;

    if (std::isinf(R)) {
        const double r0 = std::max(1.0, 1000.0 * r);
        // top ray (extends left), right cap, bottom ray (extends left)
        segs.push_back(ContourSegment::line(Complex(w - r0, r), Complex(w, r), -1));
        segs.push_back(ContourSegment::arc(cw, r, M_PI_2, 0.0));
        segs.push_back(ContourSegment::arc(cw, r, 0.0, -M_PI_2));
        segs.push_back(ContourSegment::line(Complex(w, -r), Complex(w - r0, -r), +1));
        Contour c = Contour::custom(std::move(segs), {0, 0, 0, 0}, n_nodes);
        c.kind = ContourKind::PacMan;
        c.w = w;
        c.r = r;
        c.outer_radius = std::numeric_limits<double>::infinity();
        c.infinite = true;
        return c;
    }

    if (!(R > r))
        throw ValidationError("make_pacman: need R > r");
    const double delta = std::asin(r / R);
    const double ell = std::sqrt(R * R - r * r);
    // counterclockwise: outer arc, top slit edge, cap, bottom slit edge
    const double phi_lo = -(M_PI - delta), phi_hi = M_PI - delta;
    for (int q = 0; q < 4; ++q)
        segs.push_back(ContourSegment::arc(cw, R, phi_lo + q * (phi_hi - phi_lo) / 4.0,
                                           phi_lo + (q + 1) * (phi_hi - phi_lo) / 4.0));
    segs.push_back(ContourSegment::line(Complex(w - ell, r), Complex(w, r)));
    segs.push_back(ContourSegment::arc(cw, r, M_PI_2, -M_PI_2));
    segs.push_back(ContourSegment::line(Complex(w, -r), Complex(w - ell, -r)));
    Contour c = Contour::custom(std::move(segs), std::vector<int>(segs.size(), 0), n_nodes);
    c.kind = ContourKind::PacMan;
    c.w = w;
    c.r = r;
    c.outer_radius = R;
    return c;
}

Contour make_double_circle(double w, double lambda_min, double lambda_max, double eps,
                           Index n_nodes) {
    if (!(lambda_min < w && w < lambda_max))
        throw ValidationError("make_double_circle: need lambda_min < w < lambda_max");
    if (eps < 0.0)
        throw ValidationError("make_double_circle: eps must be nonnegative");
    const double r1 = w - lambda_min - eps;
    const double r2 = lambda_max - w - eps;
    if (!(r1 > 0.0) || !(r2 > 0.0))
        throw ValidationError("make_double_circle: eps leaves no room for the circles");

    std::vector<ContourSegment> segs;
    std::vector<int> comps;
    for (int q = 0; q < 4; ++q) {
        segs.push_back(
            ContourSegment::arc(Complex(lambda_min, 0.0), r1, q * M_PI_2, (q + 1) * M_PI_2));
        comps.push_back(0);
    }
    for (int q = 0; q < 4; ++q) {
        segs.push_back(
            ContourSegment::arc(Complex(lambda_max, 0.0), r2, q * M_PI_2, (q + 1) * M_PI_2));
        comps.push_back(1);
    }
    Contour c = Contour::custom(std::move(segs), std::move(comps), n_nodes);
    c.kind = ContourKind::DoubleCircle;
    c.w = w;
    c.eps = eps;
    c.lo = lambda_min;
    c.hi = lambda_max;
    return c;
}

namespace {

template <class T>
double magnitude(const T& v) {
    if constexpr (std::is_same_v<T, double>)
        return std::abs(v);
    else
        return std::abs(v);
}

// density(t) = g(z(t)) * weight-factor; integrated over t in [t0, t1]
template <class T, class Density>
T gl_panel(const Density& dens, double t0, double t1) {
    T acc{};
    for (int j = 0; j < kGL; ++j) {
        const double t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * kGLNodes[j];
        acc += kGLWeights[j] * dens(t);
    }
    return T(0.5 * (t1 - t0)) * acc;
}

template <class T, class Density>
T adaptive_panel(const Density& dens, double t0, double t1, T whole, double tol, int depth,
                 double& err_acc) {
    const double tm = 0.5 * (t0 + t1);
    const T left = gl_panel<T>(dens, t0, tm);
    const T right = gl_panel<T>(dens, tm, t1);
    const double diff = magnitude<T>(left + right - whole);
    if (diff <= tol || depth <= 0) {
        err_acc += diff;
        return left + right;
    }
    return adaptive_panel<T>(dens, t0, tm, left, tol / 2, depth - 1, err_acc) +
           adaptive_panel<T>(dens, tm, t1, right, tol / 2, depth - 1, err_acc);
}

template <class T, class Density>
T integrate_segment(const Density& dens, int n_panels, double tol, const QuadratureOptions& opts,
                    double& err_acc) {
    T total{};
    for (int p = 0; p < n_panels; ++p) {
        const double t0 = static_cast<double>(p) / n_panels;
        const double t1 = static_cast<double>(p + 1) / n_panels;
        const T whole = gl_panel<T>(dens, t0, t1);
        if (opts.adaptive)
            total += adaptive_panel<T>(dens, t0, t1, whole, tol / n_panels, opts.max_depth,
                                       err_acc);
        else
            total += whole;
    }
    return total;
}

} // namespace

RealQuadResult contour_integral_arclength(const Contour& c,
                                          const std::function<double(Complex)>& g,
                                          QuadratureOptions opts) {
    RealQuadResult result;
    Index evals = 0;

    const auto density_for = [&](const ContourSegment& s) {
        return [&, seg = &s](double t) {
            const Complex z = seg->point(t);
            const double v = g(z) * std::abs(seg->derivative(t));
            ++evals;
            if (!std::isfinite(v))
                throw NumericalError("contour_integral: non-finite integrand at z = " +
                                     complex_str(z));
            return v;
        };
    };

    const auto panels = panel_allocation(c.segments, c.nodes.size());

    // rough pass fixes the absolute tolerance scale
    double rough = 0.0;
    for (std::size_t i = 0; i < c.segments.size(); ++i) {
        const auto dens = density_for(c.segments[i]);
        for (int p = 0; p < panels[i]; ++p)
            rough += gl_panel<double>(dens, static_cast<double>(p) / panels[i],
                                      static_cast<double>(p + 1) / panels[i]);
    }
    const double tol_total = opts.rel_tol * std::max(std::abs(rough), 1e-300);
    const double tol_seg = tol_total / static_cast<double>(c.segments.size());

    double err = 0.0;
    double value = 0.0;
    for (std::size_t i = 0; i < c.segments.size(); ++i)
        value += integrate_segment<double>(density_for(c.segments[i]), panels[i], tol_seg, opts,
                                           err);

    // doubling-block extension of truncated rays with a geometric tail bound
    double extent = 0.0;
    if (opts.adaptive) {
        for (std::size_t i = 0; i < c.segments.size(); ++i) {
            const auto& s = c.segments[i];
            if (s.type != ContourSegment::Type::Line || s.extend_end == 0)
                continue;
            const Complex anchor = s.extend_end < 0 ? s.p0 : s.p1;
            const Complex dir = s.extend_end < 0 ? (s.p0 - s.p1) / std::abs(s.p0 - s.p1)
                                                 : (s.p1 - s.p0) / std::abs(s.p1 - s.p0);
            double span = s.length();
            Complex lo = anchor;
            double prev_block = std::numeric_limits<double>::infinity();
            for (int m = 0; m < opts.max_ray_doublings; ++m) {
                const Complex hi = lo + span * dir;
                ContourSegment block = ContourSegment::line(lo, hi);
                const auto dens = density_for(block);
                double block_err = 0.0;
                const double block_val = integrate_segment<double>(
                    dens, 1, opts.rel_tol * std::max(std::abs(value), 1e-300), opts, block_err);
                value += block_val;
                err += block_err;
                extent = std::max(extent, std::abs(hi - Complex(c.w, 0.0)));

                // blocks may grow while |f| still dominates the h-decay; a
                // genuinely divergent integrand (f growing at degree >= k)
                // blows past any fixed magnitude instead
                const double mag = std::abs(block_val);
                if (!std::isfinite(mag) || mag > 1e120 * (std::abs(value) + 1.0))
                    throw NumericalError(
                        "contour_integral: ray integral does not decay (block " +
                        std::to_string(mag) + " at extent " + std::to_string(extent) + ")");
                const double rho =
                    std::isfinite(prev_block) && prev_block > 0.0 ? mag / prev_block : 0.5;
                if (rho < 1.0) {
                    const double tail = mag * rho / (1.0 - rho);
                    // factor 4 also covers the omitted far closing arc
                    if (4.0 * tail <= opts.ray_tail_rel * std::abs(value) &&
                        mag <= opts.ray_tail_rel * std::abs(value)) {
                        err += 4.0 * tail + mag;
                        break;
                    }
                }
                prev_block = mag;
                lo = hi;
                span *= 2.0;
                if (m + 1 == opts.max_ray_doublings)
                    throw NumericalError("contour_integral: ray extension did not converge");
            }
        }
    }

    result.value = value;
    result.err_estimate = err;
    result.ray_extent = extent;
    result.evaluations = evals;
    return result;
}

ComplexQuadResult contour_integral_signed(const Contour& c,
                                          const std::function<Complex(Complex)>& g,
                                          QuadratureOptions opts) {
    if (c.infinite)
        throw ValidationError("contour_integral_signed: contour is not finite");
    ComplexQuadResult result;
    Index evals = 0;

    const auto density_for = [&](const ContourSegment& s) {
        return [&, seg = &s](double t) {
            const Complex z = seg->point(t);
            const Complex v = g(z) * seg->derivative(t);
            ++evals;
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NumericalError("contour_integral: non-finite integrand at z = " +
                                     complex_str(z));
            return v;
        };
    };

    const auto panels = panel_allocation(c.segments, c.nodes.size());
    Complex rough{};
    for (std::size_t i = 0; i < c.segments.size(); ++i) {
        const auto dens = density_for(c.segments[i]);
        for (int p = 0; p < panels[i]; ++p)
            rough += gl_panel<Complex>(dens, static_cast<double>(p) / panels[i],
                                       static_cast<double>(p + 1) / panels[i]);
    }
    const double tol_total = opts.rel_tol * std::max(std::abs(rough), 1e-300);
    const double tol_seg = tol_total / static_cast<double>(c.segments.size());

    double err = 0.0;
    Complex value{};
    for (std::size_t i = 0; i < c.segments.size(); ++i)
        value += integrate_segment<Complex>(density_for(c.segments[i]), panels[i], tol_seg, opts,
                                            err);

    result.value = value;
    result.err_estimate = err;
    result.evaluations = evals;
    return result;
}

double fixed_node_sum(const Contour& c, const std::function<double(Complex)>& g) {
    double acc = 0.0;
    for (Index i = 0; i < c.nodes.size(); ++i) {
        const double v = g(c.nodes[i]);
        if (!std::isfinite(v))
            throw NumericalError("fixed_node_sum: non-finite integrand at z = " +
                                 complex_str(c.nodes[i]));
        acc += v * c.arclength_weights[i];
    }
    return acc;
}

} // namespace lanfa
