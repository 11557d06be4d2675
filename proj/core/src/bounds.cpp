#include "lanfa/bounds.hpp"

#include "lanfa/hfun.hpp"
#include "lanfa/linear_systems.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace lanfa {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void check_enclosure(const Contour& c, const SpectrumSets& sets) {
    if (!c.encloses(sets.s0))
        throw ValidationError("integral_term: contour does not enclose S0 = " +
                              sets.s0.describe());
    if (sets.uniform)
        return; // S_i == S_0, already verified
    for (const auto& s : sets.s_list)
        if (!c.encloses(s))
            throw ValidationError("integral_term: contour does not enclose S_i = " +
                                  s.describe());
}

// log of prod_i ||h_{w,z}||_{S_i}
double log_h_product(double w, Complex z, const SpectrumSets& sets) {
    if (sets.uniform)
        return static_cast<double>(sets.s_list.size()) *
               std::log(h_norm_sets(w, z, sets.s0));
    double acc = 0.0;
    for (const auto& s : sets.s_list)
        acc += std::log(h_norm_sets(w, z, s));
    return acc;
}

void run_rows(Index n, int jobs, const std::function<void(Index)>& fn) {
    jobs = std::clamp<int>(jobs, 1, static_cast<int>(n));
    if (jobs <= 1) {
        for (Index i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<Index> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const Index i = next.fetch_add(1);
                if (i >= n)
                    break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

// Shrink the double-circle gap when a Ritz value has wandered inside it, so
// the contour still encloses the whole Lanczos spectrum.
Contour ensure_ritz_enclosed(const Contour& c, double w, const Vector& ritz) {
    if (c.kind != ContourKind::DoubleCircle)
        return c;
    double dist = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < ritz.size(); ++i)
        dist = std::min(dist, std::abs(ritz[i] - w));
    const double scale = std::abs(w) + c.hi - c.lo + 1.0;
    if (dist < 1e-13 * scale)
        throw SingularShiftError("bound_curve: a Ritz value coincides with w = " +
                                     std::to_string(w),
                                 w + dist);
    if (c.eps <= 0.5 * dist)
        return c;
    return make_double_circle(w, c.lo, c.hi, 0.5 * dist, c.nodes.size());
}

} // namespace

IntegralTermResult integral_term_full(const ScalarFunction& f, const Contour& c, double w,
                                      const SpectrumSets& sets, QuadratureOptions quad) {
    if (sets.s_list.empty())
        throw ValidationError("integral_term: no S_i sets");
    check_enclosure(c, sets);

    const auto integrand = [&](Complex z) {
        const double fz = std::abs(f(z));
        const double h0 = h_norm_sets(w, z, sets.s0);
        return sets.slack * fz * h0 * std::exp(log_h_product(w, z, sets));
    };
    const RealQuadResult q = contour_integral_arclength(c, integrand, quad);
    return IntegralTermResult{q.value / kTwoPi, q.err_estimate / kTwoPi, q.ray_extent};
}

double integral_term(const ScalarFunction& f, const Contour& c, double w,
                     const SpectrumSets& sets, QuadratureOptions quad) {
    return integral_term_full(f, c, w, sets, quad).value;
}

std::optional<std::size_t> BoundReport::first_violation() const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].true_err > rows[i].bound_value + rows[i].quad_err_estimate)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> QuadformReport::first_violation() const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].true_qf_err > rows[i].bound_value + rows[i].quad_err_estimate)
            return i;
    return std::nullopt;
}

namespace {

// ||f_k(w,z)||_2 <= ||F_k||_F ||((T-zI)^{-1} - det (T-wI)^{-1}) e_1||_2 ||b||:
// the submultiplicative form; keeping ||F_k|| outside the integrand makes the
// correction conservative against recurrence noise of every direction.
//
// The correction bounds ||(A - zI)^{-1} f_k|| in the report norm, so the
// resolvent factor depends on it: ||h_{w,z}||_{S0} in the (A-wI)^2-norm
// (the derivation's case), ||h_z||_{S0} in the 2-norm, and
// sqrt(max S0) ||h_z||_{S0} in the A-norm.
FpCorrectionResult fp_correction_impl(const ScalarFunction& f, const Contour& c, double w,
                                      const RealSet& s0, const Tridiagonal& t, double b_norm,
                                      double f_frobenius, const Vector& ritz, const Norm& norm,
                                      QuadratureOptions quad) {
    // k = 1: (T - zI)^{-1} e_1 - det(h_{w,z}(T)) (T - wI)^{-1} e_1 vanishes
    // identically, so the correction is exactly zero
    if (t.size() == 1 || f_frobenius == 0.0)
        return FpCorrectionResult{0.0, 0.0};

    const Vector uw = tridiag_solve_e1(t, Complex(w, 0.0)).real();
    const double a_scale = norm.kind == NormKind::A ? std::sqrt(std::max(s0.max(), 0.0)) : 1.0;

    const auto integrand = [&](Complex z) {
        const ComplexVector uz = tridiag_solve_e1(t, z);
        const Complex det = det_ratio(t, w, z, ritz);
        const double vec_norm = (uz - det * uw.cast<Complex>()).norm();
        const double resolvent = norm.kind == NormKind::A2Shift
                                     ? h_norm_sets(w, z, s0)
                                     : a_scale * hz_norm_sets(z, s0);
        return std::abs(f(z)) * resolvent * b_norm * f_frobenius * vec_norm;
    };
    const RealQuadResult q = contour_integral_arclength(c, integrand, quad);
    return FpCorrectionResult{q.value / kTwoPi, q.err_estimate / kTwoPi};
}

} // namespace

FpCorrectionResult fp_correction(const ScalarFunction& f, const Contour& c, double w,
                                 const RealSet& s0, const LanczosFactorization& fact,
                                 const Matrix& recurrence_f, QuadratureOptions quad) {
    if (recurrence_f.cols() != fact.steps() || recurrence_f.rows() != fact.dim())
        throw ValidationError("fp_correction: recurrence residual shape mismatch");
    return fp_correction_impl(f, c, w, s0, fact.t, fact.b_norm, recurrence_f.norm(),
                              tridiag_eigvals(fact.t), quad);
}

BoundReport bound_curve(const SymmetricOperator& a, const Vector& b, const ScalarFunction& f,
                        const Contour& contour, double w, const BoundCurveOptions& opts) {
    if (opts.k_max < 1)
        throw ValidationError("bound_curve: k_max must be positive");
    if (opts.s0.empty())
        throw ValidationError("bound_curve: S0 not provided");

    const LanczosFactorization fact = lanczos(a, b, std::min(opts.k_max, a.dim()), opts.lanczos);
    const Index steps = fact.steps();

    // shared oracles, computed before the parallel row loop
    const Vector f_a_b = ground_truth(a, b, f);
    const ComplexVector xw_c = shifted_solve(a, b, Complex(w, 0.0));
    if (!xw_c.allFinite())
        throw NumericalError("bound_curve: shifted solve at w is not finite");
    const Vector xw = xw_c.real();
    a.norm_estimate();
    if (opts.norm.kind == NormKind::A)
        a.eigh();

    // cumulative column norms give ||F_j||_F for every prefix j
    Vector f_frob_prefix;
    if (opts.fp_term) {
        auto [fm, fnorm] = recurrence_residual(a, fact);
        (void)fnorm;
        f_frob_prefix.resize(steps);
        double acc = 0.0;
        for (Index j = 0; j < steps; ++j) {
            acc += fm.col(j).squaredNorm();
            f_frob_prefix[j] = std::sqrt(acc);
        }
    }

    double cg_kappa_shift = 0.0, cg_err0 = 0.0;
    if (opts.err_from_cg_bound) {
        const double lmin = a.lambda_min(), lmax = a.lambda_max();
        if (!(w < lmin))
            throw ValidationError("bound_curve: the CG a priori substitution needs w < "
                                  "lambda_min");
        cg_kappa_shift = (lmax - w) / (lmin - w);
        cg_err0 = weighted_norm(xw, a, opts.norm);
    }

    BoundReport report;
    report.f_name = f.name();
    report.contour_kind = contour.kind == ContourKind::Circle        ? "circle"
                          : contour.kind == ContourKind::PacMan      ? "pacman"
                          : contour.kind == ContourKind::DoubleCircle ? "double-circle"
                                                                      : "custom";
    report.w = w;
    report.norm_name = opts.norm.name();
    report.policy = opts.policy;
    report.precision = opts.lanczos.precision;
    report.rows.resize(static_cast<std::size_t>(steps));

    run_rows(steps, opts.jobs, [&](Index idx) {
        const Index k = idx + 1;
        const Tridiagonal tk = fact.prefix_t(k);
        const Vector ritz = tridiag_eigvals(tk);
        const Contour ck = ensure_ritz_enclosed(contour, w, ritz);

        SpectrumSets sets = opts.policy == SetsPolicy::Apriori
                                ? SpectrumSets::apriori(opts.s0, k)
                                : SpectrumSets::aposteriori(opts.s0, ritz);
        if (opts.policy == SetsPolicy::Apriori && ck.kind == ContourKind::DoubleCircle &&
            opts.s0.intervals().size() >= 2)
            sets.slack = 4.0; // covers the single gap Ritz value interlacing allows
        for (Index i = 0; i < ritz.size(); ++i)
            if (!ck.encloses_point(ritz[i]))
                throw ValidationError("bound_curve: contour does not enclose Ritz value " +
                                      std::to_string(ritz[i]) + " at k = " +
                                      std::to_string(k));

        const IntegralTermResult it = integral_term_full(f, ck, w, sets, opts.quad);

        const Vector iterate = shifted_iterate_prefix(fact, w, k);
        const Vector err_vec = xw - iterate;
        const Vector res_vec = b - (a.apply(iterate) - w * iterate);
        const double err_w = opts.err_from_cg_bound
                                 ? cg_apriori_bound(cg_kappa_shift, k) * cg_err0
                                 : weighted_norm(err_vec, a, opts.norm);
        const double res_w = res_vec.norm();

        const Vector lan = lanczos_fa_prefix(fact, f, k);
        const double true_err = weighted_norm(f_a_b - lan, a, opts.norm);

        BoundRow row;
        row.k = k;
        row.true_err = true_err;
        row.err_w_norm = err_w;
        row.res_w_norm_2 = res_w;
        row.integral_term = it.value;
        row.bound_value = it.value * err_w;
        row.quad_err_estimate = it.quad_err * err_w;
        if (opts.fp_term) {
            const FpCorrectionResult fp = fp_correction_impl(
                f, ck, w, opts.s0, tk, fact.b_norm, f_frob_prefix[k - 1], ritz, opts.quad);
            row.fp_term = fp.value;
            row.bound_value += fp.value;
            row.quad_err_estimate += fp.quad_err;
        }
        report.rows[static_cast<std::size_t>(idx)] = row;
    });

    return report;
}

double bound_disk(const ScalarFunction& f, double w, double lambda_max, double err_w_norm) {
    if (!(w < lambda_max))
        throw ValidationError("bound_disk: need w < lambda_max");
    const Contour circle = make_circle(lambda_max, lambda_max - w, 256);
    double fmax = 0.0;
    for (Index i = 0; i < circle.nodes.size(); ++i)
        fmax = std::max(fmax, std::abs(f(circle.nodes[i])));
    if (!std::isfinite(fmax))
        throw DomainError("bound_disk: f is singular on the disk boundary");
    return (lambda_max - w) * fmax * err_w_norm;
}

double bound_xq_relative(double q, double c, double kappa_a, double kappa_shift,
                         double err_ratio) {
    if (!(q > 1.0))
        throw ValidationError("bound_xq_relative: q must exceed 1");
    if (!(c > 0.0 && c < 1.0))
        throw ValidationError("bound_xq_relative: c must lie in (0,1)");
    if (!(kappa_a >= 1.0) || !(kappa_shift >= 1.0))
        throw ValidationError("bound_xq_relative: condition numbers must be at least 1");
    if (!(err_ratio >= 0.0))
        throw ValidationError("bound_xq_relative: err_ratio must be nonnegative");
    return std::pow(c, -q) * std::pow(kappa_a, q) * kappa_shift * err_ratio;
}

double sqrt_pacman_constant(Index k, double lambda_max) {
    if (k < 1)
        throw ValidationError("sqrt_pacman_constant: k must be positive");
    if (!(lambda_max > 0.0))
        throw ValidationError("sqrt_pacman_constant: lambda_max must be positive");
    const double log_value = 1.5 * std::log(lambda_max) - std::log(2.0 * std::sqrt(M_PI)) +
                             std::lgamma(static_cast<double>(k) - 0.5) -
                             std::lgamma(static_cast<double>(k) + 1.0);
    return std::exp(log_value);
}

double table1_constant(Table1Function f, double a, double lambda_min, double lambda_max) {
    if (!(lambda_min < a && a < lambda_max))
        throw ValidationError("table1_constant: need lambda_min < a < lambda_max");
    switch (f) {
    case Table1Function::Abs:
        return 2.0 * (a - lambda_min) * (a - lambda_min) +
               2.0 * (lambda_max - a) * (lambda_max - a);
    case Table1Function::Step:
        return lambda_max - a;
    case Table1Function::StepOverX:
        if (!(a > 0.0))
            throw ValidationError("table1_constant: step/x needs a > 0");
        return (lambda_max - a) / a;
    }
    throw ValidationError("table1_constant: unknown function");
}

double pw_apriori_constant(const ScalarFunction& f, const Contour& c) {
    const auto lengths = c.component_lengths();
    std::vector<double> fmax(lengths.size(), 0.0);
    for (Index i = 0; i < c.nodes.size(); ++i) {
        const auto comp = static_cast<std::size_t>(c.node_component[i]);
        fmax[comp] = std::max(fmax[comp], std::abs(f(c.nodes[i])));
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        if (!std::isfinite(fmax[j]))
            throw DomainError("pw_apriori_constant: f is singular on the contour");
        acc += lengths[j] * fmax[j];
    }
    return acc / kTwoPi;
}

QuadformBoundResult bound_quadform(const ScalarFunction& f, const Contour& c, double w,
                                   const SpectrumSets& sets, double res_w_norm_2,
                                   QuadratureOptions quad) {
    if (sets.s_list.empty())
        throw ValidationError("bound_quadform: no S_i sets");
    check_enclosure(c, sets);
    // S0 must stay clear of the contour: h_z has no (x - w) factor to tame it
    double min_dist = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < c.nodes.size(); ++i)
        min_dist = std::min(min_dist, sets.s0.distance(c.nodes[i]));
    const double scale = std::abs(sets.s0.max()) + std::abs(sets.s0.min()) + 1.0;
    if (min_dist < 1e-12 * scale)
        throw ValidationError("bound_quadform: S0 touches the contour (use a split S0)");

    const auto integrand = [&](Complex z) {
        const double fz = std::abs(f(z));
        const double hz = hz_norm_sets(z, sets.s0);
        return sets.slack * sets.slack * fz * hz * std::exp(2.0 * log_h_product(w, z, sets));
    };
    const RealQuadResult q = contour_integral_arclength(c, integrand, quad);
    return QuadformBoundResult{q.value / kTwoPi * res_w_norm_2 * res_w_norm_2,
                               q.err_estimate / kTwoPi * res_w_norm_2 * res_w_norm_2};
}

QuadformReport quadform_curve(const SymmetricOperator& a, const Vector& b,
                              const ScalarFunction& f, const Contour& contour, double w,
                              const BoundCurveOptions& opts) {
    if (opts.k_max < 1)
        throw ValidationError("quadform_curve: k_max must be positive");
    if (opts.s0.empty())
        throw ValidationError("quadform_curve: S0 not provided");

    const LanczosFactorization fact = lanczos(a, b, std::min(opts.k_max, a.dim()), opts.lanczos);
    const Index steps = fact.steps();

    const Vector f_a_b = ground_truth(a, b, f);
    const double true_qf = b.dot(f_a_b);
    a.norm_estimate();

    QuadformReport report;
    report.f_name = f.name();
    report.contour_kind = contour.kind == ContourKind::Circle        ? "circle"
                          : contour.kind == ContourKind::PacMan      ? "pacman"
                          : contour.kind == ContourKind::DoubleCircle ? "double-circle"
                                                                      : "custom";
    report.w = w;
    report.policy = opts.policy;
    report.rows.resize(static_cast<std::size_t>(steps));

    run_rows(steps, opts.jobs, [&](Index idx) {
        const Index k = idx + 1;
        const Tridiagonal tk = fact.prefix_t(k);
        const Vector ritz = tridiag_eigvals(tk);
        const Contour ck = ensure_ritz_enclosed(contour, w, ritz);
        SpectrumSets sets = opts.policy == SetsPolicy::Apriori
                                ? SpectrumSets::apriori(opts.s0, k)
                                : SpectrumSets::aposteriori(opts.s0, ritz);
        if (opts.policy == SetsPolicy::Apriori && ck.kind == ContourKind::DoubleCircle &&
            opts.s0.intervals().size() >= 2)
            sets.slack = 4.0;
        for (Index i = 0; i < ritz.size(); ++i)
            if (!ck.encloses_point(ritz[i]))
                throw ValidationError("quadform_curve: contour does not enclose Ritz value " +
                                      std::to_string(ritz[i]) + " at k = " +
                                      std::to_string(k));

        const Vector iterate = shifted_iterate_prefix(fact, w, k);
        const double res_w = (b - (a.apply(iterate) - w * iterate)).norm();

        const QuadformBoundResult qb = bound_quadform(f, ck, w, sets, res_w, opts.quad);

        QuadformRow row;
        row.k = k;
        row.true_qf_err = std::abs(true_qf - quadform_prefix(fact, f, k));
        row.res_w_sq = res_w * res_w;
        row.integral_term = res_w > 0.0 ? qb.value / (res_w * res_w) : 0.0;
        row.bound_value = qb.value;
        row.quad_err_estimate = qb.quad_err;
        report.rows[static_cast<std::size_t>(idx)] = row;
    });

    return report;
}

RationalDiscretizationReport rational_discretization_report(const ScalarFunction& f,
                                                            const Contour& c, double w,
                                                            const SpectrumSets& sets,
                                                            Index node_count) {
    if (node_count < 16)
        throw ValidationError("rational_discretization_report: need at least 16 nodes");
    check_enclosure(c, sets);
    const auto integrand = [&](Complex z) {
        return std::abs(f(z)) * h_norm_sets(w, z, sets.s0) *
               std::exp(log_h_product(w, z, sets));
    };
    const Contour coarse = Contour::custom(c.segments, c.segment_component, node_count);
    const Contour fine = Contour::custom(c.segments, c.segment_component, 2 * node_count);
    RationalDiscretizationReport rep;
    rep.discrete_sum = fixed_node_sum(coarse, integrand) / kTwoPi;
    rep.refined_sum = fixed_node_sum(fine, integrand) / kTwoPi;
    rep.refinement_gap = std::abs(rep.refined_sum - rep.discrete_sum);
    rep.note = "fixed-node sum equals the rational-function bound on the same nodes; "
               "the refinement gap stands in for the rational approximation error";
    return rep;
}

double uniform_poly_bound(const ScalarFunction& f, double lo, double hi, Index k) {
    if (!(lo < hi))
        throw ValidationError("uniform_poly_bound: empty interval");
    if (k < 1)
        throw ValidationError("uniform_poly_bound: k must be positive");
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);

    // degree k-1 interpolant at k Chebyshev points, barycentric form
    Vector xs(k), fs(k), ws(k);
    for (Index j = 0; j < k; ++j) {
        const double theta = M_PI * (2.0 * static_cast<double>(j) + 1.0) /
                             (2.0 * static_cast<double>(k));
        xs[j] = mid + half * std::cos(theta);
        if (!f.defined_at(xs[j]))
            throw DomainError("uniform_poly_bound: f undefined at " + std::to_string(xs[j]));
        fs[j] = f(xs[j]);
        ws[j] = (j % 2 == 0 ? 1.0 : -1.0) * std::sin(theta);
    }

    const auto interp = [&](double x) {
        double num = 0.0, den = 0.0;
        for (Index j = 0; j < k; ++j) {
            const double diff = x - xs[j];
            if (std::abs(diff) < 1e-300)
                return fs[j];
            const double c = ws[j] / diff;
            num += c * fs[j];
            den += c;
        }
        return num / den;
    };

    double emax = 0.0;
    const Index grid = 4 * k;
    for (Index j = 0; j < grid; ++j) {
        const double theta = M_PI * (2.0 * static_cast<double>(j) + 1.0) /
                             (2.0 * static_cast<double>(grid));
        const double x = mid + half * std::cos(theta);
        if (!f.defined_at(x))
            throw DomainError("uniform_poly_bound: f undefined at " + std::to_string(x));
        emax = std::max(emax, std::abs(f(x) - interp(x)));
    }
    return 2.0 * emax;
}

DefaultSetup default_setup(const ScalarFunction& f, const SymmetricOperator& a,
                           std::optional<double> w_override, Index n_nodes) {
    const double lmin = a.lambda_min();
    const double lmax = a.lambda_max();
    const RealSet ia = RealSet::interval(lmin, lmax);

    switch (f.kind()) {
    case ScalarFunction::Kind::Sqrt: {
        const double w = w_override.value_or(0.0);
        return DefaultSetup{make_pacman(w, pacman_r_floor(lmin, lmax),
                                        std::numeric_limits<double>::infinity(), n_nodes),
                            w, Norm::a(), ia};
    }
    case ScalarFunction::Kind::Log: {
        if (!(lmin > 0.0))
            throw DomainError("default_setup: log needs a positive definite spectrum");
        const double w = w_override.value_or(0.0);
        return DefaultSetup{make_pacman(w, lmin / 100.0,
                                        std::numeric_limits<double>::infinity(), n_nodes),
                            w, Norm::two(), ia};
    }
    case ScalarFunction::Kind::Inverse:
    case ScalarFunction::Kind::InversePow: {
        if (!(lmin > 0.0))
            throw DomainError("default_setup: x^{-q} needs a positive definite spectrum");
        const double w = w_override.value_or(0.5 * lmin);
        if (!(w < lmin))
            throw ValidationError("default_setup: disk contour needs w < lambda_min");
        return DefaultSetup{make_circle(lmax, lmax - w, n_nodes), w, Norm::two(), ia};
    }
    case ScalarFunction::Kind::Step:
    case ScalarFunction::Kind::AbsShift:
    case ScalarFunction::Kind::StepOverX: {
        const double w = w_override.value_or(f.breakpoint());
        if (!(lmin < w && w < lmax))
            throw ValidationError("default_setup: breakpoint shift must lie inside the "
                                  "spectral range");
        // consecutive eigenvalues bracketing w, from the oracle
        const Vector& lambda = a.eigh().eigenvalues;
        double left = -std::numeric_limits<double>::infinity();
        double right = std::numeric_limits<double>::infinity();
        for (Index i = 0; i < lambda.size(); ++i) {
            if (lambda[i] < w)
                left = std::max(left, lambda[i]);
            else
                right = std::min(right, lambda[i]);
        }
        const double gap = std::min(w - left, right - w);
        if (!(gap > 0.0))
            throw SingularShiftError("default_setup: w equals an eigenvalue", w);
        const Norm norm = f.kind() == ScalarFunction::Kind::StepOverX ? Norm::a2shift(w)
                                                                      : Norm::two();
        return DefaultSetup{make_double_circle(w, lmin, lmax, gap / 100.0, n_nodes), w, norm,
                            split_interval_at(w, left, right, lmin, lmax)};
    }
    case ScalarFunction::Kind::Polynomial:
    case ScalarFunction::Kind::Rational: {
        const double spread = std::max(lmax - lmin, 1.0);
        const double w = w_override.value_or(lmin - 0.25 * spread);
        if (!(w < lmin))
            throw ValidationError("default_setup: disk contour needs w < lambda_min");
        return DefaultSetup{make_circle(lmax, lmax - w, n_nodes), w, Norm::two(), ia};
    }
    }
    throw ValidationError("default_setup: unknown function kind");
}

} // namespace lanfa
