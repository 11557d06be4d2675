// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include "lanfa/bounds.hpp"
#include "lanfa/hfun.hpp"
#include "lanfa/linear_systems.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

using namespace lanfa;

namespace {

struct Gate {
    int failures = 0;

    void report(int id, const std::string& name, bool pass, const std::string& detail) {
        std::printf("criterion %2d [%s]: %s%s%s\n", id, name.c_str(), pass ? "PASS" : "FAIL",
                    detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
        if (!pass)
            ++failures;
    }
};

struct NamedProblem {
    std::string name;
    SymmetricOperator a;
    Vector b;
};

std::vector<NamedProblem> bundled_problems() {
    std::vector<NamedProblem> problems;
    {
        SymmetricOperator a = gen_uniform(1000, 1e-2, 1e2);
        Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
        problems.push_back({"uniform", std::move(a), std::move(b)});
    }
    {
        SymmetricOperator a = gen_strakos(50, 1.0, 0.001, 0.8);
        Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
        problems.push_back({"strakos", std::move(a), std::move(b)});
    }
    {
        SymmetricOperator a = gen_wishart(300, 600, 1);
        Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
        problems.push_back({"wishart", std::move(a), std::move(b)});
    }
    {
        SymmetricOperator a = gen_outlier(200, 5.0);
        Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
        problems.push_back({"outlier", std::move(a), std::move(b)});
    }
    return problems;
}

// breakpoint for piecewise functions: midpoint of the spectral gap containing
// the 0.99 quantile of the range (same rule as the CLI default); an off-center
// target avoids the symmetry-forced Ritz value at the exact spectrum center
double default_breakpoint(const SymmetricOperator& a) {
    const Vector& lambda = a.eigh().eigenvalues;
    const double target = lambda[0] + 0.99 * (lambda[lambda.size() - 1] - lambda[0]);
    Index i = 0;
    while (i + 1 < lambda.size() && lambda[i + 1] < target)
        ++i;
    return 0.5 * (lambda[i] + lambda[i + 1]);
}

std::vector<std::pair<std::string, std::function<ScalarFunction(const SymmetricOperator&)>>>
bundled_functions() {
    return {
        {"sqrt", [](const SymmetricOperator&) { return ScalarFunction::sqrt(); }},
        {"log", [](const SymmetricOperator&) { return ScalarFunction::log(); }},
        {"x^-2", [](const SymmetricOperator&) { return ScalarFunction::inverse_pow(2.0); }},
        {"step",
         [](const SymmetricOperator& a) { return ScalarFunction::step(default_breakpoint(a)); }},
        {"abs",
         [](const SymmetricOperator& a) {
             return ScalarFunction::abs_shift(default_breakpoint(a));
         }},
        {"step/x",
         [](const SymmetricOperator& a) {
             return ScalarFunction::step_over_x(default_breakpoint(a));
         }},
    };
}

// f(A)b must exist and the default shifted system must be nonsingular
bool pair_is_defined(const ScalarFunction& f, const SymmetricOperator& a, std::string& why) {
    const Vector& lambda = a.eigh().eigenvalues;
    for (Index i = 0; i < lambda.size(); ++i)
        if (!f.defined_at(lambda[i])) {
            why = f.name() + " undefined at eigenvalue " + std::to_string(lambda[i]);
            return false;
        }
    try {
        const DefaultSetup setup = default_setup(f, a);
        for (Index i = 0; i < lambda.size(); ++i)
            if (std::abs(lambda[i] - setup.w) < 1e-13 * (std::abs(setup.w) + 1.0)) {
                why = "default shift w hits an eigenvalue";
                return false;
            }
    } catch (const Error& e) {
        why = e.what();
        return false;
    }
    return true;
}

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct PairReports {
    std::string key;
    BoundReport apriori;
    BoundReport aposteriori;
};

} // namespace

int main() {
    Gate gate;
    std::vector<PairReports> stash;

    // ---- criterion 1: upper-bound property over the bundled grid ----------
    {
        bool pass = true;
        std::ostringstream detail;
        int live_pairs = 0, skipped = 0;
        const auto problems = bundled_problems();
        const auto functions = bundled_functions();
        for (const auto& prob : problems) {
            for (const auto& [fname, fmake] : functions) {
                std::string why;
                ScalarFunction f = ScalarFunction::identity();
                try {
                    f = fmake(prob.a);
                } catch (const Error& e) {
                    why = e.what();
                }
                if (why.empty() && !pair_is_defined(f, prob.a, why)) {
                }
                if (!why.empty()) {
                    std::printf("  [1] %s/%s: SKIP (%s)\n", prob.name.c_str(), fname.c_str(),
                                why.c_str());
                    ++skipped;
                    continue;
                }
                const auto start = std::chrono::steady_clock::now();
                try {
                    const DefaultSetup setup = default_setup(f, prob.a);
                    BoundCurveOptions opts;
                    opts.k_max = 60;
                    opts.s0 = setup.s0;
                    opts.norm = setup.norm;
                    opts.jobs = 4;
                    // the perturbed-recurrence correction keeps the bound honest
                    // once curves reach the fp64 noise floor
                    opts.fp_term = true;

                    PairReports reports;
                    reports.key = prob.name + "/" + fname;
                    opts.policy = SetsPolicy::Apriori;
                    reports.apriori = bound_curve(prob.a, prob.b, f, setup.contour, setup.w, opts);
                    opts.policy = SetsPolicy::Aposteriori;
                    reports.aposteriori =
                        bound_curve(prob.a, prob.b, f, setup.contour, setup.w, opts);

                    const double secs =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
                    bool ok = secs < 60.0;
                    std::string local;
                    if (!ok)
                        local = "runtime " + std::to_string(secs) + "s";
                    for (const auto* rep : {&reports.apriori, &reports.aposteriori}) {
                        if (const auto bad = rep->first_violation()) {
                            ok = false;
                            const auto& row = rep->rows[*bad];
                            std::ostringstream os;
                            os << "violation at k=" << row.k << " true=" << row.true_err
                               << " bound=" << row.bound_value;
                            local = os.str();
                        }
                    }
                    std::printf("  [1] %s/%s: %s (%.1fs, %zu rows)\n", prob.name.c_str(),
                                fname.c_str(), ok ? "ok" : local.c_str(), secs,
                                reports.aposteriori.rows.size());
                    if (!ok) {
                        pass = false;
                        detail << prob.name << "/" << fname << ": " << local << "; ";
                    }
                    ++live_pairs;
                    stash.push_back(std::move(reports));
                } catch (const Error& e) {
                    pass = false;
                    detail << prob.name << "/" << fname << ": " << e.what() << "; ";
                    std::printf("  [1] %s/%s: ERROR %s\n", prob.name.c_str(), fname.c_str(),
                                e.what());
                }
            }
        }
        std::ostringstream d;
        d << live_pairs << " live pairs, " << skipped
          << " skipped (f undefined on the spectrum)"
          << (detail.str().empty() ? "" : "; " + detail.str());
        gate.report(1, "upper-bound property", pass, d.str());
    }

    // ---- criterion 2: sqrt pacman closed form ------------------------------
    {
        bool pass = true;
        std::ostringstream detail;
        const double lmin = 1e-2, lmax = 1e2;
        const Contour pac = make_pacman(0.0, pacman_r_floor(lmin, lmax),
                                        std::numeric_limits<double>::infinity());
        for (const Index k : {2, 5, 10, 20}) {
            const SpectrumSets sets = SpectrumSets::apriori(RealSet::interval(lmin, lmax), k);
            const double got = integral_term(ScalarFunction::sqrt(), pac, 0.0, sets);
            const double want = sqrt_pacman_constant(k, lmax);
            const double rel = std::abs(got - want) / want;
            detail << "k=" << k << " rel=" << std::scientific << rel << " ";
            if (rel > 0.01)
                pass = false;
        }
        const double scaled =
            std::pow(1000.0, 1.5) * std::exp(std::lgamma(999.5) - std::lgamma(1001.0));
        detail << "| k^1.5 ratio at k=1000: " << scaled;
        if (std::abs(scaled - 1.0) > 1e-2)
            pass = false;
        gate.report(2, "sqrt pacman closed form", pass, detail.str());
    }

    // ---- criterion 3: table constants ---------------------------------------
    {
        bool pass = true;
        std::ostringstream detail;
        const double lmin = 0.0, lmax = 4.0, a = 1.0;
        const struct {
            Table1Function tf;
            ScalarFunction f;
            double want;
        } cases[] = {
            {Table1Function::Abs, ScalarFunction::abs_shift(a), 20.0},
            {Table1Function::Step, ScalarFunction::step(a), 3.0},
            {Table1Function::StepOverX, ScalarFunction::step_over_x(a), 3.0},
        };
        for (const auto& cs : cases) {
            const double exact = table1_constant(cs.tf, a, lmin, lmax);
            if (std::abs(exact - cs.want) > 1e-12 * cs.want)
                pass = false;
            const double gap = std::min(a - lmin, lmax - a);
            const Contour dc = make_double_circle(a, lmin, lmax, gap / 1000.0, 1024);
            const double quad = pw_apriori_constant(cs.f, dc);
            const double rel = std::abs(quad - exact) / exact;
            detail << cs.f.name() << " exact=" << exact << " quad-rel=" << std::scientific
                   << rel << std::defaultfloat << " ";
            if (rel > 0.005)
                pass = false;
        }
        gate.report(3, "table constants", pass, detail.str());
    }

    // ---- criterion 4: identity suite ----------------------------------------
    {
        bool pass = true;
        std::ostringstream detail;
        double worst_res = 0.0, worst_err = 0.0, worst_galerkin = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const std::uint64_t seed = 4000 + static_cast<std::uint64_t>(trial);
            const Index n = 100, k = 30;
            Matrix m(n, n);
            std::uint64_t ctr = 0;
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j <= i; ++j) {
                    const double v = rng::gaussian(seed, ctr++);
                    m(i, j) = v;
                    m(j, i) = v;
                }
            const SymmetricOperator a = SymmetricOperator::dense(m);
            Vector b = rng::gaussian_vector(seed, n, /*stream=*/77);
            b.normalize();
            const LanczosFactorization fact = lanczos(a, b, k);

            // a barely-converging shift keeps err_k(w) well above the fp64
            // floor at k = 30, so the identity itself is what gets measured
            const double lmin = a.lambda_min(), lmax = a.lambda_max();
            const double w = lmin - 0.001 * (lmax - lmin);

            // Lemma route: res_k(w) == scalar * q_{k+1}
            const ShiftedSolveRecord at_w = shifted_err_res(fact, a, b, Complex(w, 0.0));
            const Complex scalar = lemma_residual_scalar(fact, Complex(w, 0.0));
            const ComplexVector res_pred = scalar * fact.q.col(k).cast<Complex>();
            worst_res = std::max(worst_res,
                                 (at_w.res - res_pred).norm() / std::max(at_w.res.norm(), 1e-300));

            // error relation between shifts; the determinant ratio comes from
            // the Ritz-product form in log space, which stays accurate when
            // the recurrence form would cancel catastrophically
            const Complex z(0.5 * (lmin + lmax), 0.4 * (lmax - lmin));
            const ShiftedSolveRecord at_z = shifted_err_res(fact, a, b, z);
            const Vector theta = tridiag_eigvals(fact.t);
            Complex log_det(0.0, 0.0);
            for (Index i = 0; i < theta.size(); ++i)
                log_det += std::log(Complex(theta[i] - w, 0.0)) -
                           std::log(Complex(theta[i], 0.0) - z);
            const Complex det = std::exp(log_det);
            ComplexMatrix az = a.to_dense().cast<Complex>();
            az.diagonal().array() -= z;
            const ComplexVector want =
                det * az.partialPivLu().solve((a.apply(at_w.err) - w * at_w.err).eval());
            worst_err = std::max(worst_err, (at_z.err - want).norm() / want.norm());

            // Galerkin/MINRES identity at an indefinite shift
            const double w_ind = 0.5 * (lmin + lmax);
            const auto minres = minres_residual_norms(fact, w_ind);
            const auto pred = galerkin_from_minres(minres);
            const auto meas = lanczos_residual_norms(a, b, fact, w_ind);
            for (std::size_t j = 1; j < pred.size(); ++j) {
                if (std::isnan(pred[j]) || std::isnan(meas[j]))
                    continue;
                if (minres[j] / minres[j - 1] > 1.0 - 1e-6)
                    continue; // stagnant step
                worst_galerkin =
                    std::max(worst_galerkin, std::abs(pred[j] - meas[j]) / meas[j]);
            }
        }
        detail << "lemma-route worst=" << std::scientific << worst_res
               << " err-relation worst=" << worst_err << " galerkin worst=" << worst_galerkin;
        if (worst_res > 1e-8 || worst_err > 1e-8 || worst_galerkin > 1e-6)
            pass = false;
        gate.report(4, "identity suite", pass, detail.str());
    }

    // ---- criterion 5: polynomial exactness ----------------------------------
    {
        bool pass = true;
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(trial);
            const Index n = 60, k = 10;
            Matrix m(n, n);
            std::uint64_t ctr = 0;
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j <= i; ++j) {
                    const double v = rng::gaussian(seed, ctr++);
                    m(i, j) = v;
                    m(j, i) = v;
                }
            const SymmetricOperator a = SymmetricOperator::dense(m);
            Vector b = rng::gaussian_vector(seed, n, 99);
            b.normalize();
            const LanczosFactorization fact = lanczos(a, b, k);
            const int deg = 1 + static_cast<int>(rng::hash64(seed, 7) % 8);
            Vector coeffs(deg + 1);
            for (int i = 0; i <= deg; ++i)
                coeffs[i] = rng::gaussian(seed, 300 + static_cast<std::uint64_t>(i));
            const ScalarFunction p = ScalarFunction::polynomial(coeffs);
            const Vector want = ground_truth(a, b, p);
            const Vector got = lanczos_fa(fact, p);
            worst = std::max(worst, (got - want).norm() / want.norm());
        }
        pass = worst <= 1e-8;
        std::ostringstream detail;
        detail << "worst relative error " << std::scientific << worst;
        gate.report(5, "polynomial exactness", pass, detail.str());
    }

    // ---- criterion 6: finite-precision regime -------------------------------
    {
        bool pass = true;
        std::ostringstream detail;
        const SymmetricOperator a = gen_strakos(50, 1.0, 0.001, 0.8);
        const double a_norm = a.norm_estimate();
        const ScalarFunction f = ScalarFunction::sqrt();
        const Contour pac = make_pacman(0.0, pacman_r_floor(0.001, 1.0),
                                        std::numeric_limits<double>::infinity());
        const RealSet ia = RealSet::interval(0.001, 1.0);
        int stagnation_ok = 0, bound_ok = 0, fnorm_ok = 0;
        for (int s = 0; s < 10; ++s) {
            const std::uint64_t seed = 6000 + static_cast<std::uint64_t>(s);
            Vector b = rng::gaussian_vector(seed, 50, 3);
            b.normalize();

            BoundCurveOptions fp_opts;
            fp_opts.policy = SetsPolicy::Aposteriori;
            fp_opts.norm = Norm::a2shift(0.0);
            fp_opts.k_max = 50;
            fp_opts.s0 = ia;
            fp_opts.fp_term = true;
            fp_opts.lanczos.reorthogonalize = false;
            fp_opts.lanczos.precision = Precision::Fp32Recurrence;
            fp_opts.jobs = 4;
            const BoundReport fp_rep = bound_curve(a, b, f, pac, 0.0, fp_opts);

            BoundCurveOptions exact_opts = fp_opts;
            exact_opts.fp_term = false;
            exact_opts.lanczos.reorthogonalize = true;
            exact_opts.lanczos.precision = Precision::Fp64;
            const BoundReport exact_rep = bound_curve(a, b, f, pac, 0.0, exact_opts);

            // (a) the fp32 error stagnates above the fp64 curve
            const double fp_final = fp_rep.rows.back().true_err;
            const double exact_final = exact_rep.rows.back().true_err;
            if (fp_final > 10.0 * exact_final)
                ++stagnation_ok;

            // (b) corrected bound holds everywhere
            if (const auto bad = fp_rep.first_violation()) {
                const auto& row = fp_rep.rows[*bad];
                std::printf("  [6] seed %d: violation k=%lld true=%.3e bound=%.3e fp=%.3e\n",
                            s, static_cast<long long>(row.k), row.true_err, row.bound_value,
                            row.fp_term.value_or(0.0));
            } else {
                ++bound_ok;
            }

            // (c) recurrence residual stays small through k = 40
            LanczosOptions lan;
            lan.reorthogonalize = false;
            lan.precision = Precision::Fp32Recurrence;
            const LanczosFactorization fact = lanczos(a, b, 40, lan);
            const auto [fmat, fnorm] = recurrence_residual(a, fact);
            (void)fmat;
            if (fnorm <= 1e-4 * a_norm)
                ++fnorm_ok;
        }
        detail << "stagnation " << stagnation_ok << "/10, corrected bound " << bound_ok
               << "/10, |F| small " << fnorm_ok << "/10";
        pass = stagnation_ok == 10 && bound_ok == 10 && fnorm_ok == 10;
        gate.report(6, "finite-precision regime", pass, detail.str());
    }

    // ---- criterion 7: quadratic-form rate -----------------------------------
    {
        const SymmetricOperator a = gen_uniform(1000, 1e-2, 1e2);
        const Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
        const ScalarFunction f = ScalarFunction::log();
        const LanczosFactorization fact = lanczos(a, b, 25);
        const Vector truth_vec = ground_truth(a, b, f);
        const double truth_qf = b.dot(truth_vec);
        std::vector<double> ks, vec_logs, qf_logs;
        for (Index k = 5; k <= 25; ++k) {
            const double vec_err = (truth_vec - lanczos_fa_prefix(fact, f, k)).norm();
            const double qf_err = std::abs(truth_qf - quadform_prefix(fact, f, k));
            ks.push_back(static_cast<double>(k));
            vec_logs.push_back(std::log10(vec_err));
            qf_logs.push_back(std::log10(qf_err));
        }
        const double slope_vec = ls_slope(ks, vec_logs);
        const double slope_qf = ls_slope(ks, qf_logs);
        std::ostringstream detail;
        detail << "vec slope " << slope_vec << ", quadform slope " << slope_qf << " (ratio "
               << slope_qf / slope_vec << ")";
        gate.report(7, "quadratic-form rate", slope_qf <= 1.5 * slope_vec && slope_vec < 0.0,
                    detail.str());
    }

    // ---- criterion 8: indefinite two-cluster iteration bound ----------------
    {
        const Index n = 400;
        Vector lambda(n);
        for (Index i = 0; i < n / 2; ++i)
            lambda[i] = -2.0 + static_cast<double>(i) / (n / 2 - 1);
        for (Index i = 0; i < n / 2; ++i)
            lambda[n / 2 + i] = 1.0 + static_cast<double>(i) / (n / 2 - 1);
        const SymmetricOperator a = SymmetricOperator::diagonal(lambda);
        const Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
        const auto bound = indefinite_iteration_bound(-2.0, -1.0, 1.0, 2.0, 0.01);
        const LanczosFactorization fact = lanczos(a, b, 23);
        const auto res = lanczos_residual_norms(a, b, fact, 0.0);
        Index reached_at = -1;
        for (std::size_t k = 1; k < res.size(); ++k)
            if (!std::isnan(res[k]) && res[k] / res[0] < 0.01) {
                reached_at = static_cast<Index>(k);
                break;
            }
        std::ostringstream detail;
        detail << "gamma=" << bound.gamma << " k_bound=" << bound.k_bound << " reached at k="
               << reached_at;
        gate.report(8, "two-cluster empirical bound",
                    reached_at > 0 && reached_at <= 23 && std::abs(bound.gamma - 2.0) < 1e-12 &&
                        std::abs(bound.k_bound - 22.58) < 0.01,
                    detail.str());
    }

    // ---- criterion 9: inequality grid ---------------------------------------
    {
        bool pass = true;
        for (int i = 0; i < 100 && pass; ++i) {
            const double x = 0.75 * static_cast<double>(i) / 99.0;
            for (int j = 1; j <= 100; ++j) {
                const double y = static_cast<double>(j) / 100.0;
                if (1.0 / std::sqrt(1.0 - std::pow(x, y)) > 2.0 / y * (1.0 + 1e-12)) {
                    pass = false;
                    break;
                }
            }
        }
        gate.report(9, "1/sqrt(1-x^y) <= 2/y grid", pass, "100x100 grid on [0,3/4]x(0,1]");
    }

    // ---- criterion 10: dominance and decoupling -----------------------------
    {
        bool pass = true;
        std::ostringstream detail;
        for (const auto& reports : stash) {
            const auto& ap = reports.apriori.rows;
            const auto& ao = reports.aposteriori.rows;
            for (std::size_t i = 0; i < std::min(ap.size(), ao.size()); ++i) {
                const double slack =
                    ap[i].quad_err_estimate + ao[i].quad_err_estimate + 1e-9 * ap[i].bound_value;
                if (ao[i].bound_value > ap[i].bound_value + slack) {
                    pass = false;
                    detail << reports.key << " k=" << ap[i].k << " apost " << ao[i].bound_value
                           << " > aprio " << ap[i].bound_value << "; ";
                }
            }
        }

        // decoupling: a priori integral terms identical across right-hand sides
        const SymmetricOperator a = gen_uniform(300, 1e-2, 1e2);
        const Vector b1 = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
        const Vector b2 = gen_rhs(RhsPolicy::RandomGaussianUnit, 5, a);
        const DefaultSetup setup = default_setup(ScalarFunction::sqrt(), a);
        BoundCurveOptions opts;
        opts.policy = SetsPolicy::Apriori;
        opts.norm = setup.norm;
        opts.k_max = 20;
        opts.s0 = setup.s0;
        const BoundReport r1 = bound_curve(a, b1, ScalarFunction::sqrt(), setup.contour, 0.0, opts);
        const BoundReport r2 = bound_curve(a, b2, ScalarFunction::sqrt(), setup.contour, 0.0, opts);
        for (std::size_t i = 0; i < r1.rows.size(); ++i)
            if (r1.rows[i].integral_term != r2.rows[i].integral_term) {
                pass = false;
                detail << "integral term differs across b at k=" << r1.rows[i].k << "; ";
            }
        gate.report(10, "dominance and decoupling", pass,
                    detail.str().empty() ? "holds on every bundled run" : detail.str());
    }

    std::printf("%s: %d criterion(s) failed\n", gate.failures == 0 ? "ALL PASS" : "FAILURES",
                gate.failures);
    return gate.failures == 0 ? 0 : 1;
}
