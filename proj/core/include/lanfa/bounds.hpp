#pragma once

#include "lanfa/contour.hpp"
#include "lanfa/fa.hpp"
#include "lanfa/norms.hpp"
#include "lanfa/problems.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lanfa {

enum class SetsPolicy { Apriori, Aposteriori };

struct IntegralTermResult {
    double value = 0.0;
    double quad_err = 0.0;
    double ray_extent = 0.0;
};

/// (1/2pi) oint |f(z)| (prod_i ||h_{w,z}||_{S_i}) ||h_{w,z}||_{S_0} |dz|.
/// Checks that the contour encloses S_0 and every S_i and that w is off the
/// contour.
IntegralTermResult integral_term_full(const ScalarFunction& f, const Contour& c, double w,
                                      const SpectrumSets& sets, QuadratureOptions quad = {});
double integral_term(const ScalarFunction& f, const Contour& c, double w,
                     const SpectrumSets& sets, QuadratureOptions quad = {});

struct BoundRow {
    Index k = 0;
    double true_err = 0.0;
    double err_w_norm = 0.0;
    double res_w_norm_2 = 0.0;
    double integral_term = 0.0;
    double bound_value = 0.0;
    std::optional<double> fp_term;
    double quad_err_estimate = 0.0;
};

struct BoundReport {
    std::string f_name;
    std::string contour_kind;
    double w = 0.0;
    std::string norm_name;
    SetsPolicy policy = SetsPolicy::Aposteriori;
    Precision precision = Precision::Fp64;
    std::vector<BoundRow> rows;

    /// Index of the first row with true_err > bound + quad_err, if any.
    std::optional<std::size_t> first_violation() const;
};

struct BoundCurveOptions {
    SetsPolicy policy = SetsPolicy::Aposteriori;
    Norm norm = Norm::two();
    Index k_max = 1;
    RealSet s0; // must contain the spectrum of A
    LanczosOptions lanczos;
    QuadratureOptions quad;
    bool fp_term = false;
    // replace the measured ||err_k(w)|| by cg_apriori_bound(kappa(A-wI), k) *
    // ||err_0(w)|| for a fully a priori curve (needs w < lambda_min)
    bool err_from_cg_bound = false;
    int jobs = 1;
};

/// Per-iteration bound report: Lanczos once to k_max, then each row couples
/// the integral term with the measured shifted-system error in the chosen
/// norm, next to the true error from the spectral oracle.
BoundReport bound_curve(const SymmetricOperator& a, const Vector& b, const ScalarFunction& f,
                        const Contour& contour, double w, const BoundCurveOptions& opts);

/// (lambda_max - w) max_{z on the circle} |f(z)| times the linear-system error.
double bound_disk(const ScalarFunction& f, double w, double lambda_max, double err_w_norm);

/// Relative-error bound c^{-q} kappa(A)^q kappa(A - wI) * err_ratio for
/// f = x^{-q} with w = c lambda_min.
double bound_xq_relative(double q, double c, double kappa_a, double kappa_shift,
                         double err_ratio);

/// Closed form lambda_max^{3/2} / (2 sqrt(pi)) * Gamma(k - 1/2) / Gamma(k+1).
double sqrt_pacman_constant(Index k, double lambda_max);

enum class Table1Function { Abs, Step, StepOverX };

/// The piecewise-function disk-bound constants: 2(a-l)^2 + 2(u-a)^2, (u-a),
/// (u-a)/a.
double table1_constant(Table1Function f, double a, double lambda_min, double lambda_max);

/// (1/2pi) sum over components of |Gamma_j| max_{nodes} |f|; the numeric form
/// of the per-component disk bound the table constants instantiate.
double pw_apriori_constant(const ScalarFunction& f, const Contour& c);

struct QuadformBoundResult {
    double value = 0.0;
    double quad_err = 0.0;
};

/// Quadratic-form bound: (1/2pi) oint |f(z)| (prod ||h_{w,z}||_{S_i}^2)
/// ||h_z||_{S_0} |dz| times ||res_k(w)||_2^2. S_0 must stay clear of the
/// contour (split it at w for crossing contours).
QuadformBoundResult bound_quadform(const ScalarFunction& f, const Contour& c, double w,
                                   const SpectrumSets& sets, double res_w_norm_2,
                                   QuadratureOptions quad = {});

struct FpCorrectionResult {
    double value = 0.0;
    double quad_err = 0.0;
};

/// Finite-precision correction term: (1/2pi) oint |f(z)| ||h_{w,z}||_{S_0}
/// ||f_k(w,z)||_2 |dz| with f_k(w,z) = ||b|| F_k ((T_k - zI)^{-1} -
/// det(h_{w,z}(T_k)) (T_k - wI)^{-1}) e_1. Stated for the (A-wI)^2-norm.
FpCorrectionResult fp_correction(const ScalarFunction& f, const Contour& c, double w,
                                 const RealSet& s0, const LanczosFactorization& fact,
                                 const Matrix& recurrence_f, QuadratureOptions quad = {});

struct RationalDiscretizationReport {
    double discrete_sum = 0.0;
    double refined_sum = 0.0;
    double refinement_gap = 0.0;
    std::string note;
};

/// The fixed-node discretization of the integral term (a rational-function
/// bound); the gap between refinement levels stands in for the rational
/// approximation error.
RationalDiscretizationReport rational_discretization_report(const ScalarFunction& f,
                                                            const Contour& c, double w,
                                                            const SpectrumSets& sets,
                                                            Index node_count);

/// 2 E_k(f) per unit ||b||, with E_k(f) the degree k-1 Chebyshev interpolation
/// error on a 4k-point grid: a near-best estimate, not a certified bound.
double uniform_poly_bound(const ScalarFunction& f, double lo, double hi, Index k);

struct QuadformRow {
    Index k = 0;
    double true_qf_err = 0.0;
    double res_w_sq = 0.0;
    double integral_term = 0.0;
    double bound_value = 0.0;
    double quad_err_estimate = 0.0;
};

struct QuadformReport {
    std::string f_name;
    std::string contour_kind;
    double w = 0.0;
    SetsPolicy policy = SetsPolicy::Aposteriori;
    std::vector<QuadformRow> rows;
    std::optional<std::size_t> first_violation() const;
};

/// Per-iteration quadratic-form report analogous to bound_curve.
QuadformReport quadform_curve(const SymmetricOperator& a, const Vector& b,
                              const ScalarFunction& f, const Contour& contour, double w,
                              const BoundCurveOptions& opts);

/// Default experiment setup per function kind: contour, shift and norm
/// matching the worked examples (pacman for sqrt/log, disk for x^{-q},
/// double-circle at the breakpoint for piecewise functions).
struct DefaultSetup {
    Contour contour;
    double w = 0.0;
    Norm norm;
    RealSet s0;
};
DefaultSetup default_setup(const ScalarFunction& f, const SymmetricOperator& a,
                           std::optional<double> w_override = std::nullopt,
                           Index n_nodes = 128);

} // namespace lanfa
