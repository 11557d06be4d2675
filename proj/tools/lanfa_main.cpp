// lanfa: Lanczos matrix-function approximation experiments.
//
// Subcommands:
//   run      per-iteration error bounds for f(A)b          -> CSV
//   quadform per-iteration bounds for b^T f(A) b           -> CSV
//   linsys   Lanczos/MINRES residual histories             -> CSV
//   gen      write a generated operator as Matrix Market
//
// Exit codes: 0 success, 2 config error, 3 bound violation, 4 numerical
// failure.

#include <CLI11.hpp>

#include "lanfa/bounds.hpp"
#include "lanfa/linear_systems.hpp"
#include "lanfa/matrix_market.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace lanfa;

namespace {

constexpr double kAuto = std::numeric_limits<double>::quiet_NaN();

bool is_auto(double v) { return std::isnan(v); }

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct RunConfig {
    // problem
    std::string problem = "uniform";
    long long n = 1000;
    long long m = 0; // wishart columns; 0 -> 2n
    double lmin = 1e-2;
    double lmax = 1e2;
    double lambda1 = 1.0;
    double lambdan = 0.001;
    double rho = 0.8;
    double kappa = 5.0;
    std::string path;
    unsigned long long seed = 0;
    std::string rhs = "equalproj"; // equalproj | gaussian
    // function
    std::string f = "sqrt";
    double q = 2.0;
    double a = kAuto;
    std::string coeffs = "0,1";
    std::string num = "1";
    std::string den = "1";
    // contour / bound
    std::string contour = "auto"; // auto | circle | pacman | double-circle
    double w = kAuto;
    double r = kAuto;
    double big_r = std::numeric_limits<double>::infinity();
    double eps = kAuto;
    std::string norm = "auto"; // auto | two | a | a2
    std::string sets = "aposteriori";
    std::string s0;
    long long kmax = 60;
    std::string precision = "fp64";
    bool no_reorth = false;
    bool fp_term = false;
    bool err_cg_bound = false;
    double quad_tol = 1e-8;
    long long jobs = 1;
    long long nodes = 128;
    std::string out = "out.csv";
};

struct ConfigField {
    std::string key;
    std::function<std::string(const RunConfig&)> get;
    std::function<void(RunConfig&, const std::string&)> set;
};

const std::vector<ConfigField>& config_fields() {
    static const std::vector<ConfigField> fields = [] {
        std::vector<ConfigField> v;
        const auto str = [&](const std::string& key, std::string RunConfig::*member) {
            v.push_back({key, [member](const RunConfig& c) { return c.*member; },
                         [member](RunConfig& c, const std::string& s) { c.*member = s; }});
        };
        const auto dbl = [&](const std::string& key, double RunConfig::*member) {
            v.push_back({key,
                         [member](const RunConfig& c) { return fmt_double(c.*member); },
                         [member](RunConfig& c, const std::string& s) { c.*member = std::stod(s); }});
        };
        const auto intg = [&](const std::string& key, long long RunConfig::*member) {
            v.push_back({key,
                         [member](const RunConfig& c) { return std::to_string(c.*member); },
                         [member](RunConfig& c, const std::string& s) { c.*member = std::stoll(s); }});
        };
        const auto boolean = [&](const std::string& key, bool RunConfig::*member) {
            v.push_back({key,
                         [member](const RunConfig& c) { return c.*member ? "true" : "false"; },
                         [member](RunConfig& c, const std::string& s) {
                             c.*member = (s == "true" || s == "1" || s == "yes");
                         }});
        };
        str("problem", &RunConfig::problem);
        intg("n", &RunConfig::n);
        intg("m", &RunConfig::m);
        dbl("lmin", &RunConfig::lmin);
        dbl("lmax", &RunConfig::lmax);
        dbl("lambda1", &RunConfig::lambda1);
        dbl("lambdan", &RunConfig::lambdan);
        dbl("rho", &RunConfig::rho);
        dbl("kappa", &RunConfig::kappa);
        str("path", &RunConfig::path);
        v.push_back({"seed",
                     [](const RunConfig& c) { return std::to_string(c.seed); },
                     [](RunConfig& c, const std::string& s) { c.seed = std::stoull(s); }});
        str("rhs", &RunConfig::rhs);
        str("f", &RunConfig::f);
        dbl("q", &RunConfig::q);
        dbl("a", &RunConfig::a);
        str("coeffs", &RunConfig::coeffs);
        str("num", &RunConfig::num);
        str("den", &RunConfig::den);
        str("contour", &RunConfig::contour);
        dbl("w", &RunConfig::w);
        dbl("r", &RunConfig::r);
        dbl("R", &RunConfig::big_r);
        dbl("eps", &RunConfig::eps);
        str("norm", &RunConfig::norm);
        str("sets", &RunConfig::sets);
        str("S0", &RunConfig::s0);
        intg("kmax", &RunConfig::kmax);
        str("precision", &RunConfig::precision);
        boolean("no-reorth", &RunConfig::no_reorth);
        boolean("fp-term", &RunConfig::fp_term);
        boolean("err-cg-bound", &RunConfig::err_cg_bound);
        dbl("quad-tol", &RunConfig::quad_tol);
        intg("jobs", &RunConfig::jobs);
        intg("nodes", &RunConfig::nodes);
        str("out", &RunConfig::out);
        return v;
    }();
    return fields;
}

void load_config_file(RunConfig& cfg, const std::string& path,
                      const std::map<std::string, bool>& given_on_cli) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r\"");
            const auto e = s.find_last_not_of(" \t\r\"");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            continue;
        const auto given = given_on_cli.find(key);
        if (given != given_on_cli.end() && given->second)
            continue; // explicit flags override the file
        bool known = false;
        for (const auto& field : config_fields())
            if (field.key == key) {
                try {
                    field.set(cfg, value);
                } catch (const std::exception&) {
                    throw ValidationError("config: bad value for '" + key + "' at line " +
                                          std::to_string(lineno));
                }
                known = true;
                break;
            }
        if (!known)
            throw ValidationError("config: unknown key '" + key + "' at line " +
                                  std::to_string(lineno));
    }
}

Vector parse_coeff_list(const std::string& text, const std::string& what) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty())
            vals.push_back(std::stod(tok));
    if (vals.empty())
        throw ValidationError("config: empty coefficient list for " + what);
    return Eigen::Map<Vector>(vals.data(), static_cast<Index>(vals.size()));
}

RealSet parse_s0(const std::string& text) {
    RealSet s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw ValidationError("config: S0 intervals must look like l:u");
        s.add_interval(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
    }
    if (s.empty())
        throw ValidationError("config: empty S0");
    return s;
}

ProblemSpec problem_spec(const RunConfig& cfg) {
    ProblemSpec spec;
    spec.generator = cfg.problem;
    spec.n = static_cast<Index>(cfg.n);
    spec.m = cfg.m > 0 ? static_cast<Index>(cfg.m) : static_cast<Index>(2 * cfg.n);
    spec.lmin = cfg.lmin;
    spec.lmax = cfg.lmax;
    spec.lambda1 = cfg.lambda1;
    spec.lambdan = cfg.lambdan;
    spec.rho = cfg.rho;
    spec.kappa = cfg.kappa;
    spec.path = cfg.path;
    spec.seed = cfg.seed;
    if (cfg.rhs == "equalproj")
        spec.rhs_policy = RhsPolicy::EqualEigenprojection;
    else if (cfg.rhs == "gaussian")
        spec.rhs_policy = RhsPolicy::RandomGaussianUnit;
    else
        throw ValidationError("config: rhs must be equalproj or gaussian");
    return spec;
}

ScalarFunction make_function(RunConfig& cfg, const SymmetricOperator& a) {
    const auto resolve_breakpoint = [&]() {
        if (!is_auto(cfg.a))
            return cfg.a;
        // midpoint of the spectral gap containing the 0.99 quantile of the
        // range; off-center to dodge symmetry-forced Ritz values
        const Vector& lambda = a.eigh().eigenvalues;
        const double target = lambda[0] + 0.99 * (lambda[lambda.size() - 1] - lambda[0]);
        Index i = 0;
        while (i + 1 < lambda.size() && lambda[i + 1] < target)
            ++i;
        return 0.5 * (lambda[i] + lambda[i + 1]);
    };
    if (cfg.f == "sqrt")
        return ScalarFunction::sqrt();
    if (cfg.f == "log")
        return ScalarFunction::log();
    if (cfg.f == "inv")
        return ScalarFunction::inverse();
    if (cfg.f == "xq")
        return ScalarFunction::inverse_pow(cfg.q);
    if (cfg.f == "step") {
        cfg.a = resolve_breakpoint();
        return ScalarFunction::step(cfg.a);
    }
    if (cfg.f == "abs") {
        cfg.a = resolve_breakpoint();
        return ScalarFunction::abs_shift(cfg.a);
    }
    if (cfg.f == "stepox") {
        cfg.a = resolve_breakpoint();
        return ScalarFunction::step_over_x(cfg.a);
    }
    if (cfg.f == "poly")
        return ScalarFunction::polynomial(parse_coeff_list(cfg.coeffs, "poly"));
    if (cfg.f == "rational")
        return ScalarFunction::rational(parse_coeff_list(cfg.num, "num"),
                                        parse_coeff_list(cfg.den, "den"));
    throw ValidationError("config: unknown function '" + cfg.f + "'");
}

// Resolve contour/shift/norm/S0, writing the effective values back into cfg so
// the emitted config round-trips to an identical run.
DefaultSetup resolve_setup(RunConfig& cfg, const ScalarFunction& f, const SymmetricOperator& a) {
    DefaultSetup setup =
        default_setup(f, a, is_auto(cfg.w) ? std::nullopt : std::optional<double>(cfg.w),
                      static_cast<Index>(cfg.nodes));

    const std::string auto_kind = setup.contour.kind == ContourKind::Circle ? "circle"
                                  : setup.contour.kind == ContourKind::PacMan
                                      ? "pacman"
                                      : "double-circle";
    if (cfg.contour == "auto")
        cfg.contour = auto_kind;
    cfg.w = setup.w;

    const double lmin = a.lambda_min(), lmax = a.lambda_max();
    if (cfg.contour == "circle") {
        if (!(cfg.w < lmax))
            throw ValidationError("config: circle contour needs w < lambda_max");
        setup.contour = make_circle(lmax, lmax - cfg.w, static_cast<Index>(cfg.nodes));
        cfg.r = lmax - cfg.w;
        cfg.eps = 0.0;
    } else if (cfg.contour == "pacman") {
        if (is_auto(cfg.r))
            cfg.r = setup.contour.kind == ContourKind::PacMan ? setup.contour.r
                                                              : pacman_r_floor(lmin, lmax);
        setup.contour = make_pacman(cfg.w, cfg.r, cfg.big_r, static_cast<Index>(cfg.nodes));
        cfg.eps = 0.0;
    } else if (cfg.contour == "double-circle") {
        if (is_auto(cfg.eps))
            cfg.eps = setup.contour.kind == ContourKind::DoubleCircle
                          ? setup.contour.eps
                          : std::min(cfg.w - lmin, lmax - cfg.w) / 100.0;
        setup.contour =
            make_double_circle(cfg.w, lmin, lmax, cfg.eps, static_cast<Index>(cfg.nodes));
        if (is_auto(cfg.r))
            cfg.r = 0.0;
    } else {
        throw ValidationError("config: unknown contour '" + cfg.contour + "'");
    }

    if (cfg.norm == "auto")
        cfg.norm = setup.norm.kind == NormKind::Two ? "two"
                   : setup.norm.kind == NormKind::A ? "a"
                                                    : "a2";
    if (cfg.norm == "two")
        setup.norm = Norm::two();
    else if (cfg.norm == "a")
        setup.norm = Norm::a();
    else if (cfg.norm == "a2")
        setup.norm = Norm::a2shift(cfg.w);
    else
        throw ValidationError("config: unknown norm '" + cfg.norm + "'");

    if (!cfg.s0.empty())
        setup.s0 = parse_s0(cfg.s0);
    else {
        std::ostringstream os;
        bool first = true;
        for (const auto& iv : setup.s0.intervals()) {
            if (!first)
                os << ",";
            os << fmt_double(iv.lo) << ":" << fmt_double(iv.hi);
            first = false;
        }
        cfg.s0 = os.str();
    }
    return setup;
}

BoundCurveOptions curve_options(const RunConfig& cfg, const DefaultSetup& setup) {
    BoundCurveOptions opts;
    if (cfg.sets == "apriori")
        opts.policy = SetsPolicy::Apriori;
    else if (cfg.sets == "aposteriori")
        opts.policy = SetsPolicy::Aposteriori;
    else
        throw ValidationError("config: sets must be apriori or aposteriori");
    opts.norm = setup.norm;
    opts.k_max = static_cast<Index>(cfg.kmax);
    opts.s0 = setup.s0;
    opts.lanczos.reorthogonalize = !cfg.no_reorth;
    if (cfg.precision == "fp64")
        opts.lanczos.precision = Precision::Fp64;
    else if (cfg.precision == "fp32")
        opts.lanczos.precision = Precision::Fp32Recurrence;
    else
        throw ValidationError("config: precision must be fp64 or fp32");
    opts.quad.rel_tol = cfg.quad_tol;
    opts.fp_term = cfg.fp_term;
    opts.err_from_cg_bound = cfg.err_cg_bound;
    opts.jobs = static_cast<int>(cfg.jobs);
    if (opts.jobs < 1)
        throw ValidationError("config: jobs must be positive");
    return opts;
}

void write_config_comments(std::ostream& out, const RunConfig& cfg, const std::string& command) {
    out << "# command = " << command << "\n";
    for (const auto& field : config_fields())
        out << "# " << field.key << " = " << field.get(cfg) << "\n";
}

std::string csv_num(double v) {
    if (std::isnan(v))
        return "";
    return fmt_double(v);
}

int cmd_run(RunConfig cfg, const std::string& command) {
    const ProblemSpec spec = problem_spec(cfg);
    const SymmetricOperator a = gen_problem(spec);
    const Vector b = gen_rhs(spec, a);
    const ScalarFunction f = make_function(cfg, a);
    const DefaultSetup setup = resolve_setup(cfg, f, a);
    const BoundCurveOptions opts = curve_options(cfg, setup);

    const BoundReport report = bound_curve(a, b, f, setup.contour, cfg.w, opts);

    std::ofstream out(cfg.out);
    if (!out)
        throw ValidationError("cannot write '" + cfg.out + "'");
    write_config_comments(out, cfg, command);
    out << "k,true_err,err_w,res_w,integral_term,bound,fp_term,quad_err\n";
    for (const auto& row : report.rows) {
        out << row.k << "," << csv_num(row.true_err) << "," << csv_num(row.err_w_norm) << ","
            << csv_num(row.res_w_norm_2) << "," << csv_num(row.integral_term) << ","
            << csv_num(row.bound_value) << ","
            << (row.fp_term ? csv_num(*row.fp_term) : std::string()) << ","
            << csv_num(row.quad_err_estimate) << "\n";
    }
    out.close();

    if (const auto bad = report.first_violation()) {
        std::cerr << "bound violation at row k=" << report.rows[*bad].k
                  << ": true_err=" << report.rows[*bad].true_err
                  << " > bound+quad_err=" << report.rows[*bad].bound_value +
                         report.rows[*bad].quad_err_estimate
                  << "\n";
        return 3;
    }
    std::cout << cfg.out << ": " << report.rows.size() << " rows\n";
    return 0;
}

int cmd_quadform(RunConfig cfg, const std::string& command) {
    const ProblemSpec spec = problem_spec(cfg);
    const SymmetricOperator a = gen_problem(spec);
    const Vector b = gen_rhs(spec, a);
    const ScalarFunction f = make_function(cfg, a);
    const DefaultSetup setup = resolve_setup(cfg, f, a);
    const BoundCurveOptions opts = curve_options(cfg, setup);

    const QuadformReport report = quadform_curve(a, b, f, setup.contour, cfg.w, opts);

    std::ofstream out(cfg.out);
    if (!out)
        throw ValidationError("cannot write '" + cfg.out + "'");
    write_config_comments(out, cfg, command);
    out << "k,true_qf_err,res_w_sq,integral_term,bound,quad_err\n";
    for (const auto& row : report.rows) {
        out << row.k << "," << csv_num(row.true_qf_err) << "," << csv_num(row.res_w_sq) << ","
            << csv_num(row.integral_term) << "," << csv_num(row.bound_value) << ","
            << csv_num(row.quad_err_estimate) << "\n";
    }
    out.close();

    if (const auto bad = report.first_violation()) {
        std::cerr << "bound violation at row k=" << report.rows[*bad].k << "\n";
        return 3;
    }
    std::cout << cfg.out << ": " << report.rows.size() << " rows\n";
    return 0;
}

int cmd_linsys(RunConfig cfg, const std::string& command) {
    const ProblemSpec spec = problem_spec(cfg);
    const SymmetricOperator a = gen_problem(spec);
    const Vector b = gen_rhs(spec, a);
    if (is_auto(cfg.w))
        cfg.w = 0.0;

    LanczosOptions lan;
    lan.reorthogonalize = !cfg.no_reorth;
    lan.precision = cfg.precision == "fp32" ? Precision::Fp32Recurrence : Precision::Fp64;
    const LanczosFactorization fact =
        lanczos(a, b, std::min<Index>(static_cast<Index>(cfg.kmax), a.dim()), lan);

    const auto minres = minres_residual_norms(fact, cfg.w);
    const auto galerkin = galerkin_from_minres(minres);
    const auto measured = lanczos_residual_norms(a, b, fact, cfg.w);

    const double lmin = a.lambda_min(), lmax = a.lambda_max();
    double kappa;
    if (lmin - cfg.w > 0.0)
        kappa = (lmax - cfg.w) / (lmin - cfg.w);
    else if (lmax - cfg.w < 0.0)
        kappa = (cfg.w - lmin) / (cfg.w - lmax);
    else {
        const double hi = std::max(std::abs(lmin - cfg.w), std::abs(lmax - cfg.w));
        double lo = hi;
        const Vector& lambda = a.eigh().eigenvalues;
        for (Index i = 0; i < lambda.size(); ++i)
            lo = std::min(lo, std::abs(lambda[i] - cfg.w));
        kappa = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    }

    std::ofstream out(cfg.out);
    if (!out)
        throw ValidationError("cannot write '" + cfg.out + "'");
    write_config_comments(out, cfg, command);
    out << "k,lanczos_res,minres_res,galerkin_pred,cg_bound\n";
    for (std::size_t k = 0; k < minres.size(); ++k) {
        const double cg = std::isfinite(kappa)
                              ? cg_apriori_bound(kappa, static_cast<Index>(k)) * b.norm()
                              : std::numeric_limits<double>::quiet_NaN();
        out << k << "," << csv_num(measured[k]) << "," << csv_num(minres[k]) << ","
            << csv_num(galerkin[k]) << "," << csv_num(cg) << "\n";
    }
    std::cout << cfg.out << ": " << minres.size() << " rows\n";
    return 0;
}

int cmd_gen(RunConfig cfg, const std::string&) {
    const ProblemSpec spec = problem_spec(cfg);
    const SymmetricOperator a = gen_problem(spec);
    write_matrix_market(a, cfg.out);
    std::cout << cfg.out << ": " << a.dim() << "x" << a.dim() << " matrix\n";
    return 0;
}

void add_flags(CLI::App* sub, RunConfig& cfg, std::string& config_path,
               std::map<std::string, bool>& given) {
    sub->add_option("--config", config_path, "key = value config file; flags override");
    const auto track = [&](CLI::Option* opt, const std::string& key) {
        opt->each([&given, key](const std::string&) { given[key] = true; });
    };
    track(sub->add_option("--problem", cfg.problem, "uniform|strakos|wishart|outlier|mm"),
          "problem");
    track(sub->add_option("--n", cfg.n, "problem dimension"), "n");
    track(sub->add_option("--m", cfg.m, "wishart columns (default 2n)"), "m");
    track(sub->add_option("--lmin", cfg.lmin, "uniform spectrum lower end"), "lmin");
    track(sub->add_option("--lmax", cfg.lmax, "uniform spectrum upper end"), "lmax");
    track(sub->add_option("--lambda1", cfg.lambda1, "strakos largest eigenvalue"), "lambda1");
    track(sub->add_option("--lambdan", cfg.lambdan, "strakos smallest eigenvalue"), "lambdan");
    track(sub->add_option("--rho", cfg.rho, "strakos clustering parameter"), "rho");
    track(sub->add_option("--kappa", cfg.kappa, "outlier isolated eigenvalue"), "kappa");
    track(sub->add_option("--path", cfg.path, "matrix market input path"), "path");
    track(sub->add_option("--seed", cfg.seed, "PRNG seed"), "seed");
    track(sub->add_option("--rhs", cfg.rhs, "equalproj|gaussian"), "rhs");
    track(sub->add_option("--f", cfg.f, "sqrt|log|inv|xq|step|abs|stepox|poly|rational"), "f");
    track(sub->add_option("--q", cfg.q, "exponent for f = x^{-q}"), "q");
    track(sub->add_option("--a", cfg.a, "breakpoint for piecewise f (default: gap midpoint)"),
          "a");
    track(sub->add_option("--coeffs", cfg.coeffs, "polynomial coefficients c0,c1,..."),
          "coeffs");
    track(sub->add_option("--num", cfg.num, "rational numerator coefficients"), "num");
    track(sub->add_option("--den", cfg.den, "rational denominator coefficients"), "den");
    track(sub->add_option("--contour", cfg.contour, "auto|circle|pacman|double-circle"),
          "contour");
    track(sub->add_option("--w", cfg.w, "shift of the reference linear system"), "w");
    track(sub->add_option("--r", cfg.r, "pacman inner radius (default: r floor)"), "r");
    track(sub->add_option("--R", cfg.big_r, "pacman outer radius (default: infinite limit)"),
          "R");
    track(sub->add_option("--eps", cfg.eps, "double-circle gap clearance"), "eps");
    track(sub->add_option("--norm", cfg.norm, "auto|two|a|a2"), "norm");
    track(sub->add_option("--sets", cfg.sets, "apriori|aposteriori"), "sets");
    track(sub->add_option("--S0", cfg.s0, "spectrum superset, l:u[,l:u]"), "S0");
    track(sub->add_option("--kmax", cfg.kmax, "largest iteration count"), "kmax");
    track(sub->add_option("--precision", cfg.precision, "fp64|fp32"), "precision");
    track(sub->add_flag("--no-reorth", cfg.no_reorth, "disable reorthogonalization"),
          "no-reorth");
    track(sub->add_flag("--fp-term", cfg.fp_term, "add the finite-precision correction"),
          "fp-term");
    track(sub->add_flag("--err-cg-bound", cfg.err_cg_bound,
                        "use the CG a priori bound instead of the measured err_k(w)"),
          "err-cg-bound");
    track(sub->add_option("--quad-tol", cfg.quad_tol, "quadrature relative tolerance"),
          "quad-tol");
    track(sub->add_option("--jobs", cfg.jobs, "parallel rows"), "jobs");
    track(sub->add_option("--nodes", cfg.nodes, "initial contour nodes"), "nodes");
    track(sub->add_option("--out", cfg.out, "output file"), "out");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lanczos matrix-function approximation error bounds"};
    app.require_subcommand(1);

    struct SubState {
        RunConfig cfg;
        std::string config_path;
        std::map<std::string, bool> given;
    };
    SubState run_state, quad_state, lin_state, gen_state;

    CLI::App* run = app.add_subcommand("run", "per-iteration bounds for f(A)b");
    add_flags(run, run_state.cfg, run_state.config_path, run_state.given);
    CLI::App* quad = app.add_subcommand("quadform", "per-iteration bounds for b^T f(A) b");
    add_flags(quad, quad_state.cfg, quad_state.config_path, quad_state.given);
    CLI::App* lin = app.add_subcommand("linsys", "Lanczos/MINRES residual histories");
    add_flags(lin, lin_state.cfg, lin_state.config_path, lin_state.given);
    CLI::App* gen = app.add_subcommand("gen", "write the generated operator as Matrix Market");
    add_flags(gen, gen_state.cfg, gen_state.config_path, gen_state.given);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string command;
    for (int i = 0; i < argc; ++i)
        command += std::string(i ? " " : "") + argv[i];

    try {
        SubState* state = nullptr;
        int (*fn)(RunConfig, const std::string&) = nullptr;
        if (run->parsed()) {
            state = &run_state;
            fn = cmd_run;
        } else if (quad->parsed()) {
            state = &quad_state;
            fn = cmd_quadform;
        } else if (lin->parsed()) {
            state = &lin_state;
            fn = cmd_linsys;
        } else {
            state = &gen_state;
            fn = cmd_gen;
        }
        if (!state->config_path.empty())
            load_config_file(state->cfg, state->config_path, state->given);
        return fn(state->cfg, command);
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
