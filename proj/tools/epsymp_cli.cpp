// epsymp: command-line front end.
//
// Exit codes: 0 pass, 1 certified failure, 2 input error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epsymp/io.hpp"
#include "epsymp/moser.hpp"
#include "epsymp/properties.hpp"
#include "epsymp/rigidity.hpp"
#include "epsymp/squeezing.hpp"

using namespace epsymp;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string matrix_file;
    std::string polyform_file;
    std::string points_file;
    std::string out_file;
    std::string psi_file;
    std::string format = "json";
    std::string scale = "smoke";
    double eps = -1.0;
    double step = 1e-3;
    int n = 1;
    int trials = 50;
    std::uint64_t seed = kDefaultSeed;
    bool timing = false;
};

struct Outcome {
    Json report;
    std::string text;
    bool pass = true;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

Outcome cmd_analyze(const Options& o, const Matrix& phi) {
    const SympContext ctx = context_for(phi);
    Outcome out;
    std::ostringstream t;
    const bool singular = is_singular(phi);
    const double d = defect(phi, ctx);
    out.report["n"] = ctx.n();
    out.report["defect"] = d;
    out.report["anti_defect"] = anti_defect(phi, ctx);
    out.report["singular"] = singular;
    t << "n            " << ctx.n() << "\n"
      << "defect       " << fmt(d) << "\n"
      << "anti-defect  " << fmt(anti_defect(phi, ctx)) << "\n";
    if (o.eps >= 0.0) {
        out.report["eps"] = o.eps;
        out.report["eps_symplectic"] = d <= o.eps;
        t << "eps          " << fmt(o.eps) << (d <= o.eps ? " (eps-symplectic)" : " (not eps-symplectic)") << "\n";
    }
    const LambdaMuReport lm = lambda_mu_invariants(phi, ctx);
    out.report["invariants"] = to_json(lm);
    t << "classification " << to_string(lm.classification) << "\n";
    if (singular) {
        t << "matrix is singular\n";
    } else {
        t << "  j  lambda            mu                sigma\n";
        for (std::size_t j = 0; j < lm.lambdas.size(); ++j) {
            char line[96];
            std::snprintf(line, sizeof line, "%3zu  %-16.10g  %-16.10g  %+d\n", j + 1, lm.lambdas[j], lm.mus[j],
                          lm.signs[j]);
            t << line;
        }
        const DecompositionCheck dc = defect_decomposition_check(phi, ctx);
        out.report["decomposition"] = to_json(dc);
        t << "decomposition lhs " << fmt(dc.lhs) << " rhs " << fmt(dc.rhs) << " rel.err " << fmt(dc.rel_error)
          << "\n";
    }
    out.text = t.str();
    return out;
}

std::vector<Matrix> canonical_batch(int n) {
    std::vector<Matrix> out{Matrix::Identity(2 * n, 2 * n)};
    const double radii[] = {0.5, 1.0, 2.0};
    const int cells = n <= 4 ? static_cast<int>(std::pow(3, n)) : 3;
    for (int c = 0; c < cells; ++c) {
        Matrix a = Matrix::Zero(2 * n, 2 * n);
        int code = c;
        for (int j = 0; j < n; ++j) {
            const double r = n <= 4 ? radii[code % 3] : radii[c];
            code /= 3;
            a(2 * j, 2 * j) = a(2 * j + 1, 2 * j + 1) = r;
        }
        out.push_back(a);
    }
    return out;
}

Outcome cmd_certify(const Options& o, const Matrix& phi) {
    if (!(o.eps >= 0.0) || !(o.eps < 1.0 / std::numbers::sqrt2)) {
        throw InputError("--eps must lie in [0, 1/sqrt(2))");
    }
    if (o.trials < 0) {
        throw InputError("--trials must be nonnegative");
    }
    const SympContext ctx = context_for(phi);
    Rng rng(o.seed);
    std::vector<Matrix> es = canonical_batch(ctx.n());
    for (int i = 0; i < o.trials; ++i) {
        es.push_back(random_ellipsoid(ctx.n(), rng));
    }
    const CertificateReport sq = check_eps_nonsqueezing(phi, o.eps, es, ctx);
    const CertificateReport ex = check_eps_nonexpanding(phi, o.eps, es, ctx);
    const CertificateReport cap = capacity_preservation_check(phi, o.eps, es, ctx);
    Outcome out;
    out.report["eps"] = o.eps;
    out.report["ellipsoids"] = es.size();
    out.report["defect"] = defect(phi, ctx);
    out.report["nonsqueezing"] = to_json(sq);
    out.report["nonexpanding"] = to_json(ex);
    out.report["capacity"] = to_json(cap);
    out.pass = sq.pass && ex.pass && cap.pass;
    std::ostringstream t;
    t << "eps " << fmt(o.eps) << ", rho " << fmt(sq.rho) << ", " << es.size() << " ellipsoids\n";
    for (const CertificateReport* r : {&sq, &ex, &cap}) {
        std::size_t failed = 0;
        for (const auto& rec : r->records) {
            failed += rec.eligible && !rec.pass;
        }
        t << r->kind << ": " << (r->pass ? "pass" : "FAIL") << " (" << failed << " failed, " << r->skipped()
          << " skipped" << (r->singular_phi ? ", singular map" : "") << ")\n";
    }
    out.text = t.str();
    return out;
}

Outcome cmd_symplectify(const Options& o, const Matrix& phi) {
    const SympContext ctx = context_for(phi);
    FlowConfig cfg;
    cfg.step_size = o.step;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (!(o.eps >= 0.0) || !(o.eps < 1.0 / std::numbers::sqrt2)) {
        throw InputError("--eps must lie in [0, 1/sqrt(2))");
    }
    Outcome out;
    const double d = defect(phi, ctx);
    if (d > o.eps) {
        out.pass = false;
        out.report["eps"] = o.eps;
        out.report["input_defect"] = d;
        out.report["error"] = "defect of the input exceeds eps";
        out.text = "defect " + fmt(d) + " exceeds eps " + fmt(o.eps) + "\n";
        return out;
    }
    const SymplectifyReport r = symplectify(phi, o.eps, cfg, ctx);
    out.report = to_json(r);
    out.report["step"] = cfg.step_size;
    out.pass = r.pass;
    if (!o.psi_file.empty()) {
        write_file(o.psi_file, format_matrix(r.psi));
    }
    std::ostringstream t;
    t << "rho                " << fmt(r.rho) << "\n"
      << "input defect       " << fmt(r.input_defect) << "\n"
      << "residual defect    " << fmt(r.residual_defect) << (r.residual_pass ? "" : "  FAIL") << "\n"
      << "|psi - I|          " << fmt(r.displacement) << " <= " << fmt(r.displacement_bound)
      << (r.displacement_pass ? "" : "  FAIL") << "\n"
      << "singular values    [" << fmt(r.sigma_min) << ", " << fmt(r.sigma_max) << "] within [" << fmt(r.rho)
      << ", " << fmt(1.0 / r.rho) << "]" << (r.sandwich_pass ? "" : "  FAIL") << "\n";
    out.text = t.str();
    return out;
}

Outcome cmd_bounds(const Options& o) {
    const double top = rigidity_threshold();
    if (!(o.eps >= 0.0) || !(o.eps < top)) {
        throw InputError("--eps must lie in [0, 1 - z0^2)");
    }
    if (o.n < 1) {
        throw InputError("--n must be positive");
    }
    const SympContext ctx(o.n);
    const CubicRoot z = cubic_z0();
    const double level_rho = rho_for_level(o.eps, o.n, true);
    const SqueezeParams sp = squeezing_params(Matrix::Identity(ctx.dim(), ctx.dim()), o.eps, ctx);
    Outcome out;
    out.report = Json{{"eps", o.eps},
                      {"n", o.n},
                      {"rho_linear", rho(o.eps, o.n, true)},
                      {"rho_nonlinear", rho(o.eps, o.n, false)},
                      {"z0", z.bisection},
                      {"z0_closed_form", z.closed_form},
                      {"threshold", top},
                      {"rho_level", level_rho},
                      {"c_rho", c_rho(level_rho)},
                      {"s_I", sp.s_a},
                      {"e_I", sp.e_a ? Json(*sp.e_a) : Json(nullptr)},
                      {"K", rigidity_bound(o.eps, o.n)}};
    std::ostringstream t;
    for (const auto& [key, value] : out.report.items()) {
        t << key << std::string(16 - std::min<std::size_t>(15, key.size()), ' ') << value.dump() << "\n";
    }
    out.text = t.str();
    return out;
}

Outcome cmd_homotopy(const std::string& form_text, const std::string& points_text) {
    PolyForm f = [&] {
        try {
            return polyform_from_json(Json::parse(form_text));
        } catch (const Json::exception& e) {
            throw InputError(std::string("polyform JSON: ") + e.what());
        }
    }();
    if (f.degree() < 1 || f.degree() >= f.dim()) {
        throw InputError("homotopy needs 1 <= k < m");
    }
    Outcome out;
    const PolyForm hf = h(f);
    const bool identity = homotopy_identity_check(f);
    out.report["m"] = f.dim();
    out.report["k"] = f.degree();
    out.report["h"] = polyform_to_json(hf);
    out.report["identity_holds"] = identity;
    out.pass = identity;
    std::ostringstream t;
    t << "h(f) has " << hf.terms().size() << " terms; h d + d h = id: " << (identity ? "holds" : "FAILS") << "\n";
    if (!points_text.empty()) {
        const std::vector<Vector> pts = parse_points(points_text);
        double s = 0.0;
        for (const Vector& p : pts) {
            if (p.size() != f.dim()) {
                throw InputError("points must have dimension m");
            }
            s = std::max(s, p.norm());
        }
        const HBoundReport b = h_bound_check(f, pts, s);
        out.report["bounds"] = to_json(b);
        out.pass = out.pass && b.pass;
        t << "bound check at " << pts.size() << " points (s = " << fmt(s) << "): min margin " << fmt(b.min_margin)
          << (b.pass ? "" : "  FAIL") << "\n";
    }
    out.text = t.str();
    return out;
}

Outcome cmd_suite(const Options& o) {
    SuiteScale scale;
    if (o.scale == "smoke") {
        scale = SuiteScale::smoke;
    } else if (o.scale == "full") {
        scale = SuiteScale::full;
    } else {
        throw InputError("--scale must be smoke or full");
    }
    Outcome out;
    Json checks = Json::array();
    std::ostringstream t;
    for (const CheckResult& r : run_suite(o.seed, scale)) {
        checks.push_back(to_json(r));
        out.pass = out.pass && r.pass;
        t << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.trials << " trials, worst " << fmt(r.worst)
          << ")" << (r.detail.empty() ? "" : " " + r.detail) << "\n";
    }
    out.report["scale"] = o.scale;
    out.report["seed"] = o.seed;
    out.report["checks"] = std::move(checks);
    out.text = t.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantitative eps-symplectic linear algebra toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", o.out_file, "Write the JSON report to FILE instead of stdout");
    app.add_option("--seed", o.seed, "64-bit seed for all randomness");
    app.add_flag("--timing", o.timing, "Include wall time in the JSON report");

    auto* analyze = app.add_subcommand("analyze", "Defect, lambda/mu invariants and classification of a matrix");
    analyze->add_option("matrix", o.matrix_file, "Matrix file")->required();
    analyze->add_option("--eps", o.eps, "Optional eps to test against");

    auto* certify = app.add_subcommand("certify", "eps-non-squeezing, eps-non-expanding and capacity certificates");
    certify->add_option("matrix", o.matrix_file, "Matrix file")->required();
    certify->add_option("--eps", o.eps, "Level eps")->required();
    certify->add_option("--trials", o.trials, "Number of random ellipsoids");

    auto* symp = app.add_subcommand("symplectify", "Moser correction psi with Phi psi symplectic");
    symp->add_option("matrix", o.matrix_file, "Matrix file")->required();
    symp->add_option("--eps", o.eps, "Defect bound eps")->required();
    symp->add_option("--step", o.step, "RK4 step size in (0, 1e-2]");
    symp->add_option("--psi", o.psi_file, "Write psi in matrix text format");

    auto* bounds = app.add_subcommand("bounds", "rho, z0, c_rho, s_I, e_I and K(eps)");
    bounds->add_option("--eps", o.eps, "eps")->required();
    bounds->add_option("--n", o.n, "Half dimension");

    auto* homotopy = app.add_subcommand("homotopy", "Homotopy operator h on a polynomial form");
    homotopy->add_option("polyform", o.polyform_file, "PolyForm JSON file")->required();
    homotopy->add_option("--points", o.points_file, "Points for the norm-bound check");

    auto* suite = app.add_subcommand("suite", "Run the seeded property suites");
    suite->add_option("--scale", o.scale, "smoke or full");

    for (auto* sub : {analyze, certify, symp, bounds, homotopy, suite}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) {
        command += (i > 1 ? " " : "") + std::string(argv[i]);
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    // Digest covers the parameters and file contents, not file names or output paths.
    std::string inputs = app.get_subcommands().front()->get_name();
    inputs += Json{{"eps", o.eps}, {"n", o.n}, {"seed", o.seed}, {"trials", o.trials}, {"step", o.step},
                   {"scale", o.scale}}
                  .dump();
    try {
        if (!o.matrix_file.empty()) {
            const std::string text = read_file(o.matrix_file);
            inputs += '\0' + text;
            const Matrix phi = parse_matrix(text);
            if (*analyze) {
                out = cmd_analyze(o, phi);
            } else if (*certify) {
                out = cmd_certify(o, phi);
            } else {
                out = cmd_symplectify(o, phi);
            }
        } else if (*bounds) {
            out = cmd_bounds(o);
        } else if (*homotopy) {
            const std::string form = read_file(o.polyform_file);
            const std::string points = o.points_file.empty() ? std::string() : read_file(o.points_file);
            inputs += '\0' + form + '\0' + points;
            out = cmd_homotopy(form, points);
        } else {
            out = cmd_suite(o);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Json run{{"command", command},
             {"inputs_digest", digest(inputs)},
             {"seed", o.seed},
             {"report", std::move(out.report)},
             {"pass", out.pass}};
    if (o.timing) {
        run["wall_time_s"] = seconds;
    }
    const std::string json = run.dump(2) + "\n";

    try {
        if (o.format == "text") {
            std::cout << out.text << (out.pass ? "PASS" : "FAIL") << "\n";
        } else {
            std::cerr << out.text << (out.pass ? "PASS" : "FAIL") << " (" << fmt(seconds) << " s)\n";
        }
        if (!o.out_file.empty()) {
            write_file(o.out_file, json);
        } else if (o.format == "json") {
            std::cout << json;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return out.pass ? kExitPass : kExitFail;
}
