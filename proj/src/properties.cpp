#include "epsymp/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "epsymp/moser.hpp"
#include "epsymp/rigidity.hpp"

namespace epsymp {

Json to_json(const CheckResult& r) {
    Json j{{"name", r.name},   {"trials", r.trials},       {"failures", r.failures},
           {"worst", r.worst}, {"tolerance", r.tolerance}, {"pass", r.pass}};
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    return j;
}

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Rational fraction(int num, int den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Tracks the worst value of a quantity that must stay <= tolerance.
struct Tracker {
    CheckResult r;

    Tracker(std::string name, double tolerance) {
        r.name = std::move(name);
        r.tolerance = tolerance;
    }

    void observe(double value, bool ok) {
        ++r.trials;
        r.worst = std::max(r.worst, value);
        if (!ok || !std::isfinite(value)) {
            ++r.failures;
        }
    }
    void observe(double value) { observe(value, value <= r.tolerance); }

    CheckResult done() {
        r.pass = r.failures == 0;
        return r;
    }
};

Vector random_point_in_ball(int m, double radius, Rng& rng) {
    Vector g = random_gaussian(m, 1, rng);
    const double u = uniform(rng, 0.0, 1.0);
    return g / g.norm() * radius * std::pow(u, 1.0 / m);
}

double rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]) / std::abs(b[i]));
    }
    return worst;
}

}  // namespace

Matrix fixture_matrix(double eps, double big_k) {
    Matrix phi = Matrix::Identity(4, 4);
    phi(1, 2) = eps;
    phi(2, 2) = -1.0 / big_k;
    phi(3, 3) = -big_k;
    return phi;
}

PolyForm random_polyform(int m, int k, int max_degree, Rng& rng) {
    PolyForm f(m, k);
    const auto indices = all_multi_indices(m, k);
    const int terms = uniform_int(rng, 1, std::min<int>(3, static_cast<int>(indices.size())));
    for (int t = 0; t < terms; ++t) {
        const MultiIndex& index = indices[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(indices.size()) - 1))];
        Poly p(m);
        const int monos = uniform_int(rng, 1, 3);
        for (int q = 0; q < monos; ++q) {
            Poly::Exponent e(static_cast<std::size_t>(m), 0);
            const int degree = uniform_int(rng, 0, max_degree);
            for (int d = 0; d < degree; ++d) {
                ++e[static_cast<std::size_t>(uniform_int(rng, 0, m - 1))];
            }
            int num = 0;
            while (num == 0) {
                num = uniform_int(rng, -9, 9);
            }
            p = p + Poly::monomial(m, std::move(e), fraction(num, uniform_int(rng, 1, 9)));
        }
        f = f + PolyForm::term(index, p);
    }
    return f;
}

Covector random_covector(int m, int k, Rng& rng) {
    Covector::Terms terms;
    std::normal_distribution<double> gauss;
    for (const auto& index : all_multi_indices(m, k)) {
        const bool keep = uniform(rng, 0.0, 1.0) < 0.5;
        const double v = gauss(rng);
        if (keep) {
            terms.emplace(index, v);
        }
    }
    if (terms.empty()) {
        terms.emplace(all_multi_indices(m, k).front(), 1.0);
    }
    return Covector(m, k, std::move(terms));
}

// ---------------------------------------------------------------------------
// exterior-algebra

CheckResult check_comass_sandwich(std::uint64_t seed, int covectors, int comass_trials) {
    Rng rng(seed);
    Tracker t("comass sandwich", 1e-10);
    std::size_t bracket_failures = 0;
    for (int i = 0; i < covectors; ++i) {
        const int m = uniform_int(rng, 1, 8);
        const int k = uniform_int(rng, 1, std::min(4, m));
        const Covector c = random_covector(m, k, rng);
        const Interval s = comass(c, ComassMode::sandwich, comass_trials, rng());
        const double witness = comass_basis_witness(c, Matrix::Identity(m, m)).value;
        const double witness_rot = comass_basis_witness(c, random_orthogonal(m, rng)).value;
        const double root_c = std::sqrt(static_cast<double>(binomial(m, k)));
        // Each violation is measured as a positive excess.
        double excess = std::max({s.lo - s.hi, s.hi - root_c * witness, witness_rot - s.hi, witness - s.hi});
        if (k == 2 || k == 1 || k == m - 1 || k == m) {
            const Interval ex = comass(c, ComassMode::exact);
            excess = std::max({excess, s.lo - ex.hi, ex.hi - s.hi});
            if (ex.lo != ex.hi) {
                ++bracket_failures;
            }
        }
        t.observe(std::max(excess, 0.0));
    }
    t.r.failures += bracket_failures;
    return t.done();
}

CheckResult check_omega0_norms() {
    Tracker t("omega0 comass and norm2", 1e-10);
    for (int n = 1; n <= 5; ++n) {
        const Covector w = SympContext(n).omega0().to_covector();
        t.observe(std::abs(comass(w, ComassMode::exact).hi - 1.0));
        t.observe(std::abs(norm2(w) - std::sqrt(static_cast<double>(n))));
    }
    return t.done();
}

CheckResult check_exact_comass_extremes(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("exact comass for k = 1, m-1", 1e-12);
    for (int i = 0; i < trials; ++i) {
        const int m = uniform_int(rng, 2, 8);
        const int k = uniform_int(rng, 0, 1) == 0 ? 1 : m - 1;
        const Covector c = random_covector(m, k, rng);
        const double n2 = norm2(c);
        t.observe(std::abs(comass(c, ComassMode::exact).hi - n2) / n2);
    }
    return t.done();
}

CheckResult check_interior_bounds(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("interior multiplication bounds", 1e-12);
    for (int i = 0; i < trials; ++i) {
        const int m = uniform_int(rng, 2, 7);
        const int k = uniform_int(rng, 1, std::min(4, m));
        const Covector c = random_covector(m, k, rng);
        const Vector v = random_gaussian(m, 1, rng);
        const Covector iv = interior(v, c);
        const double bound = std::sqrt(static_cast<double>(k)) * v.norm() * norm2(c);
        double excess = norm2(iv) - bound;
        if (k >= 2) {
            // A lower bound on the comass of iota_v c never exceeds |v| times an upper bound on that of c.
            const Interval inner = comass(iv, ComassMode::sandwich, 200, rng());
            const Interval outer = comass(c, ComassMode::sandwich, 10, rng());
            excess = std::max(excess, inner.lo - v.norm() * outer.hi);
        }
        t.observe(std::max(excess, 0.0) / (1.0 + bound));
    }
    return t.done();
}

CheckResult check_pullback_functoriality(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("pullback functoriality", 1e-10);
    for (int i = 0; i < trials; ++i) {
        const int m = uniform_int(rng, 1, 6);
        const int k = uniform_int(rng, 1, std::min(4, m));
        const Covector c = random_covector(m, k, rng);
        const Matrix l1 = random_gaussian(m, m, rng);
        const Matrix l2 = random_gaussian(m, m, rng);
        const Covector a = pullback(l1, pullback(l2, c));
        const Covector b = pullback(l2 * l1, c);
        t.observe(norm2(a - b) / std::max(norm2(b), 1e-300));
    }
    return t.done();
}

CheckResult check_composition_bound(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("2-form pullback bound", 1e-12);
    for (int i = 0; i < trials; ++i) {
        const int m = uniform_int(rng, 2, 8);
        const Covector c = random_covector(m, 2, rng);
        const Matrix l = random_gaussian(m, m, rng);
        const double bound = std::pow(operator_norm(l), 2) * norm2(c);
        t.observe(std::max(0.0, norm2(pullback(l, c)) - bound) / bound);
    }
    return t.done();
}

// ---------------------------------------------------------------------------
// polyform-homotopy

namespace {

PolyForm draw_homotopy_form(Rng& rng) {
    const int m = uniform_int(rng, 2, 5);
    const int k = uniform_int(rng, 1, std::min(3, m - 1));
    return random_polyform(m, k, 4, rng);
}

}  // namespace

CheckResult check_homotopy_identity(std::uint64_t seed, int forms) {
    Rng rng(seed);
    Tracker t("homotopy identity h d + d h = id", 0.0);
    for (int i = 0; i < forms; ++i) {
        t.observe(0.0, homotopy_identity_check(draw_homotopy_form(rng)));
    }
    return t.done();
}

CheckResult check_homotopy_factorizations(std::uint64_t seed, int forms) {
    Rng rng(seed);
    Tracker t("iota alpha == alpha iota, degree shift", 0.0);
    for (int i = 0; i < forms; ++i) {
        const PolyForm f = draw_homotopy_form(rng);
        const PolyForm hf = h(f);
        bool ok = hf == h_alpha_after_iota(f) && hf.degree() == f.degree() - 1;
        if (!hf.is_zero()) {
            ok = ok && hf.coefficient_degree() == f.coefficient_degree() + 1;
        }
        t.observe(0.0, ok);
    }
    return t.done();
}

CheckResult check_homotopy_dilation(std::uint64_t seed, int forms) {
    Rng rng(seed);
    Tracker t("h commutes with dilation", 0.0);
    for (int i = 0; i < forms; ++i) {
        const PolyForm f = draw_homotopy_form(rng);
        const Rational r = fraction(uniform_int(rng, 1, 7), uniform_int(rng, 1, 7));
        t.observe(0.0, h(f.dilate(r)) == h(f).dilate(r));
    }
    return t.done();
}

CheckResult check_h_bound_constant(std::uint64_t seed, int forms, int points) {
    Rng rng(seed);
    Tracker t("|h2 beta(x)| <= |x|/sqrt2 |beta(x)|, margin", 0.0);
    const double s = 2.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < forms; ++i) {
        const int n = uniform_int(rng, 1, 4);
        const int m = 2 * n;
        PolyForm beta(m, 2);
        std::normal_distribution<double> gauss;
        for (const auto& index : all_multi_indices(m, 2)) {
            beta = beta + PolyForm::term(index, Poly::constant(m, to_rational(gauss(rng))));
        }
        std::vector<Vector> xs;
        for (int p = 0; p < points; ++p) {
            xs.push_back(random_point_in_ball(m, s, rng));
        }
        const HBoundReport rep = h_bound_check(beta, xs, s);
        for (const auto& pt : rep.points) {
            worst_margin = std::min(worst_margin, pt.margin_ray);
            t.observe(-pt.margin_ray, pt.margin_ray >= kBoundMarginTol);
        }
    }
    t.r.worst = -worst_margin;
    t.r.tolerance = -kBoundMarginTol;
    std::ostringstream os;
    os << "min margin " << worst_margin;
    t.r.detail = os.str();
    return t.done();
}

CheckResult check_h_bound_general(std::uint64_t seed, int forms, int points) {
    Rng rng(seed);
    Tracker t("general h bound, margin", -kBoundMarginTol);
    const double s = 1.5;
    for (int i = 0; i < forms; ++i) {
        const int m = uniform_int(rng, 2, 4);
        const int k = uniform_int(rng, 1, m - 1);
        const PolyForm f = random_polyform(m, k, 3, rng);
        std::vector<Vector> xs;
        for (int p = 0; p < points; ++p) {
            xs.push_back(random_point_in_ball(m, s, rng));
        }
        const HBoundReport rep = h_bound_check(f, xs, s);
        t.observe(-rep.min_margin, rep.pass);
    }
    return t.done();
}

// ---------------------------------------------------------------------------
// symplectic-linear

CheckResult check_fixture_defects() {
    Tracker t("fixture defects (eps 0.1, K 2)", 1e-12);
    const SympContext ctx(2);
    const Matrix phi = fixture_matrix(0.1, 2.0);
    t.observe(std::abs(defect(phi, ctx) - 0.1));
    t.observe(std::abs(defect(phi.transpose(), ctx) - 0.2));
    t.observe(std::abs(defect(phi.inverse(), ctx) - 0.2));
    return t.done();
}

CheckResult check_spectrum_invariance(std::uint64_t seed, int pairs) {
    Rng rng(seed);
    Tracker t("spectrum invariance (symplectic and anti-symplectic)", 1e-8);
    for (int i = 0; i < pairs; ++i) {
        const int n = uniform_int(rng, 1, 4);
        const SympContext ctx(n);
        const Matrix a = random_ellipsoid(n, rng);
        Matrix psi = random_symplectic(n, rng);
        const auto base = symplectic_spectrum(a, ctx);
        t.observe(rel_diff(symplectic_spectrum(psi * a, ctx), base));
        psi = psi * anti_symplectic_reflection(n);
        t.observe(rel_diff(symplectic_spectrum(psi * a, ctx), base));
    }
    return t.done();
}

CheckResult check_spectrum_scaling(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("spectrum scaling", 1e-10);
    for (int i = 0; i < trials; ++i) {
        const int n = uniform_int(rng, 1, 4);
        const SympContext ctx(n);
        const Matrix a = random_ellipsoid(n, rng);
        const double s = std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
        auto scaled = symplectic_spectrum(a, ctx);
        for (double& r : scaled) {
            r *= s;
        }
        t.observe(rel_diff(symplectic_spectrum(s * a, ctx), scaled));
    }
    return t.done();
}

CheckResult check_defect_decomposition(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("defect decomposition", 1e-8);
    for (int i = 0; i < trials; ++i) {
        const int n = uniform_int(rng, 1, 4);
        const SympContext ctx(n);
        const double eps = uniform(rng, 0.0, 0.7);
        Matrix phi = random_eps_symplectic(n, eps, rng());
        if (uniform_int(rng, 0, 1) == 1) {
            phi = phi * random_symplectic(n, rng);
        }
        t.observe(defect_decomposition_check(phi, ctx).rel_error);
    }
    return t.done();
}

CheckResult check_classification(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("classification consistency", 0.0);
    for (int i = 0; i < trials; ++i) {
        const int n = uniform_int(rng, 1, 4);
        const SympContext ctx(n);
        const Matrix phi = random_eps_symplectic(n, uniform(rng, 0.0, 0.3), rng());
        const bool a = lambda_mu_invariants(phi, ctx).classification == Classification::symplectic_like;
        const bool b = lambda_mu_invariants(phi * anti_symplectic_reflection(n), ctx).classification ==
                       Classification::anti_symplectic_like;
        t.observe(0.0, a && b);
    }
    return t.done();
}

CheckResult check_certificates(std::uint64_t seed, int matrices, int ellipsoids) {
    Rng rng(seed);
    Tracker t("eps-non-squeezing and eps-non-expanding at sqrt2 eps", 0.0);
    std::size_t records = 0;
    std::size_t skipped = 0;
    for (int i = 0; i < matrices; ++i) {
        const int n = uniform_int(rng, 1, 3);
        const SympContext ctx(n);
        const double eps = uniform(rng, 0.0, 0.2);
        const Matrix phi = random_eps_symplectic(n, eps, rng());
        std::vector<Matrix> es;
        for (int e = 0; e < ellipsoids; ++e) {
            es.push_back(random_ellipsoid(n, rng));
        }
        const double level = std::numbers::sqrt2 * eps;
        const CertificateReport sq = check_eps_nonsqueezing(phi, level, es, ctx);
        const CertificateReport ex = check_eps_nonexpanding(phi, level, es, ctx);
        records += sq.records.size() + ex.records.size();
        skipped += ex.skipped();
        t.observe(0.0, sq.pass && ex.pass);
    }
    std::ostringstream os;
    os << records << " ellipsoid records, " << skipped << " skipped (e_A undefined)";
    t.r.detail = os.str();
    return t.done();
}

CheckResult check_constants() {
    Tracker t("rigidity constants", 1e-12);
    const CubicRoot z = cubic_z0();
    t.observe(std::abs(z.bisection - z.closed_form));
    t.observe(std::abs(rigidity_threshold() - (1.0 - z.bisection * z.bisection)));
    t.observe(c_rho(1.0) == 1.0 ? 0.0 : 1.0);
    t.observe(rigidity_bound(0.0, 1) == 0.0 ? 0.0 : 1.0);
    const double top = rigidity_threshold();
    for (int n = 1; n <= 4; ++n) {
        double prev = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double eps = top * i / 100.0;
            const double k = rigidity_bound(eps, n);
            t.observe(std::max(0.0, prev - k));
            prev = k;
        }
    }
    std::ostringstream os;
    os.precision(16);
    os << "z0 " << z.bisection << ", 1 - z0^2 " << top;
    t.r.detail = os.str();
    return t.done();
}

CheckResult check_defect_limits(std::uint64_t seed, int sequences) {
    Rng rng(seed);
    Tracker t("defect of a limit <= liminf eps_k", 1e-8);
    const int terms = 60;
    for (int i = 0; i < sequences; ++i) {
        const int n = uniform_int(rng, 1, 3);
        const SympContext ctx(n);
        const int dim = ctx.dim();
        // Limit: symplectic, or eps*-symplectic with eps* in (0, 0.5).
        const double target = uniform_int(rng, 0, 1) == 0 ? 0.0 : uniform(rng, 0.0, 0.5);
        const Matrix phi = random_eps_symplectic(n, target, rng());
        Matrix dir = random_gaussian(dim, dim, rng);
        dir /= dir.norm();
        // Phi_k = Phi +- 2^-k N is eps_k-symplectic with eps_k = defect(Phi_k) + slack_k,
        // slack_k alternating between 0 and 1/k; liminf is read off the tail.
        double liminf = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= terms; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const Matrix phi_k = phi + sign * std::ldexp(1.0, -k) * dir;
            const double eps_k = defect(phi_k, ctx) + (k % 3 == 0 ? 1.0 / k : 0.0);
            if (k > 2 * terms / 3) {
                liminf = std::min(liminf, eps_k);
            }
        }
        t.observe(std::max(0.0, defect(phi, ctx) - liminf));
    }
    return t.done();
}

// ---------------------------------------------------------------------------
// moser-symplectify

CheckResult check_plane_scaling(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("plane scaling c_j gives psi = diag(1/c_j)", 1e-6);
    FlowConfig cfg;
    for (int i = 0; i < trials; ++i) {
        const int n = uniform_int(rng, 1, 3);
        const SympContext ctx(n);
        Matrix phi;
        Matrix oracle;
        double d = 1.0;
        while (d >= 0.7) {
            phi = Matrix::Identity(ctx.dim(), ctx.dim());
            oracle = phi;
            for (int j = 0; j < n; ++j) {
                const double c = uniform(rng, 0.8, 1.25);
                phi(2 * j, 2 * j) = phi(2 * j + 1, 2 * j + 1) = c;
                oracle(2 * j, 2 * j) = oracle(2 * j + 1, 2 * j + 1) = 1.0 / c;
            }
            d = defect(phi, ctx);
        }
        const SymplectifyReport rep = symplectify(phi, d, cfg, ctx);
        const double err = (rep.psi - oracle).cwiseAbs().maxCoeff();
        t.observe(std::max(err, defect(phi * rep.psi, ctx)));
    }
    return t.done();
}

CheckResult check_moser_random(std::uint64_t seed, int trials, double eps) {
    Rng rng(seed);
    Tracker t("symplectify residual, displacement, sandwich", 0.0);
    FlowConfig cfg;
    double worst_residual = 0.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < trials; ++i) {
        const int n = uniform_int(rng, 1, 3);
        const SympContext ctx(n);
        const Matrix phi = random_eps_symplectic(n, eps, rng());
        // The generator hits eps only to rounding.
        const SymplectifyReport rep = symplectify(phi, std::max(eps, defect(phi, ctx)), cfg, ctx);
        worst_residual = std::max(worst_residual, rep.residual_defect);
        worst_margin = std::min({worst_margin, rep.displacement_bound - rep.displacement, rep.sigma_min - rep.rho,
                                 1.0 / rep.rho - rep.sigma_max});
        t.observe(0.0, rep.pass);
    }
    std::ostringstream os;
    os << "max residual " << worst_residual << ", min bound margin " << worst_margin;
    t.r.detail = os.str();
    t.r.worst = worst_residual;
    t.r.tolerance = cfg.max_defect_tol;
    return t.done();
}

CheckResult check_moser_convergence(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("RK4 step-halving ratio within 16 +- 2", 2.0);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < trials; ++i) {
        const int n = uniform_int(rng, 1, 3);
        const SympContext ctx(n);
        // One plane scaled by c with 1 - c^2 in [0.5, 0.6], conjugated by unitaries;
        // spreading the defect over planes pushes the truncation error down to roundoff.
        Matrix d = Matrix::Identity(ctx.dim(), ctx.dim());
        d(0, 0) = d(1, 1) = std::sqrt(1.0 - uniform(rng, 0.5, 0.6));
        const Matrix phi = random_symplectic(n, rng) * d * random_symplectic(n, rng, 0.0);
        const Matrix p1 = integrate_moser_flow(phi, 1e-2, ctx);
        const Matrix p2 = integrate_moser_flow(phi, 5e-3, ctx);
        const Matrix p3 = integrate_moser_flow(phi, 2.5e-3, ctx);
        const double ratio = (p1 - p2).norm() / (p2 - p3).norm();
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        t.observe(std::abs(ratio - 16.0));
    }
    std::ostringstream os;
    os << "ratios in [" << lo << ", " << hi << "]";
    t.r.detail = os.str();
    return t.done();
}

CheckResult check_pointwise_agreement(std::uint64_t seed, int trials) {
    Rng rng(seed);
    Tracker t("pointwise flow matches matrix flow on linear maps", 1e-8);
    FlowConfig cfg;
    cfg.step_size = 1e-2;
    for (int i = 0; i < trials; ++i) {
        const int n = uniform_int(rng, 1, 2);
        const SympContext ctx(n);
        const double eps = uniform(rng, 0.01, 0.2);
        const Matrix phi = random_eps_symplectic(n, eps, rng());
        const Matrix psi = integrate_moser_flow(phi, cfg.step_size, ctx);
        std::vector<Vector> xs;
        for (int p = 0; p < 3; ++p) {
            xs.push_back(random_point_in_ball(ctx.dim(), 1.0, rng));
        }
        const PointwiseReport rep = symplectify_polynomial_pointwise(linear_polymap(phi), xs, eps, cfg, ctx);
        for (std::size_t p = 0; p < xs.size(); ++p) {
            const double err = (rep.trajectories[p].end - psi * xs[p]).norm();
            t.observe(err, err <= 1e-8 && rep.trajectories[p].pass);
        }
    }
    return t.done();
}

std::vector<CheckResult> run_suite(std::uint64_t seed, SuiteScale scale) {
    const bool full = scale == SuiteScale::full;
    // Each check gets its own stream so that scale changes do not shift the others.
    auto sub = [seed](std::uint64_t tag) { return seed ^ (0x9e3779b97f4a7c15ULL * tag); };
    std::vector<CheckResult> out;
    // A throwing check is recorded as a failure and the rest still run.
    auto run = [&out](const char* name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            CheckResult r;
            r.name = name;
            r.failures = 1;
            r.detail = std::string("threw: ") + e.what();
            r.pass = false;
            out.push_back(std::move(r));
        }
    };
    run("fixture_defects", [&] { return check_fixture_defects(); });
    run("comass_sandwich", [&] { return check_comass_sandwich(sub(1), full ? 10000 : 500, full ? 200 : 100); });
    run("omega0_norms", [&] { return check_omega0_norms(); });
    run("exact_comass_extremes", [&] { return check_exact_comass_extremes(sub(2), full ? 1000 : 100); });
    run("interior_bounds", [&] { return check_interior_bounds(sub(3), full ? 1000 : 100); });
    run("pullback_functoriality", [&] { return check_pullback_functoriality(sub(4), full ? 1000 : 100); });
    run("composition_bound", [&] { return check_composition_bound(sub(5), full ? 1000 : 100); });
    run("homotopy_identity", [&] { return check_homotopy_identity(sub(6), full ? 500 : 50); });
    run("homotopy_factorizations", [&] { return check_homotopy_factorizations(sub(7), full ? 200 : 30); });
    run("homotopy_dilation", [&] { return check_homotopy_dilation(sub(8), full ? 200 : 30); });
    run("h_bound_constant", [&] { return check_h_bound_constant(sub(9), full ? 100 : 20, full ? 100 : 20); });
    run("h_bound_general", [&] { return check_h_bound_general(sub(10), full ? 50 : 10, 10); });
    run("spectrum_invariance", [&] { return check_spectrum_invariance(sub(11), full ? 1000 : 100); });
    run("spectrum_scaling", [&] { return check_spectrum_scaling(sub(12), full ? 1000 : 100); });
    run("defect_decomposition", [&] { return check_defect_decomposition(sub(13), full ? 1000 : 100); });
    run("classification", [&] { return check_classification(sub(14), full ? 500 : 50); });
    run("certificates", [&] { return check_certificates(sub(15), full ? 500 : 50, 50); });
    run("constants", [&] { return check_constants(); });
    run("defect_limits", [&] { return check_defect_limits(sub(16), full ? 100 : 20); });
    run("plane_scaling", [&] { return check_plane_scaling(sub(17), full ? 50 : 10); });
    run("moser_random", [&] { return check_moser_random(sub(18), full ? 100 : 20, 0.05); });
    run("moser_convergence", [&] { return check_moser_convergence(sub(19), full ? 10 : 3); });
    run("pointwise_agreement", [&] { return check_pointwise_agreement(sub(20), full ? 10 : 3); });
    return out;
}

}  // namespace epsymp
