#include <doctest.h>

#include <cmath>

#include "epsymp/moser.hpp"
#include "epsymp/properties.hpp"

using namespace epsymp;
using doctest::Approx;

namespace {

Matrix plane_scaling(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size());
    Matrix a = Matrix::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        a(2 * j, 2 * j) = a(2 * j + 1, 2 * j + 1) = c[static_cast<std::size_t>(j)];
    }
    return a;
}

}  // namespace

TEST_CASE("flow config") {
    FlowConfig cfg;
    CHECK(cfg.steps() == 1000);
    cfg.step_size = 0.02;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.step_size = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("Moser field matrix") {
    const SympContext ctx(2);
    Rng rng(1);
    const Matrix s = random_symplectic(2, rng);
    CHECK(moser_field_matrix(s, 0.3, ctx).cwiseAbs().maxCoeff() <= 1e-12);

    const double c1 = 0.9;
    const double c2 = 1.2;
    const Matrix phi = plane_scaling({c1, c2});
    for (double t : {0.0, 0.25, 1.0}) {
        const Matrix ct = moser_field_matrix(phi, t, ctx);
        const double k1 = -0.5 * (c1 * c1 - 1.0) / (1.0 + t * (c1 * c1 - 1.0));
        const double k2 = -0.5 * (c2 * c2 - 1.0) / (1.0 + t * (c2 * c2 - 1.0));
        Matrix want = Matrix::Zero(4, 4);
        want(0, 0) = want(1, 1) = k1;
        want(2, 2) = want(3, 3) = k2;
        CHECK((ct - want).norm() <= 1e-14);
    }
    const Matrix g = random_eps_symplectic(2, 0.2, 3);
    const Matrix m = g.transpose() * ctx.J0() * g - ctx.J0();
    CHECK((moser_field_matrix(g, 0.0, ctx) - (-0.5 * ctx.J0().inverse() * m)).norm() <= 1e-14);
}

TEST_CASE("symplectify identity and plane scaling") {
    const SympContext ctx(2);
    const FlowConfig cfg;
    const SymplectifyReport id = symplectify(Matrix::Identity(4, 4), 0.0, cfg, ctx);
    CHECK(id.psi == Matrix::Identity(4, 4));
    CHECK(id.residual_defect == 0.0);
    CHECK(id.pass);

    const std::vector<double> c{0.8, 1.15};
    const Matrix phi = plane_scaling(c);
    const double d = defect(phi, ctx);
    const SymplectifyReport r = symplectify(phi, d, cfg, ctx);
    const Matrix oracle = plane_scaling({1.0 / c[0], 1.0 / c[1]});
    CHECK((r.psi - oracle).cwiseAbs().maxCoeff() <= 1e-6);
    CHECK(defect(phi * r.psi, ctx) <= 1e-6);
    CHECK(r.pass);
}

TEST_CASE("symplectify random eps-symplectic maps") {
    const FlowConfig cfg;
    for (int n = 1; n <= 3; ++n) {
        const SympContext ctx(n);
        const Matrix phi = random_eps_symplectic(n, 0.05, 100 + n);
        const SymplectifyReport r = symplectify(phi, 0.05 + 1e-12, cfg, ctx);
        CHECK(r.residual_defect <= 1e-6);
        CHECK(r.displacement <= r.displacement_bound + 1e-6);
        CHECK(r.sigma_min >= r.rho - 1e-6);
        CHECK(r.sigma_max <= 1.0 / r.rho + 1e-6);
        // Operator norm against sampled unit vectors.
        Rng rng(n);
        for (int s = 0; s < 20; ++s) {
            Vector v = random_gaussian(2 * n, 1, rng);
            v.normalize();
            CHECK((r.psi * v - v).norm() <= r.displacement + 1e-12);
        }
    }
    const SympContext ctx(2);
    CHECK_THROWS_AS(symplectify(random_eps_symplectic(2, 0.2, 1), 0.1, cfg, ctx), std::domain_error);
    CHECK_THROWS_AS(symplectify(Matrix::Identity(4, 4), 0.8, cfg, ctx), std::domain_error);
}

TEST_CASE("RK4 convergence order") {
    CHECK(check_moser_convergence(19, 3).pass);
}

TEST_CASE("pointwise flow") {
    const SympContext ctx(1);
    FlowConfig cfg;
    cfg.step_size = 1e-2;
    std::vector<Vector> pts{Vector::Unit(2, 0) * 0.5, Vector::Unit(2, 1) * -0.8};
    pts.push_back(Vector::Ones(2) * 0.3);

    const PointwiseReport still = symplectify_polynomial_pointwise(linear_polymap(Matrix::Identity(2, 2)), pts, 0.0,
                                                                   cfg, ctx);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(still.trajectories[i].end == pts[i]);
    }

    const double c = 1.1;
    const SympContext ctx2(2);
    const Matrix phi = plane_scaling({c, 0.95});
    std::vector<Vector> pts4{Vector::Ones(4) * 0.5, Vector::Unit(4, 3)};
    const PointwiseReport sc =
        symplectify_polynomial_pointwise(linear_polymap(phi), pts4, defect(phi, ctx2), cfg, ctx2);
    const Matrix oracle = plane_scaling({1.0 / c, 1.0 / 0.95});
    for (std::size_t i = 0; i < pts4.size(); ++i) {
        CHECK((sc.trajectories[i].end - oracle * pts4[i]).norm() <= 1e-6);
    }
    CHECK(sc.pass);

    // Nonlinear: (x, y) -> (x + a x^2, y), beta = 2 a x dx ^ dy.
    const double a = 0.05;
    PolyMap bend{Poly::coordinate(2, 0) + Poly::coordinate(2, 0) * Poly::coordinate(2, 0) * to_rational(a),
                 Poly::coordinate(2, 1)};
    const PointwiseReport nl = symplectify_polynomial_pointwise(bend, pts, 0.15, cfg, ctx);
    CHECK(nl.beta.coefficient_degree() == 1);
    CHECK(nl.sigma.degree() == 1);
    CHECK(nl.pass);
    for (const auto& t : nl.trajectories) {
        CHECK(t.max_form_defect <= 0.15);
        CHECK(t.times.size() == 101);
    }
    CHECK(check_pointwise_agreement(20, 3).pass);
}

TEST_CASE("moser property checks at smoke scale") {
    CHECK(check_plane_scaling(17, 10).pass);
    CHECK(check_moser_random(18, 10, 0.05).pass);
}
