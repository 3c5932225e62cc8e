#include <doctest.h>

#include <cmath>

#include "epsymp/properties.hpp"
#include "epsymp/random.hpp"
#include "epsymp/symplectic.hpp"

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

// Independent oracle: moduli of the eigenvalues of A^T J0 A, each listed once.
std::vector<double> spectrum_oracle(const Matrix& a, const SympContext& ctx) {
    const Matrix m = a.transpose() * ctx.J0() * a;
    Eigen::EigenSolver<Matrix> es(m);
    std::vector<double> mods;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        if (es.eigenvalues()(i).imag() > 0) {
            mods.push_back(std::sqrt(std::abs(es.eigenvalues()(i))));
        }
    }
    std::sort(mods.begin(), mods.end());
    return mods;
}

}  // namespace

TEST_CASE("J0 and interleaved coordinates") {
    const SympContext ctx(2);
    const Matrix& j = ctx.J0();
    CHECK(j(1, 0) == 1.0);
    CHECK(j(0, 1) == -1.0);
    CHECK((j * j + Matrix::Identity(4, 4)).norm() == 0.0);
    // omega0(e_x1, e_y1) = 1
    CHECK(ctx.omega0()(Vector::Unit(4, 0), Vector::Unit(4, 1)) == 1.0);
    Rng rng(1);
    const Matrix a = random_gaussian(4, 4, rng);
    CHECK((ctx.from_split(ctx.to_split(a)) - a).norm() == 0.0);
    Vector z(4);
    z << 1, 2, 3, 4;
    Vector split(4);
    split << 1, 3, 2, 4;
    CHECK((ctx.interleaved_to_split() * z - split).norm() == 0.0);
    CHECK_THROWS_AS(context_for(Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("two-form standard form") {
    const SympContext one(1);
    const StandardForm sf = standard_form(one.omega0());
    REQUIRE(sf.pairs() == 1);
    CHECK(sf.lambda_sq[0] == Approx(1.0));
    CHECK(std::abs(sf.u(0).dot(Vector::Unit(2, 0))) == Approx(1.0));
    CHECK(one.omega0()(sf.u(0), sf.v(0)) == Approx(1.0));

    Matrix m = Matrix::Zero(4, 4);
    m(2, 0) = 0.1;  // 0.1 dx1 ^ dx2 in the paper's (x1, y1, x2, y2) labels
    m(0, 2) = -0.1;
    const StandardForm e = standard_form(TwoForm(m));
    CHECK(e.rank() == 2);
    CHECK(e.lambda_sq[0] == Approx(0.1));

    Rng rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const int dim = 2 + trial % 7;
        const Matrix g = random_gaussian(dim, dim, rng);
        const Matrix skew = g - g.transpose();
        const StandardForm s = standard_form(TwoForm(skew));
        CHECK((s.reconstruct() - skew).norm() <= 1e-8 * skew.norm());
        CHECK(is_orthonormal(s.basis));
        CHECK(std::is_sorted(s.lambda_sq.begin(), s.lambda_sq.end()));
    }
    // Degenerate multiplicity: 2 (omega0 on R^6) has a triple eigenvalue pair.
    const StandardForm deg = standard_form(TwoForm(2.0 * SympContext(3).J0()));
    CHECK(deg.pairs() == 3);
    CHECK((deg.reconstruct() - 2.0 * SympContext(3).J0()).norm() <= 1e-12);
    CHECK_THROWS_AS(TwoForm(Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("defect of the 2x2-block fixture") {
    const SympContext ctx(2);
    const Matrix phi = fixture_matrix(0.1, 2.0);
    CHECK(defect(Matrix::Identity(4, 4), ctx) == 0.0);
    CHECK(std::abs(defect(phi, ctx) - 0.1) <= 1e-12);
    CHECK(std::abs(defect(phi.transpose(), ctx) - 0.2) <= 1e-12);
    CHECK(std::abs(defect(phi.inverse(), ctx) - 0.2) <= 1e-12);
    // (Phi^T)^* omega0 - omega0 = -K eps dy1 ^ dy2 lives on slots (2, 4).
    const Matrix mt = phi * ctx.J0() * phi.transpose() - ctx.J0();
    CHECK(mt(3, 1) == Approx(-0.2));
    CHECK(anti_defect(anti_symplectic_reflection(2), ctx) == Approx(0.0));
}

TEST_CASE("symplectic spectrum") {
    const SympContext ctx2(2);
    const auto id = symplectic_spectrum(Matrix::Identity(4, 4), ctx2);
    CHECK(id[0] == Approx(1.0));
    CHECK(id[1] == Approx(1.0));
    const auto d23 = symplectic_spectrum(plane_scaling({2, 3}), ctx2);
    CHECK(d23[0] == Approx(2.0));
    CHECK(d23[1] == Approx(3.0));
    const auto scaled = symplectic_spectrum(1.7 * Matrix::Identity(4, 4), ctx2);
    CHECK(scaled[0] == Approx(1.7));
    CHECK(scaled[1] == Approx(1.7));
    CHECK_THROWS_AS(symplectic_spectrum(plane_scaling({1, 0}), ctx2), std::domain_error);

    Rng rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 4;
        const SympContext ctx(n);
        const Matrix a = random_ellipsoid(n, rng);
        const auto got = symplectic_spectrum(a, ctx);
        const auto want = spectrum_oracle(a, ctx);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i] == Approx(want[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("lambda mu invariants and classification") {
    const SympContext ctx(2);
    Rng rng(6);
    const Matrix s = random_symplectic(2, rng);
    const LambdaMuReport r = lambda_mu_invariants(s, ctx);
    CHECK(r.classification == Classification::symplectic_like);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(r.lambdas[j] == Approx(1.0));
        CHECK(r.mus[j] == Approx(1.0));
        CHECK(r.signs[j] == 1);
    }
    Matrix swap = Matrix::Zero(4, 4);
    for (int j = 0; j < 2; ++j) {
        swap(2 * j, 2 * j + 1) = swap(2 * j + 1, 2 * j) = 1.0;
    }
    const LambdaMuReport a = lambda_mu_invariants(swap, ctx);
    CHECK(a.classification == Classification::anti_symplectic_like);
    CHECK(a.signs == std::vector<int>{-1, -1});

    const LambdaMuReport p = lambda_mu_invariants(plane_scaling({0.9, 1.2}), ctx);
    CHECK(p.lambdas[0] == Approx(0.9));
    CHECK(p.lambdas[1] == Approx(1.2));
    CHECK(p.mus[0] == Approx(1.0));
    CHECK(p.mus[1] == Approx(1.0));

    CHECK(lambda_mu_invariants(plane_scaling({1.0, 0.0}), ctx).classification == Classification::singular);
    CHECK(to_string(Classification::mixed) == "mixed");
    Matrix mixed = Matrix::Identity(4, 4);
    mixed(3, 3) = -1.0;
    CHECK(lambda_mu_invariants(mixed, ctx).classification == Classification::mixed);
}

TEST_CASE("defect decomposition") {
    const SympContext ctx(2);
    const DecompositionCheck id = defect_decomposition_check(Matrix::Identity(4, 4), ctx);
    CHECK(id.lhs == 0.0);
    CHECK(id.rhs == Approx(0.0));
    const DecompositionCheck fx = defect_decomposition_check(fixture_matrix(0.1, 2.0), ctx);
    CHECK(fx.lhs == Approx(0.01));
    CHECK(fx.rhs == Approx(0.01));
    CHECK(fx.rel_error <= 1e-8);
    CHECK_THROWS_AS(defect_decomposition_check(plane_scaling({1.0, 0.0}), ctx), std::domain_error);
}

TEST_CASE("hyperplane squeeze") {
    const SympContext ctx(3);
    Rng rng(7);
    for (double radius : {0.5, 1.0, 3.0}) {
        const Matrix psi = hyperplane_squeeze(Vector::Unit(6, 0), 1.0, radius, ctx);
        CHECK((psi.transpose() * ctx.J0() * psi - ctx.J0()).cwiseAbs().maxCoeff() <= 1e-9);
        for (int s = 0; s < 50; ++s) {
            Vector x = random_gaussian(6, 1, rng);
            x(0) = 0.0;
            x(1) = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
            const Vector y = psi * x;
            CHECK(std::hypot(y(0), y(1)) <= radius + 1e-12);
        }
        const Matrix a = random_ellipsoid(3, rng);
        const auto before = symplectic_spectrum(a, ctx);
        const auto after = symplectic_spectrum(psi * a, ctx);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(after[i] == Approx(before[i]).epsilon(1e-9));
        }
    }
    const Matrix unit = hyperplane_squeeze(Vector::Unit(6, 0), 1.0, 1.0, ctx);
    CHECK((unit.topLeftCorner(2, 2) - Matrix::Identity(2, 2)).norm() <= 1e-12);
    CHECK(unit.block(0, 2, 2, 4).norm() <= 1e-12);

    const Vector u = random_gaussian(6, 1, rng);
    const Matrix g = hyperplane_squeeze(u, 0.3, 0.8, ctx);
    CHECK((g.transpose() * ctx.J0() * g - ctx.J0()).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK_THROWS_AS(hyperplane_squeeze(Vector::Zero(6), 1.0, 1.0, ctx), std::invalid_argument);
}

TEST_CASE("random eps-symplectic generator") {
    for (int n = 1; n <= 3; ++n) {
        const SympContext ctx(n);
        CHECK(defect(random_eps_symplectic(n, 0.0, 1), ctx) <= 1e-12);
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            CHECK(std::abs(defect(random_eps_symplectic(n, 0.05, seed), ctx) - 0.05) <= 1e-9);
        }
        CHECK(random_eps_symplectic(n, 0.3, 42) == random_eps_symplectic(n, 0.3, 42));
    }
    CHECK_THROWS_AS(random_eps_symplectic(2, 0.75, 1), std::domain_error);
}

TEST_CASE("symplectic property checks at smoke scale") {
    CHECK(check_fixture_defects().pass);
    CHECK(check_spectrum_invariance(11, 100).pass);
    CHECK(check_spectrum_scaling(12, 100).pass);
    CHECK(check_defect_decomposition(13, 100).pass);
    CHECK(check_classification(14, 50).pass);
    CHECK(check_defect_limits(16, 20).pass);
}
