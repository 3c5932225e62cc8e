#include <doctest.h>

#include <cmath>
#include <numbers>

#include "epsymp/properties.hpp"
#include "epsymp/rigidity.hpp"
#include "epsymp/squeezing.hpp"

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

std::vector<Matrix> ellipsoid_batch(int n, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Matrix> out{Matrix::Identity(2 * n, 2 * n)};
    for (int i = 0; i < count; ++i) {
        out.push_back(random_ellipsoid(n, rng));
    }
    return out;
}

}  // namespace

TEST_CASE("rho") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(rho(0.0, n, true) == 1.0);
        CHECK(rho(0.0, n, false) == 1.0);
    }
    // (1 - 0.1 sqrt2)^2 = 1.02 - 0.2 sqrt2
    CHECK(rho(0.1, 2, false) == Approx(0.737157287525380990).epsilon(1e-15));
    CHECK(rho(1.0 / (2.0 * std::numbers::sqrt2), 3, true) == Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(rho_for_level(0.19, 2, true) == Approx(0.9).epsilon(1e-15));
    CHECK_THROWS_AS(rho(0.75, 1, true), std::domain_error);
    CHECK_THROWS_AS(rho(-0.1, 1, true), std::domain_error);
}

TEST_CASE("squeezing parameters") {
    const SympContext ctx(2);
    for (double eps : {0.0, 0.1, 0.3, 0.5, 0.8}) {
        const SqueezeParams sp = squeezing_params(Matrix::Identity(4, 4), eps, ctx);
        const double r = std::sqrt(1.0 - eps);
        CHECK(sp.rho == Approx(r));
        CHECK(sp.s_a == Approx(r));
        if (r > 0.5) {
            REQUIRE(sp.e_a.has_value());
            CHECK(*sp.e_a == Approx(r / (2.0 * r - 1.0)));
        } else {
            CHECK_FALSE(sp.e_a.has_value());
        }
    }
    Rng rng(1);
    const Matrix a = random_ellipsoid(2, rng);
    const SqueezeParams zero = squeezing_params(a, 0.0, ctx);
    CHECK(zero.s_a == 1.0);
    CHECK(*zero.e_a == 1.0);
    const SqueezeParams d = squeezing_params(plane_scaling({2, 3}), 0.1, ctx);
    CHECK(d.r_a == Approx(3.0));
    CHECK(d.norm_a_inv == Approx(0.5));
}

TEST_CASE("ellipsoid capacity") {
    const SympContext ctx(2);
    CHECK(ellipsoid_capacity(Matrix::Identity(4, 4), ctx) == Approx(std::numbers::pi));
    CHECK(ellipsoid_capacity(1.5 * Matrix::Identity(4, 4), ctx) == Approx(2.25 * std::numbers::pi));
    CHECK(ellipsoid_capacity(plane_scaling({2, 3}), ctx) == Approx(4.0 * std::numbers::pi));
}

TEST_CASE("certificates for symplectic maps hold with equality") {
    const SympContext ctx(2);
    Rng rng(2);
    const Matrix s = random_symplectic(2, rng);
    const auto es = ellipsoid_batch(2, 20, 3);
    const CertificateReport sq = check_eps_nonsqueezing(s, 0.0, es, ctx);
    const CertificateReport ex = check_eps_nonexpanding(s, 0.0, es, ctx);
    const CertificateReport cap = capacity_preservation_check(s, 0.0, es, ctx);
    CHECK(sq.pass);
    CHECK(ex.pass);
    CHECK(cap.pass);
    for (const auto& rec : sq.records) {
        CHECK(rec.big_r1 == Approx(rec.r1).epsilon(1e-9));
    }
}

TEST_CASE("certificates for eps-symplectic maps at sqrt2 eps") {
    const SympContext ctx(2);
    const Matrix phi = random_eps_symplectic(2, 0.05, 17);
    const auto es = ellipsoid_batch(2, 50, 4);
    const double level = std::numbers::sqrt2 * 0.05;
    CHECK(check_eps_nonsqueezing(phi, level, es, ctx).pass);
    CHECK(check_eps_nonexpanding(phi, level, es, ctx).pass);
    CHECK(capacity_preservation_check(phi, level, es, ctx).pass);
}

TEST_CASE("certificate counterexamples") {
    const SympContext ctx(2);
    const auto es = ellipsoid_batch(2, 5, 5);
    const Matrix squash = plane_scaling({0.1, 1.0});
    const CertificateReport sq = check_eps_nonsqueezing(squash, 0.0, es, ctx);
    CHECK_FALSE(sq.pass);
    CHECK_FALSE(sq.records.front().pass);  // A = I: s_I = 1 > 0.1
    CHECK(sq.records.front().big_r1 == Approx(0.1));
    const CertificateReport cap = capacity_preservation_check(squash, 0.0, es, ctx);
    CHECK_FALSE(cap.pass);
    CHECK_FALSE(cap.records.front().pass);

    const double eps = 0.1;
    const double c = 1.1 / std::sqrt(1.0 - eps);  // beyond 1/rho
    const CertificateReport ex = check_eps_nonexpanding(c * Matrix::Identity(4, 4), eps, {}, ctx);
    CHECK_FALSE(ex.pass);
    REQUIRE(ex.ball_widths.size() == 3);
    CHECK(ex.ball_widths[1] == Approx(c));

    Matrix singular = Matrix::Identity(4, 4);
    singular(3, 3) = 0.0;
    const CertificateReport s = check_eps_nonsqueezing(singular, 0.5, es, ctx);
    CHECK(s.singular_phi);
    CHECK_FALSE(s.pass);
    CHECK_FALSE(check_eps_nonexpanding(singular, 0.5, es, ctx).pass);
}

TEST_CASE("non-expanding skips ellipsoids with undefined e_A") {
    const SympContext ctx(1);
    const std::vector<Matrix> es{Matrix::Identity(2, 2)};
    const CertificateReport r = check_eps_nonexpanding(Matrix::Identity(2, 2), 0.9, es, ctx);
    CHECK(r.skipped() == 1);
    CHECK_FALSE(r.records.front().eligible);
}

TEST_CASE("cubic constant z0") {
    const CubicRoot z = cubic_z0();
    CHECK(std::abs(z.bisection - z.closed_form) <= 1e-12);
    CHECK(z.bisection == Approx(0.8941074569749822847).epsilon(1e-15));
    CHECK(z.residual <= 1e-12);
    CHECK(rigidity_threshold() == Approx(0.2005718553817302).epsilon(1e-14));
}

TEST_CASE("c_rho") {
    CHECK(c_rho(1.0) == 1.0);
    CHECK(c_rho(0.9) == Approx(0.766553276174039754).epsilon(1e-12));
    CHECK(c_rho(0.95) == Approx(0.933007007569488175).epsilon(1e-12));
    CHECK(c_rho(0.99) == Approx(0.989473448327688206).epsilon(1e-12));
    double prev = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double r = 0.9 + 0.1 * i / 50.0;
        const double c = c_rho(r);
        CHECK(c > 2.0 / 3.0);
        CHECK(c <= 1.0);
        CHECK(std::abs(c * c * c - c * c + (1.0 - r) / (r * r * r)) <= 1e-12);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(c_rho(1.0 - 1e-9) > 0.999);
    CHECK_THROWS_AS(c_rho(0.85), std::domain_error);
    CHECK_THROWS_AS(c_rho(1.01), std::domain_error);
}

TEST_CASE("rigidity bound K") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(rigidity_bound(0.0, n) == 0.0);
        CHECK(rigidity_bound(0.01, n) < 1.0);
    }
    CHECK(rigidity_bound(0.01, 5) == Approx(0.321546689769800011).epsilon(1e-12));
    CHECK(rigidity_bound(0.1, 2) == Approx(0.790492477487057043).epsilon(1e-12));
    CHECK(rigidity_bound(0.05, 1) == Approx(0.347235781005819243).epsilon(1e-12));
    CHECK(rigidity_bound(0.15, 3) == Approx(1.454182969153086372).epsilon(1e-12));
    CHECK(rigidity_bound(1e-10, 2) < 1e-3);
    CHECK_THROWS_AS(rigidity_bound(0.21, 2), std::domain_error);
    CHECK(check_constants().pass);
}

TEST_CASE("certificate property check at smoke scale") {
    CHECK(check_certificates(15, 40, 20).pass);
}
