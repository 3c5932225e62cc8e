#include <doctest.h>

#include <cmath>

#include "epsymp/exterior.hpp"
#include "epsymp/properties.hpp"
#include "epsymp/symplectic.hpp"

using namespace epsymp;
using doctest::Approx;

namespace {

MultiIndex idx(std::vector<int> one_based, int m) {
    for (int& e : one_based) {
        --e;
    }
    return MultiIndex(std::move(one_based), m);
}

Covector dx(int i, int m) { return Covector::basis(m, idx({i}, m)); }

}  // namespace

TEST_CASE("multi-index validation") {
    CHECK_THROWS_AS(MultiIndex({1, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({2, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({0, 3}, 3), std::invalid_argument);
    CHECK(all_multi_indices(4, 2).size() == 6);
    CHECK(all_multi_indices(4, 2).front() == idx({1, 2}, 4));
    CHECK(all_multi_indices(4, 2).back() == idx({3, 4}, 4));
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("wedge products") {
    const int m = 3;
    const Covector a = wedge(dx(1, m), dx(2, m));
    CHECK(a.coeff(idx({1, 2}, m)) == 1.0);
    const Covector b = wedge(dx(2, m), dx(1, m));
    CHECK(b.coeff(idx({1, 2}, m)) == -1.0);
    const Covector c = wedge(dx(1, m) + dx(2, m), dx(2, m));
    CHECK(c.coeff(idx({1, 2}, m)) == 1.0);
    CHECK(c.terms().size() == 1);
    CHECK(wedge(dx(1, m), dx(1, m)).is_zero());
    // dx1 ^ (dx2 ^ dx3) == (dx1 ^ dx2) ^ dx3 == dx_{123}
    CHECK(wedge(dx(1, m), wedge(dx(2, m), dx(3, m))).coeff(idx({1, 2, 3}, m)) == 1.0);
    CHECK(wedge(dx(3, m), wedge(dx(1, m), dx(2, m))).coeff(idx({1, 2, 3}, m)) == 1.0);
    CHECK(wedge(dx(2, m), wedge(dx(1, m), dx(3, m))).coeff(idx({1, 2, 3}, m)) == -1.0);
}

TEST_CASE("evaluation on vectors is the determinant of minors") {
    const int m = 3;
    const Covector c = wedge(dx(1, m), dx(3, m)) * 2.0;
    Matrix v(3, 2);
    v << 1, 4, 2, 5, 3, 6;
    // 2 * det([[1, 4], [3, 6]]) = 2 * (6 - 12)
    CHECK(c.evaluate(v) == Approx(-12.0));
}

TEST_CASE("norm2") {
    CHECK(norm2(SympContext(2).omega0().to_covector()) == Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(norm2(Covector(3, 2)) == 0.0);
    const Covector c = Covector::basis(3, idx({1, 2}, 3), 3.0) + Covector::basis(3, idx({1, 3}, 3), 4.0);
    CHECK(norm2(c) == Approx(5.0).epsilon(1e-15));
}

TEST_CASE("comass") {
    for (int n = 1; n <= 5; ++n) {
        const Covector w = SympContext(n).omega0().to_covector();
        const Interval ex = comass(w, ComassMode::exact);
        CHECK(ex.lo == Approx(1.0).epsilon(1e-12));
        CHECK(ex.hi == Approx(1.0).epsilon(1e-12));
    }
    Rng rng(3);
    const Covector one = random_covector(6, 1, rng);
    CHECK(comass(one, ComassMode::exact).hi == Approx(norm2(one)).epsilon(1e-12));
    const Covector top = random_covector(6, 5, rng);
    CHECK(comass(top, ComassMode::exact).hi == Approx(norm2(top)).epsilon(1e-12));

    const int m = 4;
    const Covector c = Covector::basis(m, idx({1, 2}, m), 2.0) + Covector::basis(m, idx({3, 4}, m), 1.0);
    CHECK(comass(c, ComassMode::exact).hi == Approx(2.0).epsilon(1e-12));
    // Randomized search approaches max lambda^2 from below.
    const Interval s = comass(c, ComassMode::sandwich, 20000, 11);
    CHECK(s.lo <= 2.0 + 1e-12);
    CHECK(s.lo >= 1.9);
    CHECK(s.hi == Approx(std::sqrt(5.0)));

    CHECK_THROWS_AS(comass(random_covector(6, 3, rng), ComassMode::exact), std::invalid_argument);
}

TEST_CASE("comass basis witness") {
    const int m = 4;
    const ComassWitness w1 = comass_basis_witness(Covector::basis(m, idx({1, 2}, m)), Matrix::Identity(m, m));
    CHECK(w1.value == Approx(1.0));
    CHECK(w1.value >= 1.0 / std::sqrt(6.0));
    const Covector w0 = SympContext(2).omega0().to_covector();
    const ComassWitness w2 = comass_basis_witness(w0, Matrix::Identity(m, m));
    CHECK(w2.value == Approx(1.0));
    CHECK(w2.value >= norm2(w0) / std::sqrt(6.0));

    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int mm = 2 + trial % 6;
        const int k = 1 + trial % std::min(4, mm);
        const Covector c = random_covector(mm, k, rng);
        const Matrix q = random_orthogonal(mm, rng);
        const ComassWitness w = comass_basis_witness(c, q);
        CHECK(w.value >= norm2(c) / std::sqrt(static_cast<double>(binomial(mm, k))) - 1e-12);
        CHECK(c.evaluate(w.vectors) == Approx(w.value));
    }
    Matrix bad = Matrix::Identity(m, m);
    bad(0, 1) = 0.1;
    CHECK_THROWS_AS(comass_basis_witness(w0, bad), std::invalid_argument);
}

TEST_CASE("interior multiplication") {
    const int m = 4;
    const Covector w0 = SympContext(2).omega0().to_covector();
    const Covector i1 = interior(Vector::Unit(m, 0), w0);
    CHECK(i1.terms().size() == 1);
    CHECK(i1.coeff(idx({2}, m)) == 1.0);
    CHECK(interior(Vector::Unit(m, 1), Covector(m, 2)).is_zero());
    // iota_v c (w) == c(v, w)
    Rng rng(8);
    const Covector c = random_covector(5, 3, rng);
    const Vector v = random_gaussian(5, 1, rng);
    Matrix rest = random_gaussian(5, 2, rng);
    Matrix all(5, 3);
    all << v, rest;
    CHECK(interior(v, c).evaluate(rest) == Approx(c.evaluate(all)));
}

TEST_CASE("pullback") {
    Rng rng(9);
    const Covector c = random_covector(4, 2, rng);
    const Covector same = pullback(Matrix::Identity(4, 4), c);
    CHECK(norm2(same - c) == Approx(0.0));
    const Covector doubled = pullback(2.0 * Matrix::Identity(4, 4), c);
    CHECK(norm2(doubled - c * 4.0) <= 1e-14);

    const Matrix phi = fixture_matrix(0.1, 2.0);
    const Covector w0 = SympContext(2).omega0().to_covector();
    const Covector diff = pullback(phi, w0) - w0;
    CHECK(diff.terms().size() == 1);
    CHECK(diff.coeff(idx({1, 3}, 4)) == Approx(0.1).epsilon(1e-15));
}

TEST_CASE("metric norm factors") {
    const NormFactors a = metric_norm_bounds(1, 1, 3);
    CHECK(a.lower == 1.0);
    CHECK(a.upper == 1.0);
    const NormFactors b = metric_norm_bounds(4, 4, 2);
    CHECK(b.lower == Approx(0.25));
    CHECK(b.upper == Approx(4.0));
    const NormFactors c = metric_norm_bounds(2, 2, 1);
    CHECK(c.lower == Approx(1.0 / std::sqrt(2.0)));
    CHECK(c.upper == Approx(std::sqrt(2.0)));
}

TEST_CASE("exterior property checks at smoke scale") {
    CHECK(check_comass_sandwich(1, 300, 100).pass);
    CHECK(check_omega0_norms().pass);
    CHECK(check_exact_comass_extremes(2, 200).pass);
    CHECK(check_interior_bounds(3, 200).pass);
    CHECK(check_pullback_functoriality(4, 200).pass);
    CHECK(check_composition_bound(5, 200).pass);
}
