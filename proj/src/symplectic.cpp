#include "epsymp/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace epsymp {

SympContext::SympContext(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("half-dimension n must be at least 1");
    }
    j0_ = Matrix::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        j0_(2 * j + 1, 2 * j) = 1.0;   // J0 e_x = e_y
        j0_(2 * j, 2 * j + 1) = -1.0;  // J0 e_y = -e_x
    }
}

Matrix SympContext::interleaved_to_split() const {
    Matrix p = Matrix::Zero(dim(), dim());
    for (int j = 0; j < n_; ++j) {
        p(j, 2 * j) = 1.0;
        p(n_ + j, 2 * j + 1) = 1.0;
    }
    return p;
}

Matrix SympContext::to_split(const Matrix& a) const {
    const Matrix p = interleaved_to_split();
    return p * a * p.transpose();
}

Matrix SympContext::from_split(const Matrix& a) const {
    const Matrix p = interleaved_to_split();
    return p.transpose() * a * p;
}

void SympContext::check_square(const Matrix& a, std::string_view what) const {
    if (a.rows() != dim() || a.cols() != dim()) {
        throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(dim()) + "x" +
                                    std::to_string(dim()) + " matrix");
    }
}

SympContext context_for(const Matrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0 || a.rows() % 2 != 0) {
        throw std::invalid_argument("matrix must be square of positive even dimension");
    }
    return SympContext(static_cast<int>(a.rows() / 2));
}

double operator_norm(const Matrix& a) {
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

double min_singular_value(const Matrix& a) {
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

bool is_singular(const Matrix& a) {
    Eigen::JacobiSVD<Matrix> svd(a);
    const Vector& s = svd.singularValues();
    return s.size() == 0 || s(0) == 0.0 || s(s.size() - 1) <= kSingularTol * s(0);
}

TwoForm pullback_omega0(const Matrix& phi, const SympContext& ctx) {
    ctx.check_square(phi, "pullback_omega0");
    const Matrix m = phi.transpose() * ctx.J0() * phi;
    // Symmetrize away rounding so the skew check cannot trip.
    return TwoForm(0.5 * (m - m.transpose()));
}

namespace {

// ||omega||_2 for omega(v, w) = <M v, w>: each coefficient appears twice in M.
double form_norm(const Matrix& m) { return std::sqrt(0.5 * m.squaredNorm()); }

}  // namespace

double defect(const Matrix& phi, const SympContext& ctx) {
    ctx.check_square(phi, "defect");
    return form_norm(phi.transpose() * ctx.J0() * phi - ctx.J0());
}

double anti_defect(const Matrix& phi, const SympContext& ctx) {
    ctx.check_square(phi, "anti_defect");
    return form_norm(phi.transpose() * ctx.J0() * phi + ctx.J0());
}

std::vector<double> symplectic_spectrum(const Matrix& a, const SympContext& ctx) {
    ctx.check_square(a, "symplectic_spectrum");
    if (is_singular(a)) {
        throw std::domain_error("symplectic_spectrum: matrix is singular");
    }
    const StandardForm sf = standard_form(pullback_omega0(a, ctx));
    if (sf.pairs() != ctx.n()) {
        throw std::domain_error("symplectic_spectrum: A^T J0 A is degenerate");
    }
    std::vector<double> r;
    r.reserve(sf.lambda_sq.size());
    for (double l : sf.lambda_sq) {
        r.push_back(std::sqrt(l));
    }
    return r;
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::symplectic_like:
            return "symplectic-like";
        case Classification::anti_symplectic_like:
            return "anti-symplectic-like";
        case Classification::mixed:
            return "mixed";
        case Classification::singular:
            return "singular";
    }
    return "unknown";
}

LambdaMuReport lambda_mu_invariants(const Matrix& phi, const SympContext& ctx) {
    ctx.check_square(phi, "lambda_mu_invariants");
    LambdaMuReport report{{}, {}, {}, Classification::singular};
    if (is_singular(phi)) {
        return report;
    }
    const TwoForm omega0 = ctx.omega0();
    const StandardForm sf = standard_form(pullback_omega0(phi, ctx));
    if (sf.pairs() != ctx.n()) {
        return report;
    }
    bool all_pos = true;
    bool all_neg = true;
    for (int j = 0; j < sf.pairs(); ++j) {
        const double w = omega0(sf.u(j), sf.v(j));
        const int sign = (std::abs(w) <= 1e-12) ? 0 : (w > 0 ? 1 : -1);
        report.lambdas.push_back(std::sqrt(sf.lambda_sq[static_cast<std::size_t>(j)]));
        report.mus.push_back(std::sqrt(std::abs(w)));
        report.signs.push_back(sign);
        all_pos = all_pos && sign == 1;
        all_neg = all_neg && sign == -1;
    }
    report.classification = all_pos   ? Classification::symplectic_like
                            : all_neg ? Classification::anti_symplectic_like
                                      : Classification::mixed;
    return report;
}

DecompositionCheck defect_decomposition_check(const Matrix& phi, const SympContext& ctx) {
    ctx.check_square(phi, "defect_decomposition_check");
    if (is_singular(phi)) {
        throw std::domain_error("defect_decomposition_check: matrix is singular");
    }
    const StandardForm sf = standard_form(pullback_omega0(phi, ctx));
    const double d = defect(phi, ctx);
    // Per pair (l2 - w)^2 + 1 - w^2, with 1 -+ w = |J0 u -+ v|^2 / 2 for unit u, v
    // so that nothing cancels when Phi is nearly symplectic.
    const Matrix& j0 = ctx.J0();
    double rhs = ctx.n() - sf.pairs();
    for (int j = 0; j < sf.pairs(); ++j) {
        const Vector ju = j0 * sf.u(j);
        const double one_minus_w = 0.5 * (ju - sf.v(j)).squaredNorm();
        const double one_plus_w = 0.5 * (ju + sf.v(j)).squaredNorm();
        const double l2 = sf.lambda_sq[static_cast<std::size_t>(j)];
        const double gap = (l2 - 1.0) + one_minus_w;
        rhs += gap * gap + one_minus_w * one_plus_w;
    }
    const double lhs = d * d;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return {lhs, rhs, std::abs(lhs - rhs) / scale};
}

Matrix hyperplane_squeeze(const Vector& u, double bound, double radius, const SympContext& ctx) {
    const int dim = ctx.dim();
    if (u.size() != dim) {
        throw std::invalid_argument("hyperplane_squeeze: normal has wrong dimension");
    }
    const double un = u.norm();
    if (!(un > 0.0)) {
        throw std::invalid_argument("hyperplane_squeeze: zero normal vector");
    }
    if (!(bound > 0.0) || !(radius > 0.0)) {
        throw std::invalid_argument("hyperplane_squeeze: bound and radius must be positive");
    }
    const Matrix& j0 = ctx.J0();
    const Vector uhat = u / un;
    const Vector vhat = j0 * uhat;  // lies in the hyperplane, omega0(uhat, vhat) = 1
    const Vector v = bound * vhat;
    const Vector uu = (radius * radius / bound) * uhat;  // omega0(uu, v) = R^2

    Matrix basis(dim, dim);
    basis.col(0) = uu / radius;
    basis.col(1) = v / radius;

    std::vector<Vector> accepted{uhat, vhat};
    auto residual = [&](int i) {
        Vector w = Vector::Unit(dim, i);
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vector& q : accepted) {
                w -= q.dot(w) * q;
            }
        }
        return w;
    };
    // Complete with unitary pairs (w, J0 w), greedily taking the standard
    // basis vector that survives projection best.
    for (int next = 2; next < dim; next += 2) {
        int best = 0;
        double best_norm = -1.0;
        for (int i = 0; i < dim; ++i) {
            const double rn = residual(i).norm();
            if (rn > best_norm + 1e-12) {
                best = i;
                best_norm = rn;
            }
        }
        const Vector w = residual(best) / best_norm;
        const Vector jw = j0 * w;
        accepted.push_back(w);
        accepted.push_back(jw);
        basis.col(next) = w;
        basis.col(next + 1) = jw;
    }
    const Matrix psi = basis.inverse();
    if ((psi.transpose() * j0 * psi - j0).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::runtime_error("hyperplane_squeeze: constructed map is not symplectic");
    }
    return psi;
}

}  // namespace epsymp
