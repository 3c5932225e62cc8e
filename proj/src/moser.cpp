#include "epsymp/moser.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "epsymp/squeezing.hpp"

namespace epsymp {

void FlowConfig::validate() const {
    if (!(step_size > 0.0) || !(step_size <= 1e-2)) {
        throw std::invalid_argument("flow step size must lie in (0, 1e-2]");
    }
}

int FlowConfig::steps() const { return std::max(1, static_cast<int>(std::lround(1.0 / step_size))); }

namespace {

Matrix field_matrix(const Matrix& j0, const Matrix& m, double t) {
    const Matrix mt = j0 + t * m;
    Eigen::PartialPivLU<Matrix> lu(mt);
    const double det = std::abs(lu.determinant());
    if (!(det > 1e-300) || !std::isfinite(det)) {
        throw std::domain_error("Moser flow: omega_t is degenerate");
    }
    return -0.5 * lu.solve(m);
}

// Step count for a requested step size, rounding so the grid ends at t = 1.
int steps_for(double h) { return std::max(1, static_cast<int>(std::lround(1.0 / h))); }

Matrix integrate(const Matrix& phi, int steps, const SympContext& ctx) {
    const Matrix& j0 = ctx.J0();
    const Matrix m = phi.transpose() * j0 * phi - j0;
    const int dim = ctx.dim();
    Matrix y = Matrix::Identity(dim, dim);
    if (m.cwiseAbs().maxCoeff() == 0.0) {
        return y;
    }
    const double h = 1.0 / steps;
    for (int i = 0; i < steps; ++i) {
        const double t = i * h;
        const Matrix c1 = field_matrix(j0, m, t);
        const Matrix c2 = field_matrix(j0, m, t + 0.5 * h);
        const Matrix c4 = field_matrix(j0, m, t + h);
        const Matrix k1 = c1 * y;
        const Matrix k2 = c2 * (y + 0.5 * h * k1);
        const Matrix k3 = c2 * (y + 0.5 * h * k2);
        const Matrix k4 = c4 * (y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

}  // namespace

Matrix moser_field_matrix(const Matrix& phi, double t, const SympContext& ctx) {
    ctx.check_square(phi, "moser_field_matrix");
    const Matrix& j0 = ctx.J0();
    return field_matrix(j0, phi.transpose() * j0 * phi - j0, t);
}

Matrix integrate_moser_flow(const Matrix& phi, double step_size, const SympContext& ctx) {
    ctx.check_square(phi, "integrate_moser_flow");
    if (!(step_size > 0.0) || step_size > 1.0) {
        throw std::invalid_argument("step size must lie in (0, 1]");
    }
    return integrate(phi, steps_for(step_size), ctx);
}

SymplectifyReport symplectify(const Matrix& phi, double eps, const FlowConfig& config, const SympContext& ctx) {
    ctx.check_square(phi, "symplectify");
    config.validate();
    if (!(eps >= 0.0) || !(eps < 1.0 / std::numbers::sqrt2)) {
        throw std::domain_error("symplectify: eps must lie in [0, 1/sqrt(2))");
    }
    SymplectifyReport r{};
    r.eps = eps;
    r.input_defect = defect(phi, ctx);
    if (r.input_defect > eps) {
        throw std::domain_error("symplectify: defect of the input exceeds eps");
    }
    r.rho = rho(eps, ctx.n(), true);
    r.psi = integrate(phi, config.steps(), ctx);

    const int dim = ctx.dim();
    r.residual_defect = defect(phi * r.psi, ctx);
    r.residual_pass = r.residual_defect <= config.max_defect_tol;

    r.displacement = operator_norm(r.psi - Matrix::Identity(dim, dim));
    r.displacement_bound = 1.0 / r.rho - 1.0;
    r.displacement_pass = r.displacement <= r.displacement_bound + config.bound_tol;

    Eigen::JacobiSVD<Matrix> svd(r.psi);
    const Vector& s = svd.singularValues();
    r.sigma_max = s(0);
    r.sigma_min = s(s.size() - 1);
    r.sandwich_pass = r.sigma_min >= r.rho - config.bound_tol && r.sigma_max <= 1.0 / r.rho + config.bound_tol;

    r.pass = r.residual_pass && r.displacement_pass && r.sandwich_pass;
    return r;
}

PointwiseReport symplectify_polynomial_pointwise(const PolyMap& phi, const std::vector<Vector>& points, double eps,
                                                 const FlowConfig& config, const SympContext& ctx) {
    config.validate();
    if (static_cast<int>(phi.size()) != ctx.dim()) {
        throw std::invalid_argument("polynomial map dimension does not match the context");
    }
    if (!(eps >= 0.0) || !(eps < 1.0 / std::numbers::sqrt2)) {
        throw std::domain_error("pointwise symplectify: eps must lie in [0, 1/sqrt(2))");
    }
    const Matrix& j0 = ctx.J0();
    const int dim = ctx.dim();
    PointwiseReport report{pullback_omega0(phi) - omega0_form(ctx.n()), PolyForm(dim, 1), {}, true};
    report.sigma = h(report.beta);

    auto velocity = [&](const Vector& x, double t) -> Vector {
        const Matrix b = TwoForm::from_covector(evaluate(report.beta, x)).matrix();
        const Covector s = evaluate(report.sigma, x);
        Vector rhs = Vector::Zero(dim);
        for (const auto& [index, value] : s.terms()) {
            rhs(index[0]) = -value;
        }
        Eigen::PartialPivLU<Matrix> lu(j0 + t * b);
        if (!(std::abs(lu.determinant()) > 1e-300)) {
            throw std::domain_error("pointwise Moser flow: omega_t is degenerate");
        }
        return lu.solve(rhs);
    };

    const int steps = config.steps();
    const double h_step = 1.0 / steps;
    const double expo = std::sqrt(2.0 * ctx.n());
    const double a = std::numbers::sqrt2 * eps;
    const double tol = 1e-9;

    for (const Vector& start : points) {
        if (start.size() != dim) {
            throw std::invalid_argument("pointwise symplectify: point has wrong dimension");
        }
        TrajectoryReport tr;
        tr.start = start;
        tr.max_form_defect = 0.0;
        tr.radius_bounds_pass = true;
        Vector x = start;
        const double r0 = start.norm();
        auto record = [&](double t, const Vector& p) {
            const double r = p.norm();
            tr.times.push_back(t);
            tr.radii.push_back(r);
            tr.max_form_defect = std::max(tr.max_form_defect, norm2(evaluate(report.beta, p)));
            const double base = 1.0 - a * t;
            const double lower = r0 * std::pow(base, expo);
            const double upper = r0 * std::pow(base, -expo);
            if (r < lower - tol * (1.0 + r0) || r > upper + tol * (1.0 + r0)) {
                tr.radius_bounds_pass = false;
            }
        };
        record(0.0, x);
        for (int i = 0; i < steps; ++i) {
            const double t = i * h_step;
            const Vector k1 = velocity(x, t);
            const Vector k2 = velocity(x + 0.5 * h_step * k1, t + 0.5 * h_step);
            const Vector k3 = velocity(x + 0.5 * h_step * k2, t + 0.5 * h_step);
            const Vector k4 = velocity(x + h_step * k3, t + h_step);
            x += (h_step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            record((i + 1) * h_step, x);
        }
        tr.end = x;
        tr.displacement = (x - start).norm();
        tr.displacement_bound = r0 * (std::pow(1.0 - a, -expo) - 1.0);
        tr.displacement_pass = tr.displacement <= tr.displacement_bound + tol * (1.0 + r0);
        tr.pass = tr.radius_bounds_pass && tr.displacement_pass;
        report.pass = report.pass && tr.pass;
        report.trajectories.push_back(std::move(tr));
    }
    return report;
}

}  // namespace epsymp
