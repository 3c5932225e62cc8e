#pragma once

#include <vector>

#include "epsymp/polyform.hpp"
#include "epsymp/symplectic.hpp"

namespace epsymp {

struct FlowConfig {
    double step_size = 1e-3;
    double max_defect_tol = 1e-6;
    /// Slack on the displacement and sandwich bounds.
    double bound_tol = 1e-6;

    /// Throws std::invalid_argument unless 0 < step_size <= 1e-2.
    void validate() const;
    /// Number of constant steps covering [0, 1].
    int steps() const;
};

/// C(t) with X_t(x) = C(t) x solving iota_{X_t} omega_t = -sigma, where
/// omega_t = omega0 + t (Phi^* omega0 - omega0) and sigma = h_2(Phi^* omega0 - omega0).
Matrix moser_field_matrix(const Matrix& phi, double t, const SympContext& ctx);

struct SymplectifyReport {
    Matrix psi;
    double eps;
    double rho;                 // sqrt(1 - sqrt(2) eps)
    double input_defect;
    double residual_defect;     // defect(Phi psi)
    bool residual_pass;
    double displacement;        // ||psi - I|| (operator norm)
    double displacement_bound;  // rho^-1 - 1
    bool displacement_pass;
    double sigma_min;
    double sigma_max;
    bool sandwich_pass;         // singular values within [rho, rho^-1]
    bool pass;
};

/// Integrates Y' = C(t) Y, Y(0) = I with classical RK4 and reports psi = Y(1).
///
/// Requires defect(Phi) <= eps < 1/sqrt(2); throws std::domain_error otherwise.
SymplectifyReport symplectify(const Matrix& phi, double eps, const FlowConfig& config, const SympContext& ctx);

/// Same flow with an explicit step size; used for convergence studies.
Matrix integrate_moser_flow(const Matrix& phi, double step_size, const SympContext& ctx);

struct TrajectoryReport {
    Vector start;
    Vector end;
    std::vector<double> times;
    std::vector<double> radii;
    double max_form_defect;     // max ||beta(x(t))||_2 along the path
    bool radius_bounds_pass;    // (1 - sqrt2 eps t)^{+-sqrt(2n)} envelope
    double displacement;
    double displacement_bound;  // |x0| ((1 - sqrt2 eps)^-sqrt(2n) - 1)
    bool displacement_pass;
    bool pass;
};

struct PointwiseReport {
    PolyForm beta;   // phi^* omega0 - omega0, exact
    PolyForm sigma;  // h_2(beta), exact
    std::vector<TrajectoryReport> trajectories;
    bool pass;
};

/// Pointwise Moser flow for a polynomial map: at each RK stage solves
/// (J0 + t B(x)) X = -sigma(x) with B, sigma evaluated from the exact forms.
PointwiseReport symplectify_polynomial_pointwise(const PolyMap& phi, const std::vector<Vector>& points, double eps,
                                                 const FlowConfig& config, const SympContext& ctx);

}  // namespace epsymp
