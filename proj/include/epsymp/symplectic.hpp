#pragma once

#include <string_view>
#include <vector>

#include "epsymp/two_form.hpp"

namespace epsymp {

/// Standard symplectic structure on R^{2n} in interleaved coordinates
/// (x_1, y_1, ..., x_n, y_n). J0 maps (x, y) to (-y, x) on every plane and
/// omega0 = g0(J0 ., .) = sum_j dx_j ^ dy_j.
class SympContext {
public:
    explicit SympContext(int n);

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    const Matrix& J0() const { return j0_; }
    TwoForm omega0() const { return TwoForm(j0_); }

    /// Permutation P with P * z_interleaved = z_split, z_split = (x_1..x_n, y_1..y_n).
    Matrix interleaved_to_split() const;
    Matrix to_split(const Matrix& a) const;
    Matrix from_split(const Matrix& a) const;

    /// Throws std::invalid_argument unless a is dim() x dim().
    void check_square(const Matrix& a, std::string_view what) const;

private:
    int n_;
    Matrix j0_;
};

/// Infers the context from a square matrix; throws on odd dimension.
SympContext context_for(const Matrix& a);

/// Largest and smallest singular values.
double operator_norm(const Matrix& a);
double min_singular_value(const Matrix& a);

/// Relative threshold below which a matrix is treated as singular.
inline constexpr double kSingularTol = 1e-12;
bool is_singular(const Matrix& a);

/// Phi^* omega0 as a two-form, i.e. the matrix Phi^T J0 Phi.
TwoForm pullback_omega0(const Matrix& phi, const SympContext& ctx);

/// ||Phi^* omega0 - omega0||_2.
double defect(const Matrix& phi, const SympContext& ctx);

/// ||Phi^* omega0 + omega0||_2.
double anti_defect(const Matrix& phi, const SympContext& ctx);

/// Symplectic spectrum r_1 <= ... <= r_n of the ellipsoid A B^{2n}.
///
/// r_j^2 are the moduli of the eigenvalue pairs of A^T J0 A. Throws
/// std::domain_error for singular A.
std::vector<double> symplectic_spectrum(const Matrix& a, const SympContext& ctx);

enum class Classification { symplectic_like, anti_symplectic_like, mixed, singular };

std::string_view to_string(Classification c);

struct LambdaMuReport {
    std::vector<double> lambdas;
    std::vector<double> mus;
    std::vector<int> signs;
    Classification classification;
};

LambdaMuReport lambda_mu_invariants(const Matrix& phi, const SympContext& ctx);

struct DecompositionCheck {
    double lhs;
    double rhs;
    double rel_error;
};

/// Compares defect(Phi)^2 with sum_j (lambda_j^2 - sigma_j mu_j^2)^2 + n - sum_j mu_j^4.
DecompositionCheck defect_decomposition_check(const Matrix& phi, const SympContext& ctx);

/// Symplectic Psi mapping a subset of the hyperplane normal to u, whose
/// scalar projection onto J0 u is bounded by `bound`, into B_R^2 x R^{2n-2}.
///
/// Psi sends R^-1 u' to e_{x_1} and R^-1 v' to e_{y_1}, where v' = bound * J0 u/|u|
/// and u' is the multiple of u with omega0(u', v') = R^2. The rest of the
/// symplectic basis is a unitary completion built from the standard basis.
Matrix hyperplane_squeeze(const Vector& u, double bound, double radius, const SympContext& ctx);

}  // namespace epsymp
