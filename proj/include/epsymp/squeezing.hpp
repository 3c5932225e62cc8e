#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epsymp/symplectic.hpp"

namespace epsymp {

/// Radius ratio of the Moser correction for an eps-symplectic map.
///
/// General embeddings: (1 - sqrt(2) eps)^sqrt(2n); linear maps:
/// sqrt(1 - sqrt(2) eps). Requires 0 <= eps < 1/sqrt(2).
double rho(double eps, int n, bool linear_case);

/// The rho attached to a non-squeezing level eps' = sqrt(2) eps, i.e.
/// sqrt(1 - eps') in the linear case and (1 - eps')^sqrt(2n) otherwise.
double rho_for_level(double eps_level, int n, bool linear_case);

struct SqueezeParams {
    double rho;
    double r_a;                 // ||A||, smallest radius with E(A) inside B_{r_A}
    double norm_a_inv;          // ||A^-1||
    double s_a;                 // (1 + ||A^-1|| (rho^-1 - 1) r_A)^-1
    std::optional<double> e_a;  // (1 - ||A^-1|| (rho^-1 - 1) r_A)^-1 when defined
};

/// Requires A non-singular and 0 <= eps < 1.
SqueezeParams squeezing_params(const Matrix& a, double eps, const SympContext& ctx, bool linear_case = true);

/// Capacity of the ellipsoid A B^{2n}: pi r_1^2.
double ellipsoid_capacity(const Matrix& a, const SympContext& ctx);

/// Additive slack on every certificate inequality.
inline constexpr double kCertificateTol = 1e-10;

struct CertificateRecord {
    std::size_t index;
    Matrix a;
    double r1;      // width of E(A)
    double big_r1;  // width of Phi E(A)
    double bound;   // the quantity compared against
    bool eligible;  // false when e_A is undefined (non-expanding) and the record is skipped
    bool pass;
    std::string note;
};

struct CertificateReport {
    std::string kind;
    double eps;
    double rho;
    std::vector<CertificateRecord> records;
    std::vector<double> ball_radii;     // non-expanding ball clause samples
    std::vector<double> ball_widths;    // width of Phi B_r
    bool singular_phi = false;
    bool pass = false;

    std::size_t skipped() const;
};

/// s_A r_1 <= R_1 for every ellipsoid.
CertificateReport check_eps_nonsqueezing(const Matrix& phi, double eps, const std::vector<Matrix>& ellipsoids,
                                         const SympContext& ctx);

/// R_1 <= e_A r_1 for ellipsoids with e_A defined, and width(Phi B_r) <= r / rho.
CertificateReport check_eps_nonexpanding(const Matrix& phi, double eps, const std::vector<Matrix>& ellipsoids,
                                         const SympContext& ctx);

/// s_A^2 c(E) <= c(Phi E) <= e_A^2 c(E), upper side only where e_A is defined.
CertificateReport capacity_preservation_check(const Matrix& phi, double eps, const std::vector<Matrix>& ellipsoids,
                                              const SympContext& ctx);

}  // namespace epsymp
