#include "epsymp/squeezing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace epsymp {

double rho(double eps, int n, bool linear_case) {
    if (!(eps >= 0.0) || !(eps < 1.0 / std::numbers::sqrt2)) {
        throw std::domain_error("rho: eps must lie in [0, 1/sqrt(2))");
    }
    return rho_for_level(std::numbers::sqrt2 * eps, n, linear_case);
}

double rho_for_level(double eps_level, int n, bool linear_case) {
    if (!(eps_level >= 0.0) || !(eps_level < 1.0)) {
        throw std::domain_error("rho: level must lie in [0, 1)");
    }
    if (n < 1) {
        throw std::invalid_argument("rho: n must be positive");
    }
    const double base = 1.0 - eps_level;
    return linear_case ? std::sqrt(base) : std::pow(base, std::sqrt(2.0 * n));
}

SqueezeParams squeezing_params(const Matrix& a, double eps, const SympContext& ctx, bool linear_case) {
    ctx.check_square(a, "squeezing_params");
    if (is_singular(a)) {
        throw std::domain_error("squeezing_params: ellipsoid matrix is singular");
    }
    SqueezeParams p{};
    p.rho = rho_for_level(eps, ctx.n(), linear_case);
    Eigen::JacobiSVD<Matrix> svd(a);
    const Vector& s = svd.singularValues();
    p.r_a = s(0);
    p.norm_a_inv = 1.0 / s(s.size() - 1);
    const double x = p.norm_a_inv * (1.0 / p.rho - 1.0) * p.r_a;
    p.s_a = 1.0 / (1.0 + x);
    if (x < 1.0) {
        p.e_a = 1.0 / (1.0 - x);
    }
    return p;
}

double ellipsoid_capacity(const Matrix& a, const SympContext& ctx) {
    const double r1 = symplectic_spectrum(a, ctx).front();
    return std::numbers::pi * r1 * r1;
}

std::size_t CertificateReport::skipped() const {
    std::size_t n = 0;
    for (const auto& r : records) {
        n += r.eligible ? 0 : 1;
    }
    return n;
}

namespace {

enum class Kind { nonsqueezing, nonexpanding, capacity };

CertificateReport run_certificate(Kind kind, const Matrix& phi, double eps, const std::vector<Matrix>& ellipsoids,
                                  const SympContext& ctx) {
    ctx.check_square(phi, "certificate");
    if (!(eps >= 0.0) || !(eps < 1.0)) {
        throw std::domain_error("certificate: eps must lie in [0, 1)");
    }
    CertificateReport report;
    report.kind = kind == Kind::nonsqueezing   ? "eps-non-squeezing"
                  : kind == Kind::nonexpanding ? "eps-non-expanding"
                                               : "capacity-preservation";
    report.eps = eps;
    report.rho = rho_for_level(eps, ctx.n(), true);

    // A singular map flattens the ball into a hyperplane, which sits inside
    // ellipsoids of arbitrarily small width.
    if (is_singular(phi)) {
        report.singular_phi = true;
        report.pass = false;
        return report;
    }

    bool all = true;
    for (std::size_t i = 0; i < ellipsoids.size(); ++i) {
        const Matrix& a = ellipsoids[i];
        const SqueezeParams sp = squeezing_params(a, eps, ctx, true);
        CertificateRecord rec{i, a, 0.0, 0.0, 0.0, true, true, {}};
        rec.r1 = symplectic_spectrum(a, ctx).front();
        rec.big_r1 = symplectic_spectrum(phi * a, ctx).front();
        switch (kind) {
            case Kind::nonsqueezing:
                rec.bound = sp.s_a * rec.r1;
                rec.pass = rec.bound <= rec.big_r1 + kCertificateTol;
                break;
            case Kind::nonexpanding:
                if (!sp.e_a) {
                    rec.eligible = false;
                    rec.note = "e_A undefined";
                    break;
                }
                rec.bound = *sp.e_a * rec.r1;
                rec.pass = rec.big_r1 <= rec.bound + kCertificateTol;
                break;
            case Kind::capacity: {
                const double c = std::numbers::pi * rec.r1 * rec.r1;
                const double c_img = std::numbers::pi * rec.big_r1 * rec.big_r1;
                rec.bound = sp.s_a * sp.s_a * c;
                rec.pass = rec.bound <= c_img + kCertificateTol;
                if (sp.e_a) {
                    const double upper = *sp.e_a * *sp.e_a * c;
                    rec.pass = rec.pass && c_img <= upper + kCertificateTol;
                } else {
                    rec.note = "upper bound skipped: e_A undefined";
                }
                break;
            }
        }
        all = all && rec.pass;
        report.records.push_back(std::move(rec));
    }

    if (kind == Kind::nonexpanding) {
        for (double r : {0.5, 1.0, 2.0}) {
            const Matrix ball = r * Matrix::Identity(ctx.dim(), ctx.dim());
            const double width = symplectic_spectrum(phi * ball, ctx).front();
            report.ball_radii.push_back(r);
            report.ball_widths.push_back(width);
            all = all && width <= r / report.rho + kCertificateTol;
        }
    }
    report.pass = all;
    return report;
}

}  // namespace

CertificateReport check_eps_nonsqueezing(const Matrix& phi, double eps, const std::vector<Matrix>& ellipsoids,
                                         const SympContext& ctx) {
    return run_certificate(Kind::nonsqueezing, phi, eps, ellipsoids, ctx);
}

CertificateReport check_eps_nonexpanding(const Matrix& phi, double eps, const std::vector<Matrix>& ellipsoids,
                                         const SympContext& ctx) {
    return run_certificate(Kind::nonexpanding, phi, eps, ellipsoids, ctx);
}

CertificateReport capacity_preservation_check(const Matrix& phi, double eps, const std::vector<Matrix>& ellipsoids,
                                              const SympContext& ctx) {
    return run_certificate(Kind::capacity, phi, eps, ellipsoids, ctx);
}

}  // namespace epsymp
