#include "epsymp/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace epsymp {

Matrix random_gaussian(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> gauss;
    Matrix g(rows, cols);
    // Fill in a fixed order so results do not depend on Eigen's storage.
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            g(i, j) = gauss(rng);
        }
    }
    return g;
}

Matrix random_orthogonal(int m, Rng& rng) {
    const Matrix g = random_gaussian(m, m, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j) {
        if (r(j, j) < 0) {
            q.col(j) *= -1.0;
        }
    }
    return q;
}

namespace {

Matrix random_symmetric(int n, Rng& rng, double scale) {
    const Matrix g = random_gaussian(n, n, rng);
    return 0.5 * scale * (g + g.transpose());
}

// Real form of a random unitary U = X + iY acting on C^n, interleaved.
Matrix random_unitary(int n, Rng& rng) {
    Eigen::MatrixXcd z(n, n);
    const Matrix re = random_gaussian(n, n, rng);
    const Matrix im = random_gaussian(n, n, rng);
    z.real() = re;
    z.imag() = im;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    const Eigen::MatrixXcd u = qr.householderQ();
    Matrix out(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = u(i, j).real();
            const double b = u(i, j).imag();
            // (a + ib)(x + iy) = (a x - b y) + i (b x + a y)
            out(2 * i, 2 * j) = a;
            out(2 * i, 2 * j + 1) = -b;
            out(2 * i + 1, 2 * j) = b;
            out(2 * i + 1, 2 * j + 1) = a;
        }
    }
    return out;
}

}  // namespace

Matrix random_symplectic(int n, Rng& rng, double shear) {
    const int dim = 2 * n;
    Matrix s = random_unitary(n, rng);
    for (int round = 0; round < 2; ++round) {
        const Matrix b = random_symmetric(n, rng, shear);
        Matrix lower = Matrix::Identity(dim, dim);  // y += B x
        Matrix upper = Matrix::Identity(dim, dim);  // x += B' y
        const Matrix b2 = random_symmetric(n, rng, shear);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                lower(2 * i + 1, 2 * j) += b(i, j);
                upper(2 * i, 2 * j + 1) += b2(i, j);
            }
        }
        s = random_unitary(n, rng) * upper * lower * s;
    }
    return s;
}

Matrix anti_symplectic_reflection(int n) {
    Matrix r = Matrix::Identity(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        r(2 * j + 1, 2 * j + 1) = -1.0;
    }
    return r;
}

Matrix random_ellipsoid(int n, Rng& rng, double s_min, double s_max) {
    const int dim = 2 * n;
    const Matrix q1 = random_orthogonal(dim, rng);
    const Matrix q2 = random_orthogonal(dim, rng);
    std::uniform_real_distribution<double> logs(std::log(s_min), std::log(s_max));
    Vector s(dim);
    for (int i = 0; i < dim; ++i) {
        s(i) = std::exp(logs(rng));
    }
    return q1 * s.asDiagonal() * q2;
}

Matrix random_eps_symplectic(int n, double eps, std::uint64_t seed) {
    if (!(eps >= 0.0) || !(eps < 1.0 / std::numbers::sqrt2)) {
        throw std::domain_error("random_eps_symplectic: eps must lie in [0, 1/sqrt(2))");
    }
    const SympContext ctx(n);
    const int dim = ctx.dim();
    Rng rng(seed);
    const Matrix s = random_symplectic(n, rng);
    Matrix dir = random_gaussian(dim, dim, rng);
    dir /= dir.norm();
    const Matrix id = Matrix::Identity(dim, dim);

    // defect(S (I + tN)) = defect(I + tN) since S is symplectic up to rounding;
    // tune t on the unrotated factor so the target is hit exactly.
    auto g = [&](double t) { return defect(id + t * dir, ctx); };
    if (eps == 0.0) {
        return s;
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int grow = 0; g(hi) < eps && grow < 64; ++grow) {
        lo = hi;
        hi *= 2.0;
    }
    if (g(hi) < eps) {
        throw std::runtime_error("random_eps_symplectic: direction does not reach the target defect");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < eps) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-15 * hi) {
            break;
        }
    }
    const double t = std::abs(g(lo) - eps) <= std::abs(g(hi) - eps) ? lo : hi;
    return s * (id + t * dir);
}

}  // namespace epsymp
