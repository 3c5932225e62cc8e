#include "epsymp/two_form.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace epsymp {

TwoForm::TwoForm(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw std::invalid_argument("two-form matrix must be square");
    }
    if ((m_ + m_.transpose()).norm() > 1e-9 * m_.norm()) {
        throw std::invalid_argument("two-form matrix is not skew-symmetric");
    }
}

// omega(e_i, e_j) = <M e_i, e_j> = M(j, i) is the coefficient on dx_i ^ dx_j.
TwoForm TwoForm::from_covector(const Covector& c) {
    if (c.degree() != 2) {
        throw std::invalid_argument("expected a 2-covector");
    }
    const int m = c.dim();
    Matrix mat = Matrix::Zero(m, m);
    for (const auto& [index, f] : c.terms()) {
        mat(index[1], index[0]) = f;
        mat(index[0], index[1]) = -f;
    }
    return TwoForm(std::move(mat));
}

Covector TwoForm::to_covector() const {
    const int m = dim();
    Covector::Terms t;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double f = 0.5 * (m_(j, i) - m_(i, j));
            if (f != 0.0) {
                t.emplace(MultiIndex({i, j}, m), f);
            }
        }
    }
    return Covector(m, 2, std::move(t));
}

Matrix StandardForm::reconstruct() const {
    const auto dim = basis.rows();
    Matrix out = Matrix::Zero(dim, dim);
    for (int j = 0; j < pairs(); ++j) {
        const Vector uj = u(j);
        const Vector vj = v(j);
        out += lambda_sq[static_cast<std::size_t>(j)] * (vj * uj.transpose() - uj * vj.transpose());
    }
    return out;
}

namespace {

// Removes the components along the accepted (orthonormal) vectors.
Vector project_off(Vector x, const std::vector<Vector>& accepted) {
    // Two passes of Gram-Schmidt keep the result orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vector& q : accepted) {
            x -= q.dot(x) * q;
        }
    }
    return x;
}

}  // namespace

// Eigenvectors of the symmetric matrix -M^2 = M^T M span M-invariant
// eigenspaces. Walking them from the largest eigenvalue down, each fresh
// direction u pairs with v = M u / ||M u||; the span of accepted vectors stays
// M-invariant, so deflating against it realizes the orthogonal plane split.
StandardForm standard_form(const TwoForm& w) {
    const Matrix& mat = w.matrix();
    const int dim = w.dim();
    StandardForm out;
    out.basis = Matrix::Zero(dim, dim);
    if (dim == 0) {
        return out;
    }

    Eigen::SelfAdjointEigenSolver<Matrix> eig(mat.transpose() * mat);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("standard_form: eigensolver failed");
    }
    const Vector& values = eig.eigenvalues();
    const Matrix& vectors = eig.eigenvectors();
    const double op_norm = std::sqrt(std::max(values(dim - 1), 0.0));

    std::vector<Vector> accepted;
    std::vector<Vector> us;
    std::vector<Vector> vs;
    std::vector<double> lsq;
    std::vector<Vector> kernel;

    auto consider = [&](const Vector& candidate) {
        Vector q = project_off(candidate, accepted);
        const double qn = q.norm();
        if (qn < 0.5) {
            return;
        }
        q /= qn;
        const Vector mq = mat * q;
        const double mqn = mq.norm();
        if (op_norm == 0.0 || mqn <= kKernelTol * op_norm) {
            kernel.push_back(q);
            accepted.push_back(q);
            return;
        }
        Vector p = project_off(mq / mqn, accepted);
        p -= p.dot(q) * q;
        const double pn = p.norm();
        if (pn < 0.5) {
            // Only reachable through severe rounding; keep q as a kernel direction.
            kernel.push_back(q);
            accepted.push_back(q);
            return;
        }
        p /= pn;
        accepted.push_back(q);
        accepted.push_back(p);
        us.push_back(q);
        vs.push_back(p);
        lsq.push_back(w(q, p));
    };
    // Largest eigenvalues first; ties keep the solver's column order.
    for (int hi = dim - 1; hi >= 0;) {
        int lo = hi;
        while (lo > 0 && values(hi) - values(lo - 1) <= 1e-12 * std::max(values(hi), 1.0)) {
            --lo;
        }
        for (int col = lo; col <= hi; ++col) {
            consider(vectors.col(col));
        }
        hi = lo - 1;
    }
    // Rounding can leave the eigenvector sweep short of a full basis.
    for (int i = 0; i < dim && static_cast<int>(accepted.size()) < dim; ++i) {
        consider(Vector::Unit(dim, i));
    }

    // Sort pairs ascending by lambda^2.
    std::vector<std::size_t> order(lsq.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lsq[a] < lsq[b]; });

    const int r = static_cast<int>(lsq.size());
    for (int j = 0; j < r; ++j) {
        const std::size_t src = order[static_cast<std::size_t>(j)];
        out.basis.col(j) = us[src];
        out.basis.col(r + j) = vs[src];
        out.lambda_sq.push_back(lsq[src]);
    }
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        out.basis.col(2 * r + static_cast<int>(i)) = kernel[i];
    }
    return out;
}

}  // namespace epsymp
