#pragma once

#include <vector>

#include "epsymp/exterior.hpp"

namespace epsymp {

/// A 2-form stored as a skew-symmetric matrix M with omega(v, w) = <M v, w>.
class TwoForm {
public:
    /// Throws std::invalid_argument if ||M + M^T||_F > 1e-9 ||M||_F.
    explicit TwoForm(Matrix m);

    static TwoForm from_covector(const Covector& c);

    const Matrix& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }
    double operator()(const Vector& v, const Vector& w) const { return w.dot(m_ * v); }

    Covector to_covector() const;

private:
    Matrix m_;
};

/// Orthonormal basis in which omega = sum_j lambda_j^2 alpha_j ^ beta_j.
///
/// basis columns: u_1..u_r, v_1..v_r, then kernel vectors. lambda_sq is
/// ascending. rank() == 2 r.
struct StandardForm {
    Matrix basis;
    std::vector<double> lambda_sq;

    int pairs() const { return static_cast<int>(lambda_sq.size()); }
    int rank() const { return 2 * pairs(); }
    Vector u(int j) const { return basis.col(j); }
    Vector v(int j) const { return basis.col(pairs() + j); }

    /// Rebuilds sum_j lambda_j^2 alpha_j ^ beta_j as a matrix.
    Matrix reconstruct() const;
};

/// ||M u|| below this multiple of ||M|| marks u as a kernel vector.
inline constexpr double kKernelTol = 1e-10;

StandardForm standard_form(const TwoForm& w);

}  // namespace epsymp
