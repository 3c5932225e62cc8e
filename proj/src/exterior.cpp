#include "epsymp/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "epsymp/two_form.hpp"

namespace epsymp {

MultiIndex::MultiIndex(std::vector<int> entries, int m) : entries_(std::move(entries)) {
    if (degree() > m) {
        throw std::invalid_argument("multi-index longer than ambient dimension");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0 || entries_[i] >= m) {
            throw std::invalid_argument("multi-index entry out of range");
        }
        if (i > 0 && entries_[i] <= entries_[i - 1]) {
            throw std::invalid_argument("multi-index entries must be strictly increasing");
        }
    }
}

bool MultiIndex::contains(int slot) const {
    return std::binary_search(entries_.begin(), entries_.end(), slot);
}

std::vector<MultiIndex> all_multi_indices(int m, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > m) {
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        idx[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        out.emplace_back(idx, m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::uint64_t binomial(int m, int k) {
    if (k < 0 || k > m) {
        return 0;
    }
    k = std::min(k, m - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(m - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

bool is_orthonormal(const Matrix& basis, double tol) {
    if (basis.cols() == 0) {
        return true;
    }
    const Matrix gram = basis.transpose() * basis;
    return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------

Covector::Covector(int m, int k) : m_(m), k_(k) {
    if (m < 0 || k < 0 || k > m) {
        throw std::invalid_argument("covector degree out of range");
    }
}

Covector::Covector(int m, int k, Terms terms) : Covector(m, k) {
    for (auto& [index, value] : terms) {
        if (index.degree() != k) {
            throw std::invalid_argument("covector term has wrong degree");
        }
        if (k > 0 && index[k - 1] >= m) {
            throw std::invalid_argument("covector term exceeds ambient dimension");
        }
        if (!std::isfinite(value)) {
            throw std::invalid_argument("covector coefficient is not finite");
        }
        if (value != 0.0) {
            terms_.emplace(index, value);
        }
    }
}

Covector Covector::basis(int m, const MultiIndex& index, double coeff) {
    return Covector(m, index.degree(), Terms{{index, coeff}});
}

double Covector::coeff(const MultiIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? 0.0 : it->second;
}

double Covector::evaluate(const Matrix& vectors) const {
    if (vectors.rows() != m_ || vectors.cols() != k_) {
        throw std::invalid_argument("evaluate expects an m x k matrix of vectors");
    }
    if (k_ == 0) {
        return coeff(MultiIndex{});
    }
    double sum = 0.0;
    Matrix minor(k_, k_);
    for (const auto& [index, f] : terms_) {
        for (int r = 0; r < k_; ++r) {
            minor.row(r) = vectors.row(index[r]);
        }
        sum += f * minor.determinant();
    }
    return sum;
}

namespace {

Covector combine(const Covector& a, const Covector& b, double sb) {
    if (a.dim() != b.dim() || a.degree() != b.degree()) {
        throw std::invalid_argument("covector shapes differ");
    }
    Covector::Terms t = a.terms();
    for (const auto& [index, value] : b.terms()) {
        t[index] += sb * value;
    }
    return Covector(a.dim(), a.degree(), std::move(t));
}

}  // namespace

Covector Covector::operator+(const Covector& other) const { return combine(*this, other, 1.0); }
Covector Covector::operator-(const Covector& other) const { return combine(*this, other, -1.0); }

Covector Covector::operator*(double s) const {
    Terms t = terms_;
    for (auto& [index, value] : t) {
        value *= s;
    }
    return Covector(m_, k_, std::move(t));
}

// ---------------------------------------------------------------------------

Covector wedge(const Covector& a, const Covector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("wedge: dimension mismatch");
    }
    const int m = a.dim();
    const int k = a.degree() + b.degree();
    if (k > m) {
        throw std::invalid_argument("wedge: degree exceeds dimension");
    }
    Covector::Terms out;
    std::vector<int> merged;
    for (const auto& [ia, fa] : a.terms()) {
        for (const auto& [ib, fb] : b.terms()) {
            bool disjoint = true;
            int inversions = 0;
            for (int x : ia.entries()) {
                if (ib.contains(x)) {
                    disjoint = false;
                    break;
                }
                for (int y : ib.entries()) {
                    inversions += (y < x) ? 1 : 0;
                }
            }
            if (!disjoint) {
                continue;
            }
            merged = ia.entries();
            merged.insert(merged.end(), ib.entries().begin(), ib.entries().end());
            std::sort(merged.begin(), merged.end());
            const double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
            out[MultiIndex(merged, m)] += sign * fa * fb;
        }
    }
    return Covector(m, k, std::move(out));
}

double norm2(const Covector& c) {
    double s = 0.0;
    for (const auto& [index, f] : c.terms()) {
        s += f * f;
    }
    return std::sqrt(s);
}

namespace {

double max_abs_coeff(const Covector& c) {
    double best = 0.0;
    for (const auto& [index, f] : c.terms()) {
        best = std::max(best, std::abs(f));
    }
    return best;
}

}  // namespace

Interval comass(const Covector& c, ComassMode mode, int trials, std::uint64_t seed) {
    const int m = c.dim();
    const int k = c.degree();
    const double hi = norm2(c);

    if (mode == ComassMode::exact) {
        if (k == 0 || k == m || k == 1 || k == m - 1) {
            return {hi, hi};
        }
        if (k == 2) {
            const StandardForm sf = standard_form(TwoForm::from_covector(c));
            const double top = sf.lambda_sq.empty() ? 0.0 : sf.lambda_sq.back();
            return {top, top};
        }
        throw std::invalid_argument("exact comass only for k in {0, 1, 2, m-1, m}");
    }

    // Coordinate frames are simple unit k-vectors too.
    double lo = max_abs_coeff(c);
    if (k == 0 || c.is_zero()) {
        return {lo, hi};
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Matrix g(m, k);
    for (int t = 0; t < trials; ++t) {
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < k; ++j) {
                g(i, j) = gauss(rng);
            }
        }
        Eigen::HouseholderQR<Matrix> qr(g);
        const Matrix frame = qr.householderQ() * Matrix::Identity(m, k);
        lo = std::max(lo, std::abs(c.evaluate(frame)));
    }
    return {std::min(lo, hi), hi};
}

ComassWitness comass_basis_witness(const Covector& c, const Matrix& basis) {
    const int m = c.dim();
    const int k = c.degree();
    if (basis.rows() != m || basis.cols() != m) {
        throw std::invalid_argument("witness basis must be m x m");
    }
    if (!is_orthonormal(basis)) {
        throw std::invalid_argument("witness basis is not orthonormal");
    }
    ComassWitness best{Matrix(m, k), -1.0};
    Matrix frame(m, k);
    for (const MultiIndex& s : all_multi_indices(m, k)) {
        for (int j = 0; j < k; ++j) {
            frame.col(j) = basis.col(s[j]);
        }
        const double value = c.evaluate(frame);
        if (std::abs(value) > best.value) {
            best.value = std::abs(value);
            best.vectors = frame;
            if (value < 0 && k > 0) {
                best.vectors.col(0) *= -1.0;
            }
        }
    }
    return best;
}

Covector interior(const Vector& v, const Covector& c) {
    if (v.size() != c.dim()) {
        throw std::invalid_argument("interior: dimension mismatch");
    }
    if (c.degree() == 0) {
        throw std::invalid_argument("interior: cannot contract a 0-covector");
    }
    const int m = c.dim();
    const int k = c.degree();
    Covector::Terms out;
    std::vector<int> rest;
    for (const auto& [index, f] : c.terms()) {
        for (int j = 0; j < k; ++j) {
            const double vj = v(index[j]);
            if (vj == 0.0) {
                continue;
            }
            rest = index.entries();
            rest.erase(rest.begin() + j);
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            out[MultiIndex(rest, m)] += sign * vj * f;
        }
    }
    return Covector(m, k - 1, std::move(out));
}

Covector pullback(const Matrix& L, const Covector& c) {
    const int m = c.dim();
    const int k = c.degree();
    if (L.rows() != m || L.cols() != m) {
        throw std::invalid_argument("pullback: matrix must be m x m");
    }
    if (k == 0) {
        return c;
    }
    Covector::Terms out;
    Matrix minor(k, k);
    for (const MultiIndex& tau : all_multi_indices(m, k)) {
        double sum = 0.0;
        for (const auto& [sigma, f] : c.terms()) {
            for (int r = 0; r < k; ++r) {
                for (int s = 0; s < k; ++s) {
                    minor(r, s) = L(sigma[r], tau[s]);
                }
            }
            sum += f * minor.determinant();
        }
        if (sum != 0.0) {
            out.emplace(tau, sum);
        }
    }
    return Covector(m, k, std::move(out));
}

NormFactors metric_norm_bounds(double norm_a, double norm_a_inv, int k) {
    if (!(norm_a > 0.0) || !(norm_a_inv > 0.0)) {
        throw std::invalid_argument("metric norms must be positive");
    }
    if (k < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    const double half = 0.5 * k;
    return {std::pow(norm_a_inv, -half), std::pow(norm_a, half)};
}

}  // namespace epsymp
