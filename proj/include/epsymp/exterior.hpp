#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace epsymp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Strictly increasing list of coordinate slots, stored 0-based.
///
/// The JSON surface uses 1-based indices; conversion happens in io.cpp.
class MultiIndex {
public:
    MultiIndex() = default;
    /// Throws std::invalid_argument unless entries are strictly increasing
    /// and lie in [0, m).
    MultiIndex(std::vector<int> entries, int m);

    int degree() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    bool contains(int slot) const;

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<int> entries_;
};

/// All strictly increasing k-subsets of {0..m-1} in lexicographic order.
std::vector<MultiIndex> all_multi_indices(int m, int k);

/// Binomial coefficient C(m, k); 0 when k is out of range.
std::uint64_t binomial(int m, int k);

/// A k-covector on R^m in the dual standard basis dx_i.
///
/// Sparse: only nonzero coefficients are stored; iteration is lexicographic
/// in the multi-index.
class Covector {
public:
    using Terms = std::map<MultiIndex, double>;

    Covector(int m, int k);
    Covector(int m, int k, Terms terms);

    static Covector basis(int m, const MultiIndex& index, double coeff = 1.0);

    int dim() const { return m_; }
    int degree() const { return k_; }
    const Terms& terms() const { return terms_; }
    double coeff(const MultiIndex& index) const;
    bool is_zero() const { return terms_.empty(); }

    /// v*(v_1, ..., v_k) = sum_sigma f_sigma det(rows sigma of [v_1 ... v_k]).
    double evaluate(const Matrix& vectors) const;

    Covector operator+(const Covector& other) const;
    Covector operator-(const Covector& other) const;
    Covector operator*(double s) const;

private:
    int m_;
    int k_;
    Terms terms_;
};

inline Covector operator*(double s, const Covector& c) { return c * s; }

/// Graded-anticommutative exterior product.
Covector wedge(const Covector& a, const Covector& b);

/// Euclidean norm of the coefficient vector.
double norm2(const Covector& c);

enum class ComassMode { exact, sandwich };

struct Interval {
    double lo;
    double hi;
};

/// Comass, i.e. the supremum of c over unit simple k-vectors.
///
/// Exact mode handles k in {0, 1, 2, m-1, m} and returns lo == hi.
/// Sandwich mode returns a certified bracket: lo is the best evaluation on
/// random orthonormal k-frames (and the coordinate frames), hi = norm2(c).
Interval comass(const Covector& c, ComassMode mode, int trials = 10000, std::uint64_t seed = 0x5eed);

struct ComassWitness {
    Matrix vectors;  // m x k, first column carries the sign
    double value;
};

/// Best k-subset of the given orthonormal basis (columns), searched
/// exhaustively over subsets with a sign on the first vector.
ComassWitness comass_basis_witness(const Covector& c, const Matrix& basis);

/// Interior multiplication iota_v c = c(v, ., ..., .).
Covector interior(const Vector& v, const Covector& c);

/// (L^* c)(v_1, ..., v_k) = c(L v_1, ..., L v_k).
Covector pullback(const Matrix& L, const Covector& c);

struct NormFactors {
    double lower;
    double upper;
};

/// Bound factors relating the norm for a constant metric <., A .> to the
/// standard one: ||A^-1||^(-k/2) and ||A||^(k/2).
NormFactors metric_norm_bounds(double norm_a, double norm_a_inv, int k);

/// Tolerance for accepting a basis as orthonormal (Gram matrix vs identity).
inline constexpr double kOrthonormalTol = 1e-9;

bool is_orthonormal(const Matrix& basis, double tol = kOrthonormalTol);

}  // namespace epsymp
