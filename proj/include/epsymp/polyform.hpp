#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "epsymp/exterior.hpp"

namespace epsymp {

/// Exact rational; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Multivariate polynomial in x_1..x_m with exact rational coefficients.
class Poly {
public:
    using Exponent = std::vector<unsigned>;
    using Terms = std::map<Exponent, Rational>;

    explicit Poly(int m);
    Poly(int m, Terms terms);

    static Poly constant(int m, const Rational& c);
    /// The coordinate function x_i (0-based).
    static Poly coordinate(int m, int i);
    static Poly monomial(int m, Exponent e, const Rational& c);

    int vars() const { return m_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    bool is_constant() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return m_ == o.m_ && terms_ == o.terms_; }

    Poly derivative(int i) const;
    Poly times_coordinate(int i) const;
    /// Divides each monomial of total degree p by (shift + p); throws if shift + p == 0.
    Poly integrate_radial(int shift) const;
    /// p(r x).
    Poly dilate(const Rational& r) const;

    double evaluate(const Vector& x) const;

private:
    void add_term(const Exponent& e, const Rational& c);

    int m_;
    Terms terms_;
};

/// Differential k-form on R^m with polynomial coefficients.
class PolyForm {
public:
    using Terms = std::map<MultiIndex, Poly>;

    PolyForm(int m, int k);
    PolyForm(int m, int k, Terms terms);

    static PolyForm function(const Poly& f);
    /// f dx_sigma.
    static PolyForm term(const MultiIndex& index, const Poly& f);

    int dim() const { return m_; }
    int degree() const { return k_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Largest total degree of any coefficient, -1 for the zero form.
    int coefficient_degree() const;
    bool has_constant_coefficients() const;

    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator-(const PolyForm& o) const;
    PolyForm operator*(const Rational& s) const;
    bool operator==(const PolyForm& o) const { return m_ == o.m_ && k_ == o.k_ && terms_ == o.terms_; }

    /// Pullback along the dilation x -> r x: f(r x) r^k dx_sigma.
    PolyForm dilate(const Rational& r) const;

private:
    void add_term(const MultiIndex& index, const Poly& f);

    int m_;
    int k_;
    Terms terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// Exterior derivative; requires k < m.
PolyForm d(const PolyForm& f);

/// f_sigma dx_sigma -> (int_0^1 t^{k-1} f_sigma(t x) dt) dx_sigma.
PolyForm alpha_k(const PolyForm& f);

/// Contraction with the radial field X = sum_i x_i d/dx_i; requires k >= 1.
PolyForm iota_radial(const PolyForm& f);

/// Homotopy operator h_k = iota_X o alpha_k; requires k >= 1.
PolyForm h(const PolyForm& f);

/// The other factorization alpha_{k-1} o iota_X.
PolyForm h_alpha_after_iota(const PolyForm& f);

/// Exact check of h(d f) + d(h f) == f; requires 1 <= k < m.
bool homotopy_identity_check(const PolyForm& f);

/// Coefficients at the point x as a floating-point covector.
Covector evaluate(const PolyForm& f, const Vector& x);

struct HBoundPoint {
    Vector x;
    double lhs;            // ||h(f)(x)||_2
    double max_ray;        // max over sampled t of ||f(t x)||_2
    double rhs;            // general bound
    double margin;         // rhs - lhs
    bool ray_constant;     // coefficients constant (degree 0)
    double rhs_ray;        // ||x|| / sqrt(k) ||f(x)||_2 when ray_constant
    double margin_ray;
};

struct HBoundReport {
    int k;
    double s;
    int samples;
    std::vector<HBoundPoint> points;
    double min_margin;
    bool pass;
    /// The t-maximum is sampled, so rhs can only be underestimated.
    bool sampled_max = true;
};

inline constexpr int kRaySamples = 1000;
inline constexpr double kBoundMarginTol = -1e-9;

/// Both sides of the norm bounds for h at each point; points must satisfy
/// ||x|| <= s. Requires k >= 1.
HBoundReport h_bound_check(const PolyForm& f, const std::vector<Vector>& points, double s);

/// A polynomial map R^m -> R^m.
using PolyMap = std::vector<Poly>;

PolyMap linear_polymap(const Matrix& a);

/// phi^* omega0 = sum_j d phi_{x_j} ^ d phi_{y_j} (interleaved coordinates).
PolyForm pullback_omega0(const PolyMap& phi);

/// The constant form omega0 on R^{2n}.
PolyForm omega0_form(int n);

/// Exact rational nearest to a double within the double's own precision.
Rational to_rational(double x);

}  // namespace epsymp
