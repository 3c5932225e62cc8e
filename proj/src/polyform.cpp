#include "epsymp/polyform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace epsymp {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(int m) : m_(m) {
    if (m < 0) {
        throw std::invalid_argument("polynomial needs a nonnegative number of variables");
    }
}

Poly::Poly(int m, Terms terms) : Poly(m) {
    for (auto& [e, c] : terms) {
        add_term(e, c);
    }
}

Poly Poly::constant(int m, const Rational& c) { return monomial(m, Exponent(static_cast<std::size_t>(m), 0u), c); }

Poly Poly::coordinate(int m, int i) {
    if (i < 0 || i >= m) {
        throw std::invalid_argument("coordinate index out of range");
    }
    Exponent e(static_cast<std::size_t>(m), 0u);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(m, std::move(e), Rational(1));
}

Poly Poly::monomial(int m, Exponent e, const Rational& c) {
    Poly p(m);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != m_) {
        throw std::invalid_argument("exponent vector length must equal the number of variables");
    }
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

int Poly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    }
    return deg;
}

bool Poly::is_constant() const { return total_degree() <= 0; }

Poly Poly::operator+(const Poly& o) const {
    if (m_ != o.m_) {
        throw std::invalid_argument("polynomial variable counts differ");
    }
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) {
        r.add_term(e, c);
    }
    return r;
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (m_ != o.m_) {
        throw std::invalid_argument("polynomial variable counts differ");
    }
    Poly r(m_);
    Exponent e(static_cast<std::size_t>(m_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& s) const {
    Poly r(m_);
    if (sgn(s) == 0) {
        return r;
    }
    for (const auto& [e, c] : terms_) {
        r.terms_.emplace(e, c * s);
    }
    return r;
}

Poly Poly::derivative(int i) const {
    Poly r(m_);
    const auto slot = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
        if (e[slot] == 0) {
            continue;
        }
        Exponent de = e;
        de[slot] -= 1;
        r.add_term(de, c * Rational(e[slot]));
    }
    return r;
}

Poly Poly::times_coordinate(int i) const {
    Poly r(m_);
    for (const auto& [e, c] : terms_) {
        Exponent xe = e;
        xe[static_cast<std::size_t>(i)] += 1;
        r.terms_.emplace(std::move(xe), c);
    }
    return r;
}

Poly Poly::integrate_radial(int shift) const {
    Poly r(m_);
    for (const auto& [e, c] : terms_) {
        const int p = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
        if (shift + p == 0) {
            throw std::domain_error("radial integral diverges for a constant term at degree 0");
        }
        r.terms_.emplace(e, c / Rational(shift + p));
    }
    return r;
}

Poly Poly::dilate(const Rational& s) const {
    Poly r(m_);
    for (const auto& [e, c] : terms_) {
        const unsigned p = std::accumulate(e.begin(), e.end(), 0u);
        Rational f(1);
        for (unsigned i = 0; i < p; ++i) {
            f *= s;
        }
        r.add_term(e, c * f);
    }
    return r;
}

double Poly::evaluate(const Vector& x) const {
    if (x.size() != m_) {
        throw std::invalid_argument("evaluation point has wrong dimension");
    }
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (int i = 0; i < m_; ++i) {
            for (unsigned p = 0; p < e[static_cast<std::size_t>(i)]; ++p) {
                term *= x(i);
            }
        }
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// PolyForm

PolyForm::PolyForm(int m, int k) : m_(m), k_(k) {
    if (m < 0 || k < 0 || k > m) {
        throw std::invalid_argument("form degree out of range");
    }
}

PolyForm::PolyForm(int m, int k, Terms terms) : PolyForm(m, k) {
    for (auto& [index, p] : terms) {
        add_term(index, p);
    }
}

void PolyForm::add_term(const MultiIndex& index, const Poly& f) {
    if (index.degree() != k_ || (k_ > 0 && index[k_ - 1] >= m_)) {
        throw std::invalid_argument("form term has wrong shape");
    }
    if (f.vars() != m_) {
        throw std::invalid_argument("coefficient polynomial has wrong number of variables");
    }
    if (f.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(index, f);
    if (!inserted) {
        it->second = it->second + f;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

PolyForm PolyForm::function(const Poly& f) { return term(MultiIndex{}, f); }

PolyForm PolyForm::term(const MultiIndex& index, const Poly& f) {
    PolyForm r(f.vars(), index.degree());
    r.add_term(index, f);
    return r;
}

int PolyForm::coefficient_degree() const {
    int deg = -1;
    for (const auto& [index, p] : terms_) {
        deg = std::max(deg, p.total_degree());
    }
    return deg;
}

bool PolyForm::has_constant_coefficients() const { return coefficient_degree() <= 0; }

PolyForm PolyForm::operator+(const PolyForm& o) const {
    if (m_ != o.m_ || k_ != o.k_) {
        throw std::invalid_argument("form shapes differ");
    }
    PolyForm r = *this;
    for (const auto& [index, p] : o.terms_) {
        r.add_term(index, p);
    }
    return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + o * Rational(-1); }

PolyForm PolyForm::operator*(const Rational& s) const {
    PolyForm r(m_, k_);
    for (const auto& [index, p] : terms_) {
        r.add_term(index, p * s);
    }
    return r;
}

PolyForm PolyForm::dilate(const Rational& s) const {
    Rational sk(1);
    for (int i = 0; i < k_; ++i) {
        sk *= s;
    }
    PolyForm r(m_, k_);
    for (const auto& [index, p] : terms_) {
        r.add_term(index, p.dilate(s) * sk);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Operators

namespace {

void accumulate(PolyForm::Terms& terms, MultiIndex key, Poly p) {
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), std::move(p));
    } else {
        it->second = it->second + p;
    }
}

}  // namespace

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("wedge: dimension mismatch");
    }
    const int m = a.dim();
    const int k = a.degree() + b.degree();
    if (k > m) {
        throw std::invalid_argument("wedge: degree exceeds dimension");
    }
    PolyForm::Terms out;
    std::vector<int> merged;
    for (const auto& [ia, pa] : a.terms()) {
        for (const auto& [ib, pb] : b.terms()) {
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
            Poly prod = pa * pb;
            if (inversions % 2 != 0) {
                prod = -prod;
            }
            accumulate(out, MultiIndex(merged, m), std::move(prod));
        }
    }
    return PolyForm(m, k, std::move(out));
}

PolyForm d(const PolyForm& f) {
    const int m = f.dim();
    const int k = f.degree();
    if (k >= m) {
        throw std::domain_error("d: top-degree form has no exterior derivative in range");
    }
    PolyForm::Terms out;
    std::vector<int> merged;
    for (const auto& [index, p] : f.terms()) {
        for (int i = 0; i < m; ++i) {
            if (index.contains(i)) {
                continue;
            }
            Poly dp = p.derivative(i);
            if (dp.is_zero()) {
                continue;
            }
            // dx_i ^ dx_sigma: move dx_i past the entries smaller than i.
            int before = 0;
            for (int s : index.entries()) {
                before += (s < i) ? 1 : 0;
            }
            merged = index.entries();
            merged.insert(merged.begin() + before, i);
            if (before % 2 != 0) {
                dp = -dp;
            }
            accumulate(out, MultiIndex(merged, m), std::move(dp));
        }
    }
    return PolyForm(m, k + 1, std::move(out));
}

PolyForm alpha_k(const PolyForm& f) {
    PolyForm::Terms out;
    for (const auto& [index, p] : f.terms()) {
        out.emplace(index, p.integrate_radial(f.degree()));
    }
    return PolyForm(f.dim(), f.degree(), std::move(out));
}

PolyForm iota_radial(const PolyForm& f) {
    const int m = f.dim();
    const int k = f.degree();
    if (k < 1) {
        throw std::domain_error("iota_radial: cannot contract a 0-form");
    }
    PolyForm::Terms out;
    std::vector<int> rest;
    for (const auto& [index, p] : f.terms()) {
        for (int j = 0; j < k; ++j) {
            rest = index.entries();
            rest.erase(rest.begin() + j);
            Poly c = p.times_coordinate(index[j]);
            if (j % 2 != 0) {
                c = -c;
            }
            accumulate(out, MultiIndex(rest, m), std::move(c));
        }
    }
    return PolyForm(m, k - 1, std::move(out));
}

PolyForm h(const PolyForm& f) {
    if (f.degree() < 1) {
        throw std::domain_error("h: homotopy operator needs k >= 1");
    }
    return iota_radial(alpha_k(f));
}

PolyForm h_alpha_after_iota(const PolyForm& f) {
    if (f.degree() < 1) {
        throw std::domain_error("h: homotopy operator needs k >= 1");
    }
    return alpha_k(iota_radial(f));
}

bool homotopy_identity_check(const PolyForm& f) {
    if (f.degree() < 1 || f.degree() >= f.dim()) {
        throw std::domain_error("homotopy identity needs 1 <= k < m");
    }
    const PolyForm residual = h(d(f)) + d(h(f)) - f;
    return residual.is_zero();
}

Covector evaluate(const PolyForm& f, const Vector& x) {
    if (x.size() != f.dim()) {
        throw std::invalid_argument("evaluate: point has wrong dimension");
    }
    Covector::Terms t;
    for (const auto& [index, p] : f.terms()) {
        t.emplace(index, p.evaluate(x));
    }
    return Covector(f.dim(), f.degree(), std::move(t));
}

HBoundReport h_bound_check(const PolyForm& f, const std::vector<Vector>& points, double s) {
    const int m = f.dim();
    const int k = f.degree();
    if (k < 1) {
        throw std::domain_error("h_bound_check: needs k >= 1");
    }
    const PolyForm hf = h(f);
    const bool ray_constant = f.has_constant_coefficients();
    const double general_factor =
        (k == 1) ? std::sqrt(static_cast<double>(m))
                 : std::sqrt(static_cast<double>(k) * static_cast<double>(binomial(m, k - 1))) / (k - 1);

    HBoundReport report{k, s, kRaySamples, {}, 0.0, true, true};
    double min_margin = std::numeric_limits<double>::infinity();
    for (const Vector& x : points) {
        const double r = x.norm();
        if (r > s * (1.0 + 1e-12)) {
            throw std::invalid_argument("h_bound_check: point lies outside the domain radius");
        }
        HBoundPoint pt{x, 0.0, 0.0, 0.0, 0.0, ray_constant, 0.0, 0.0};
        pt.lhs = norm2(evaluate(hf, x));
        // Constant coefficients: f(t x) does not depend on t.
        for (int i = ray_constant ? kRaySamples : 0; i <= kRaySamples; ++i) {
            const double t = static_cast<double>(i) / kRaySamples;
            pt.max_ray = std::max(pt.max_ray, norm2(evaluate(f, t * x)));
        }
        pt.rhs = r * general_factor * pt.max_ray;
        pt.margin = pt.rhs - pt.lhs;
        min_margin = std::min(min_margin, pt.margin);
        if (ray_constant) {
            pt.rhs_ray = r / std::sqrt(static_cast<double>(k)) * norm2(evaluate(f, x));
            pt.margin_ray = pt.rhs_ray - pt.lhs;
            min_margin = std::min(min_margin, pt.margin_ray);
        }
        report.points.push_back(std::move(pt));
    }
    report.min_margin = points.empty() ? 0.0 : min_margin;
    report.pass = report.min_margin >= kBoundMarginTol;
    return report;
}

// ---------------------------------------------------------------------------

Rational to_rational(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("cannot convert a non-finite value to a rational");
    }
    return Rational(x);
}

PolyMap linear_polymap(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("linear_polymap: matrix must be square");
    }
    const int m = static_cast<int>(a.rows());
    PolyMap phi;
    phi.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Poly p(m);
        for (int j = 0; j < m; ++j) {
            p = p + Poly::coordinate(m, j) * to_rational(a(i, j));
        }
        phi.push_back(std::move(p));
    }
    return phi;
}

PolyForm pullback_omega0(const PolyMap& phi) {
    const int m = static_cast<int>(phi.size());
    if (m == 0 || m % 2 != 0) {
        throw std::invalid_argument("polynomial map must have an even positive number of components");
    }
    PolyForm out(m, 2);
    for (int j = 0; j < m / 2; ++j) {
        const Poly& px = phi[static_cast<std::size_t>(2 * j)];
        const Poly& py = phi[static_cast<std::size_t>(2 * j + 1)];
        if (px.vars() != m || py.vars() != m) {
            throw std::invalid_argument("polynomial map components have wrong number of variables");
        }
        out = out + wedge(d(PolyForm::function(px)), d(PolyForm::function(py)));
    }
    return out;
}

PolyForm omega0_form(int n) {
    const int m = 2 * n;
    PolyForm out(m, 2);
    for (int j = 0; j < n; ++j) {
        out = out + PolyForm::term(MultiIndex({2 * j, 2 * j + 1}, m), Poly::constant(m, Rational(1)));
    }
    return out;
}

}  // namespace epsymp
