#ifndef COMPLEXFORGE_POLY_HPP
#define COMPLEXFORGE_POLY_HPP

#include "complexforge/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace complexforge {

/// Monomial x1^a1 x2^a2 x3^a3 in three variables.
struct Monomial {
    std::array<std::uint32_t, 3> exp{0, 0, 0};

    std::uint32_t degree() const { return exp[0] + exp[1] + exp[2]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order: total degree first, then the exponent
/// triple lexicographically.  This fixes the canonical term order used
/// for serialization and equality.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{{a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]}};
}

/// Sparse multivariate polynomial over the rationals.
/// Invariant: no stored zero coefficients.
class PolyScalarField {
  public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    PolyScalarField() = default;

    static PolyScalarField constant(Rational c) {
        PolyScalarField p;
        p.add_term(Monomial{}, std::move(c));
        return p;
    }

    /// x_i for i in {0,1,2}
    static PolyScalarField variable(int i, Rational c = 1) {
        Monomial m;
        m.exp[static_cast<std::size_t>(i)] = 1;
        PolyScalarField p;
        p.add_term(m, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int total_degree() const {
        // terms_ is graded, so the last key has maximal degree
        if (terms_.empty()) return -1;
        return static_cast<int>(std::prev(terms_.end())->first.degree());
    }

    PolyScalarField& operator+=(const PolyScalarField& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PolyScalarField& operator-=(const PolyScalarField& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    PolyScalarField& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend PolyScalarField operator+(PolyScalarField a, const PolyScalarField& b) { return a += b; }
    friend PolyScalarField operator-(PolyScalarField a, const PolyScalarField& b) { return a -= b; }
    friend PolyScalarField operator-(const PolyScalarField& a) {
        PolyScalarField r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend PolyScalarField operator*(PolyScalarField a, const Rational& s) { return a *= s; }
    friend PolyScalarField operator*(const Rational& s, PolyScalarField a) { return a *= s; }

    friend PolyScalarField operator*(const PolyScalarField& a, const PolyScalarField& b) {
        PolyScalarField r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend bool operator==(const PolyScalarField&, const PolyScalarField&) = default;

    /// Partial derivative with respect to x_i.
    PolyScalarField derivative(int i) const {
        const auto idx = static_cast<std::size_t>(i);
        PolyScalarField r;
        for (const auto& [m, c] : terms_) {
            if (m.exp[idx] == 0) continue;
            Monomial d = m;
            d.exp[idx] -= 1;
            r.add_term(d, c * Rational(m.exp[idx]));
        }
        return r;
    }

    /// Substitution x -> x + delta (binomial expansion per variable).
    PolyScalarField translated(const std::array<Rational, 3>& delta) const {
        PolyScalarField r;
        for (const auto& [m, c] : terms_) {
            PolyScalarField term = PolyScalarField::constant(c);
            for (int i = 0; i < 3; ++i) {
                PolyScalarField lin = PolyScalarField::variable(i);
                lin += PolyScalarField::constant(delta[static_cast<std::size_t>(i)]);
                for (std::uint32_t k = 0; k < m.exp[static_cast<std::size_t>(i)]; ++k)
                    term = term * lin;
            }
            r += term;
        }
        return r;
    }

    Rational evaluate(const std::array<Rational, 3>& x) const {
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::uint32_t k = 0; k < m.exp[i]; ++k) v *= x[i];
            sum += v;
        }
        return sum;
    }

  private:
    TermMap terms_;
};

/// 3-vector of polynomial components.
struct PolyVectorField {
    std::array<PolyScalarField, 3> comp;

    static PolyVectorField zero() { return {}; }

    static PolyVectorField unit(int i, Rational c = 1) {
        PolyVectorField v;
        v.comp[static_cast<std::size_t>(i)] = PolyScalarField::constant(std::move(c));
        return v;
    }

    /// The coordinate field x.
    static PolyVectorField position() {
        PolyVectorField v;
        for (int i = 0; i < 3; ++i) v.comp[static_cast<std::size_t>(i)] = PolyScalarField::variable(i);
        return v;
    }

    const PolyScalarField& operator[](int i) const { return comp[static_cast<std::size_t>(i)]; }
    PolyScalarField& operator[](int i) { return comp[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        return comp[0].is_zero() && comp[1].is_zero() && comp[2].is_zero();
    }
    int total_degree() const {
        int d = -1;
        for (const auto& c : comp) d = std::max(d, c.total_degree());
        return d;
    }

    PolyVectorField& operator+=(const PolyVectorField& o) {
        for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] += o[i];
        return *this;
    }
    PolyVectorField& operator-=(const PolyVectorField& o) {
        for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] -= o[i];
        return *this;
    }
    PolyVectorField& operator*=(const Rational& s) {
        for (auto& c : comp) c *= s;
        return *this;
    }
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
    friend PolyVectorField operator-(const PolyVectorField& a) {
        PolyVectorField r;
        for (int i = 0; i < 3; ++i) r[i] = -a[i];
        return r;
    }
    friend PolyVectorField operator*(PolyVectorField a, const Rational& s) { return a *= s; }
    friend PolyVectorField operator*(const Rational& s, PolyVectorField a) { return a *= s; }
    friend PolyVectorField operator*(const PolyScalarField& s, const PolyVectorField& a) {
        PolyVectorField r;
        for (int i = 0; i < 3; ++i) r[i] = s * a[i];
        return r;
    }
    friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

    friend PolyScalarField dot(const PolyVectorField& a, const PolyVectorField& b) {
        PolyScalarField r;
        for (int i = 0; i < 3; ++i) r += a[i] * b[i];
        return r;
    }
    friend PolyVectorField cross(const PolyVectorField& a, const PolyVectorField& b) {
        PolyVectorField r;
        r[0] = a[1] * b[2] - a[2] * b[1];
        r[1] = a[2] * b[0] - a[0] * b[2];
        r[2] = a[0] * b[1] - a[1] * b[0];
        return r;
    }
};

/// 3x3 grid of polynomial entries.
struct PolyTensorField {
    std::array<std::array<PolyScalarField, 3>, 3> entry;

    static PolyTensorField zero() { return {}; }

    /// c * I
    static PolyTensorField identity(const PolyScalarField& c = PolyScalarField::constant(1)) {
        PolyTensorField t;
        for (int i = 0; i < 3; ++i) t(i, i) = c;
        return t;
    }

    static PolyTensorField outer(const PolyVectorField& a, const PolyVectorField& b) {
        PolyTensorField t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t(i, j) = a[i] * b[j];
        return t;
    }

    const PolyScalarField& operator()(int i, int j) const {
        return entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    PolyScalarField& operator()(int i, int j) {
        return entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    PolyVectorField row(int i) const {
        PolyVectorField r;
        for (int j = 0; j < 3; ++j) r[j] = (*this)(i, j);
        return r;
    }
    PolyVectorField col(int j) const {
        PolyVectorField c;
        for (int i = 0; i < 3; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_row(int i, const PolyVectorField& v) {
        for (int j = 0; j < 3; ++j) (*this)(i, j) = v[j];
    }
    void set_col(int j, const PolyVectorField& v) {
        for (int i = 0; i < 3; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!(*this)(i, j).is_zero()) return false;
        return true;
    }
    bool is_symmetric() const {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }
    int total_degree() const {
        int d = -1;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) d = std::max(d, (*this)(i, j).total_degree());
        return d;
    }

    PolyTensorField& operator+=(const PolyTensorField& o) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) (*this)(i, j) += o(i, j);
        return *this;
    }
    PolyTensorField& operator-=(const PolyTensorField& o) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) (*this)(i, j) -= o(i, j);
        return *this;
    }
    PolyTensorField& operator*=(const Rational& s) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) (*this)(i, j) *= s;
        return *this;
    }
    friend PolyTensorField operator+(PolyTensorField a, const PolyTensorField& b) { return a += b; }
    friend PolyTensorField operator-(PolyTensorField a, const PolyTensorField& b) { return a -= b; }
    friend PolyTensorField operator-(const PolyTensorField& a) {
        PolyTensorField r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = -a(i, j);
        return r;
    }
    friend PolyTensorField operator*(PolyTensorField a, const Rational& s) { return a *= s; }
    friend PolyTensorField operator*(const Rational& s, PolyTensorField a) { return a *= s; }
    friend PolyTensorField operator*(const PolyScalarField& s, const PolyTensorField& a) {
        PolyTensorField r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = s * a(i, j);
        return r;
    }
    friend bool operator==(const PolyTensorField&, const PolyTensorField&) = default;

    /// matrix-matrix product
    friend PolyTensorField operator*(const PolyTensorField& a, const PolyTensorField& b) {
        PolyTensorField r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
        return r;
    }
    /// matrix-vector product
    friend PolyVectorField operator*(const PolyTensorField& a, const PolyVectorField& v) {
        PolyVectorField r;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r[i] += a(i, k) * v[k];
        return r;
    }
};

} // namespace complexforge

#endif
