#ifndef COMPLEXFORGE_POINCARE_HPP
#define COMPLEXFORGE_POINCARE_HPP

#include "complexforge/calculus.hpp"
#include "complexforge/errors.hpp"

#include <string>

namespace complexforge {

/// Base point of the homotopy integrals. Polynomials are global, so any
/// rational center is admissible; the domain of interest has to be
/// star-shaped with respect to it.
struct HomotopyCenter {
    std::array<Rational, 3> point{Rational(0), Rational(0), Rational(0)};

    bool is_origin() const {
        return point[0] == 0 && point[1] == 0 && point[2] == 0;
    }
};

namespace detail {

inline std::array<Rational, 3> negated(const std::array<Rational, 3>& p) {
    return {-p[0], -p[1], -p[2]};
}

inline PolyScalarField translated(const PolyScalarField& f, const std::array<Rational, 3>& d) {
    return f.translated(d);
}
inline PolyVectorField translated(const PolyVectorField& f, const std::array<Rational, 3>& d) {
    PolyVectorField r;
    for (int i = 0; i < 3; ++i) r[i] = f[i].translated(d);
    return r;
}

// u(x) = int_0^1 x . v(tx) dt, term-wise: degree-d term gains 1/(d+1).
inline PolyScalarField grad_homotopy_origin(const PolyVectorField& v) {
    PolyScalarField u;
    for (int i = 0; i < 3; ++i) {
        for (const auto& [m, c] : v[i].terms()) {
            Monomial shifted = m;
            shifted.exp[static_cast<std::size_t>(i)] += 1;
            u.add_term(shifted, c / Rational(m.degree() + 1));
        }
    }
    return u;
}

// A(x) = int_0^1 t (w(tx) x x) dt, term-wise factor 1/(d+2).
inline PolyVectorField curl_homotopy_origin(const PolyVectorField& w) {
    PolyVectorField a;
    PolyVectorField x = PolyVectorField::position();
    for (int i = 0; i < 3; ++i) {
        for (const auto& [m, c] : w[i].terms()) {
            PolyVectorField term = cross(PolyVectorField::unit(i, c / Rational(m.degree() + 2)), x);
            PolyScalarField mono;
            mono.add_term(m, Rational(1));
            a += mono * term;
        }
    }
    return a;
}

// E(x) = int_0^1 t^2 f(tx) x dt, term-wise factor 1/(d+3).
inline PolyVectorField div_homotopy_origin(const PolyScalarField& f) {
    PolyVectorField e;
    PolyVectorField x = PolyVectorField::position();
    for (const auto& [m, c] : f.terms()) {
        PolyScalarField mono;
        mono.add_term(m, c / Rational(m.degree() + 3));
        e += mono * x;
    }
    return e;
}

} // namespace detail

/// Potential of a curl-free field: grad(result) = v, result(center) = 0.
inline PolyScalarField poincare_grad_potential(const PolyVectorField& v,
                                               const HomotopyCenter& center = {}) {
    if (!rot(v).is_zero()) throw NotClosed("poincare_grad_potential: rot(v) != 0");
    if (center.is_origin()) return detail::grad_homotopy_origin(v);
    auto shifted = detail::translated(v, center.point);
    return detail::grad_homotopy_origin(shifted).translated(detail::negated(center.point));
}

/// Potential of a divergence-free field: rot(result) = w.
inline PolyVectorField poincare_curl_potential(const PolyVectorField& w,
                                               const HomotopyCenter& center = {}) {
    if (!div(w).is_zero()) throw NotSolenoidal("poincare_curl_potential: div(w) != 0");
    if (center.is_origin()) return detail::curl_homotopy_origin(w);
    auto shifted = detail::translated(w, center.point);
    return detail::translated(detail::curl_homotopy_origin(shifted), detail::negated(center.point));
}

/// Divergence potential, defined on every polynomial: div(result) = f.
inline PolyVectorField poincare_div_potential(const PolyScalarField& f,
                                              const HomotopyCenter& center = {}) {
    if (center.is_origin()) return detail::div_homotopy_origin(f);
    auto shifted = f.translated(center.point);
    return detail::translated(detail::div_homotopy_origin(shifted), detail::negated(center.point));
}

// ---------------------------------------------------------------------------
// row-wise lifts for the vector de Rham complex
// ---------------------------------------------------------------------------

/// Given G with Rot G = 0, the vector v with nabla v = G.
inline PolyVectorField rowwise_grad_potential(const PolyTensorField& g,
                                              const HomotopyCenter& center = {}) {
    PolyVectorField v;
    for (int i = 0; i < 3; ++i) {
        try {
            v[i] = poincare_grad_potential(g.row(i), center);
        } catch (const NotClosed&) {
            throw NotClosed("rowwise grad potential: row " + std::to_string(i) + " is not closed");
        }
    }
    return v;
}

/// Given N with Div N = 0, the tensor E with Rot E = N.
inline PolyTensorField rowwise_curl_potential(const PolyTensorField& n,
                                              const HomotopyCenter& center = {}) {
    PolyTensorField e;
    for (int i = 0; i < 3; ++i) {
        try {
            e.set_row(i, poincare_curl_potential(n.row(i), center));
        } catch (const NotSolenoidal&) {
            throw NotSolenoidal("rowwise curl potential: row " + std::to_string(i) +
                                " is not solenoidal");
        }
    }
    return e;
}

/// The tensor E with Div E = v.
inline PolyTensorField rowwise_div_potential(const PolyVectorField& v,
                                             const HomotopyCenter& center = {}) {
    PolyTensorField e;
    for (int i = 0; i < 3; ++i) e.set_row(i, poincare_div_potential(v[i], center));
    return e;
}

} // namespace complexforge

#endif
