#ifndef COMPLEXFORGE_ELASTICITY_HPP
#define COMPLEXFORGE_ELASTICITY_HPP

#include "complexforge/identities.hpp"
#include "complexforge/poincare.hpp"
#include "complexforge/rational_linalg.hpp"

#include <array>
#include <optional>

namespace complexforge {

// ---------------------------------------------------------------------------
// rigid motions
// ---------------------------------------------------------------------------

/// The six-dimensional kernel of sym-grad: three translations e_i and
/// three rotations spn(e_i) x.
inline std::array<PolyVectorField, 6> rigid_motion_basis() {
    std::array<PolyVectorField, 6> basis;
    const PolyVectorField x = PolyVectorField::position();
    for (int i = 0; i < 3; ++i) {
        basis[static_cast<std::size_t>(i)] = PolyVectorField::unit(i);
        basis[static_cast<std::size_t>(3 + i)] = cross(PolyVectorField::unit(i), x);
    }
    return basis;
}

/// spn(b) x + q from basis coefficients (c0..c2 translation, c3..c5 rotation).
inline PolyVectorField rigid_motion(const std::array<Rational, 6>& c) {
    const auto basis = rigid_motion_basis();
    PolyVectorField r;
    for (std::size_t i = 0; i < 6; ++i) r += basis[i] * c[i];
    return r;
}

/// Exact membership test for the rigid-motion space; returns the basis
/// coefficients when v = spn(b) x + q, nullopt otherwise.
inline std::optional<std::array<Rational, 6>> rigid_motion_coefficients(const PolyVectorField& v) {
    if (v.total_degree() > 1) return std::nullopt;
    const PolyTensorField j = jacobian(v);
    if (!sym(j).is_zero()) return std::nullopt;
    std::array<Rational, 6> c;
    for (int i = 0; i < 3; ++i)
        c[static_cast<std::size_t>(i)] = v[i].evaluate({Rational(0), Rational(0), Rational(0)});
    // constant skew Jacobian: b = spn^{-1}(j)
    c[3] = j(2, 1).evaluate({Rational(0), Rational(0), Rational(0)});
    c[4] = j(0, 2).evaluate({Rational(0), Rational(0), Rational(0)});
    c[5] = j(1, 0).evaluate({Rational(0), Rational(0), Rational(0)});
    return (rigid_motion(c) == v) ? std::optional(c) : std::nullopt;
}

// ---------------------------------------------------------------------------
// explicit potential operators
// ---------------------------------------------------------------------------

/// Potential of the Saint-Venant kernel: v with sym_grad(v) = M.
/// Construction: v = P_grad(M + spn P_grad Rot^T M).
inline PolyVectorField potential_sym_grad(const PolyTensorField& m,
                                          const HomotopyCenter& center = {}) {
    if (!m.is_symmetric()) throw SymmetryRequired("potential_sym_grad: M must be symmetric");
    if (!rot_rot_t(m).is_zero())
        throw NotInKernel("potential_sym_grad: RotRot^T M != 0");
    const PolyVectorField u = rowwise_grad_potential(tensor_rot_t(m), center);
    return rowwise_grad_potential(m + spn(u), center);
}

/// Potential for the Saint-Venant operator: symmetric M with RotRot^T M = N.
/// Construction: M = sym P_rot((P_rot N)^T - (tr P_rot N) I).
inline PolyTensorField potential_rot_rot_t(const PolyTensorField& n,
                                           const HomotopyCenter& center = {}) {
    if (!n.is_symmetric()) throw SymmetryRequired("potential_rot_rot_t: N must be symmetric");
    if (!tensor_div(n).is_zero())
        throw NotSolenoidal("potential_rot_rot_t: Div N != 0");
    const PolyTensorField e = rowwise_curl_potential(n, center);
    const PolyTensorField e_tilde = transpose(e) - PolyTensorField::identity(trace(e));
    return sym(rowwise_curl_potential(e_tilde, center));
}

/// Symmetric divergence potential: symmetric N with Div N = v.
/// Construction from the two-step divergence lift,
/// N = sym(E - 2 Rot(E_tilde^T)) with E_tilde = P_div(spn^{-1} skw E).
inline PolyTensorField potential_div_sym(const PolyVectorField& v,
                                         const HomotopyCenter& center = {}) {
    const PolyTensorField e = rowwise_div_potential(v, center);
    const PolyTensorField e_tilde = rowwise_div_potential(spn_inv(skw(e)), center);
    return sym(e - Rational(2) * tensor_rot(transpose(e_tilde)));
}

// ---------------------------------------------------------------------------
// regular decompositions
// ---------------------------------------------------------------------------

struct ElasticityDecomposition {
    PolyTensorField smooth;  // symmetric
    FieldValue potential;    // vector (sym-grad branch) or tensor (RotRot^T branch)
    PolyTensorField residual;

    bool residual_zero() const { return residual.is_zero(); }
};

/// M = smooth + sym_grad(w), smooth = P_RotRotT(RotRot^T M).
inline ElasticityDecomposition decompose_rotrot_domain(const PolyTensorField& m,
                                                       const HomotopyCenter& center = {}) {
    if (!m.is_symmetric()) throw SymmetryRequired("decompose_rotrot_domain: M must be symmetric");
    ElasticityDecomposition d;
    d.smooth = potential_rot_rot_t(rot_rot_t(m), center);
    const PolyVectorField w = potential_sym_grad(m - d.smooth, center);
    d.potential = w;
    d.residual = m - d.smooth - sym_grad(w);
    return d;
}

/// N = smooth + RotRot^T(P), smooth = P_Div(Div N).
inline ElasticityDecomposition decompose_div_domain(const PolyTensorField& n,
                                                    const HomotopyCenter& center = {}) {
    if (!n.is_symmetric()) throw SymmetryRequired("decompose_div_domain: N must be symmetric");
    ElasticityDecomposition d;
    d.smooth = potential_div_sym(tensor_div(n), center);
    const PolyTensorField p = potential_rot_rot_t(n - d.smooth, center);
    d.potential = p;
    d.residual = n - d.smooth - rot_rot_t(p);
    return d;
}

// ---------------------------------------------------------------------------
// L2 projection onto rigid motions over a box
// ---------------------------------------------------------------------------

/// Axis-aligned box with rational corners; admits exact monomial moments.
struct Box {
    std::array<Rational, 3> lo{Rational(-1), Rational(-1), Rational(-1)};
    std::array<Rational, 3> hi{Rational(1), Rational(1), Rational(1)};
};

namespace detail {

inline Rational power(Rational base, std::uint32_t e) {
    Rational r = 1;
    for (std::uint32_t k = 0; k < e; ++k) r *= base;
    return r;
}

} // namespace detail

/// Exact integral of a polynomial over the box.
inline Rational integrate_box(const PolyScalarField& f, const Box& box) {
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational v = c;
        for (std::size_t i = 0; i < 3; ++i) {
            const std::uint32_t e = m.exp[i] + 1;
            v *= (detail::power(box.hi[i], e) - detail::power(box.lo[i], e)) / Rational(e);
        }
        sum += v;
    }
    return sum;
}

inline Rational inner_product_box(const PolyVectorField& a, const PolyVectorField& b,
                                  const Box& box) {
    return integrate_box(dot(a, b), box);
}

struct RigidMotionProjection {
    std::array<Rational, 6> coefficients;
    PolyVectorField remainder;
};

/// L2(box)-orthogonal projection onto the rigid motions: Gram solve with
/// exact monomial moments. The remainder is exactly orthogonal to RM.
inline RigidMotionProjection project_rigid_motions(const PolyVectorField& v, const Box& box = {}) {
    for (std::size_t i = 0; i < 3; ++i)
        if (box.lo[i] == box.hi[i]) throw DegenerateBox("project_rigid_motions: box has zero volume");
    const auto basis = rigid_motion_basis();
    RationalMatrix gram(6, 6);
    std::vector<Rational> rhs(6);
    for (std::size_t i = 0; i < 6; ++i) {
        rhs[i] = inner_product_box(basis[i], v, box);
        for (std::size_t j = 0; j < 6; ++j)
            gram.at(i, j) = inner_product_box(basis[i], basis[j], box);
    }
    auto sol = rational_solve(gram, rhs);
    // the Gram matrix of a basis over a nondegenerate box is invertible
    RigidMotionProjection p;
    for (std::size_t i = 0; i < 6; ++i) p.coefficients[i] = (*sol)[i];
    p.remainder = v - rigid_motion(p.coefficients);
    return p;
}

} // namespace complexforge

#endif
