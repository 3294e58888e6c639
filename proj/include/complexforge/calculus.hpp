#ifndef COMPLEXFORGE_CALCULUS_HPP
#define COMPLEXFORGE_CALCULUS_HPP

#include "complexforge/errors.hpp"
#include "complexforge/poly.hpp"

namespace complexforge {

// ---------------------------------------------------------------------------
// pointwise matrix algebra
// ---------------------------------------------------------------------------

inline PolyTensorField transpose(const PolyTensorField& a) {
    PolyTensorField r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
    return r;
}

inline PolyTensorField sym(const PolyTensorField& a) {
    PolyTensorField r = a + transpose(a);
    return r *= Rational(1, 2);
}

inline PolyTensorField skw(const PolyTensorField& a) {
    PolyTensorField r = a - transpose(a);
    return r *= Rational(1, 2);
}

inline PolyScalarField trace(const PolyTensorField& a) {
    PolyScalarField t;
    for (int i = 0; i < 3; ++i) t += a(i, i);
    return t;
}

/// spn(v) w = v x w
inline PolyTensorField spn(const PolyVectorField& v) {
    PolyTensorField r;
    r(0, 1) = -v[2];
    r(0, 2) = v[1];
    r(1, 0) = v[2];
    r(1, 2) = -v[0];
    r(2, 0) = -v[1];
    r(2, 1) = v[0];
    return r;
}

/// Inverse of spn on exactly skew-symmetric tensors.
inline PolyVectorField spn_inv(const PolyTensorField& a) {
    PolyTensorField s = a + transpose(a);
    if (!s.is_zero() || !a(0, 0).is_zero() || !a(1, 1).is_zero() || !a(2, 2).is_zero())
        throw NotSkew("spn_inv: input tensor is not skew-symmetric");
    PolyVectorField v;
    v[0] = a(2, 1);
    v[1] = a(0, 2);
    v[2] = a(1, 0);
    return v;
}

// ---------------------------------------------------------------------------
// differential operators (vector calculus)
// ---------------------------------------------------------------------------

inline PolyVectorField grad(const PolyScalarField& u) {
    PolyVectorField g;
    for (int i = 0; i < 3; ++i) g[i] = u.derivative(i);
    return g;
}

inline PolyVectorField rot(const PolyVectorField& v) {
    PolyVectorField r;
    r[0] = v[2].derivative(1) - v[1].derivative(2);
    r[1] = v[0].derivative(2) - v[2].derivative(0);
    r[2] = v[1].derivative(0) - v[0].derivative(1);
    return r;
}

inline PolyScalarField div(const PolyVectorField& v) {
    PolyScalarField d;
    for (int i = 0; i < 3; ++i) d += v[i].derivative(i);
    return d;
}

/// Jacobian: (nabla v)_{ij} = d_j v_i, so row i is grad(v_i).
inline PolyTensorField jacobian(const PolyVectorField& v) {
    PolyTensorField j;
    for (int i = 0; i < 3; ++i) j.set_row(i, grad(v[i]));
    return j;
}

inline PolyTensorField sym_grad(const PolyVectorField& v) { return sym(jacobian(v)); }

// ---------------------------------------------------------------------------
// row-wise tensor operators
// ---------------------------------------------------------------------------

/// Rot: rot applied to each row.
inline PolyTensorField tensor_rot(const PolyTensorField& m) {
    PolyTensorField r;
    for (int i = 0; i < 3; ++i) r.set_row(i, rot(m.row(i)));
    return r;
}

/// Rot^T M := (Rot M)^T
inline PolyTensorField tensor_rot_t(const PolyTensorField& m) { return transpose(tensor_rot(m)); }

/// Div: div applied to each row.
inline PolyVectorField tensor_div(const PolyTensorField& m) {
    PolyVectorField d;
    for (int i = 0; i < 3; ++i) d[i] = div(m.row(i));
    return d;
}

/// Saint-Venant operator Rot (Rot M)^T.
inline PolyTensorField rot_rot_t(const PolyTensorField& m) {
    return tensor_rot(tensor_rot_t(m));
}

} // namespace complexforge

#endif
