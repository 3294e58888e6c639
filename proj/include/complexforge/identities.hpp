#ifndef COMPLEXFORGE_IDENTITIES_HPP
#define COMPLEXFORGE_IDENTITIES_HPP

#include "complexforge/calculus.hpp"
#include "complexforge/errors.hpp"

#include <string>
#include <variant>

namespace complexforge {

using FieldValue = std::variant<PolyScalarField, PolyVectorField, PolyTensorField>;

inline bool field_is_zero(const FieldValue& f) {
    return std::visit([](const auto& v) { return v.is_zero(); }, f);
}

/// (nabla P) x Q with column convention: for Q = (q1 q2 q3),
/// (nabla P) x Q := ( (d2 P) q3 - (d3 P) q2 | (d3 P) q1 - (d1 P) q3 | (d1 P) q2 - (d2 P) q1 ).
/// Together with Rot(P Q) = P Rot Q + (nabla P) x Q this is the matrix
/// product rule behind the cutting formula.
inline PolyTensorField nabla_cross(const PolyTensorField& p, const PolyTensorField& q) {
    std::array<PolyTensorField, 3> dp;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) dp[static_cast<std::size_t>(k)](i, j) = p(i, j).derivative(k);
    PolyTensorField r;
    r.set_col(0, dp[1] * q.col(2) - dp[2] * q.col(1));
    r.set_col(1, dp[2] * q.col(0) - dp[0] * q.col(2));
    r.set_col(2, dp[0] * q.col(1) - dp[1] * q.col(0));
    return r;
}

/// Algebraic term of the RotRot^T product rule; pointwise linear in m,
/// contains second derivatives of phi only.
inline PolyTensorField psi_operator(const PolyScalarField& phi, const PolyTensorField& m) {
    return nabla_cross(spn(grad(phi)), transpose(m));
}

/// Div(phi N) - phi Div N - N grad(phi); identically the zero vector field.
inline PolyVectorField cutting_div(const PolyScalarField& phi, const PolyTensorField& n) {
    return tensor_div(phi * n) - (phi * tensor_div(n) + n * grad(phi));
}

struct CuttingRotRot {
    PolyTensorField result;   // RotRot^T(phi M)
    PolyTensorField psi_term; // Psi(nabla nabla phi, M)
};

inline CuttingRotRot cutting_rotrot(const PolyScalarField& phi, const PolyTensorField& m) {
    if (!m.is_symmetric()) throw SymmetryRequired("cutting_rotrot: M must be symmetric");
    return {rot_rot_t(phi * m), psi_operator(phi, m)};
}

/// result - phi RotRot^T M - 2 sym((spn grad phi) Rot M) - psi; zero iff the formula holds.
inline PolyTensorField cutting_rotrot_residual(const PolyScalarField& phi, const PolyTensorField& m) {
    const auto [result, psi] = cutting_rotrot(phi, m);
    PolyTensorField mid = sym(spn(grad(phi)) * tensor_rot(m)) * Rational(2);
    return result - phi * rot_rot_t(m) - mid - psi;
}

namespace detail {

inline const PolyScalarField& as_scalar(const FieldValue& f, const std::string& id) {
    if (const auto* p = std::get_if<PolyScalarField>(&f)) return *p;
    throw ArityMismatch("identity " + id + " expects a scalar field");
}
inline const PolyVectorField& as_vector(const FieldValue& f, const std::string& id) {
    if (const auto* p = std::get_if<PolyVectorField>(&f)) return *p;
    throw ArityMismatch("identity " + id + " expects a vector field");
}
inline const PolyTensorField& as_tensor(const FieldValue& f, const std::string& id) {
    if (const auto* p = std::get_if<PolyTensorField>(&f)) return *p;
    throw ArityMismatch("identity " + id + " expects a tensor field");
}

} // namespace detail

/// Left-minus-right of one of the eleven calculus identities,
/// computed exactly; the zero field iff the identity holds.
/// ii' and vi' require symmetric input.
inline FieldValue verify_appendix_identity(const std::string& id, const FieldValue& input) {
    using detail::as_scalar;
    using detail::as_tensor;
    using detail::as_vector;

    if (id == "i") {
        const auto& u = as_scalar(input, id);
        return tensor_rot(PolyTensorField::identity(u)) + spn(grad(u));
    }
    if (id == "ii") {
        const auto& m = as_tensor(input, id);
        return trace(tensor_rot(m)) - Rational(2) * div(spn_inv(skw(m)));
    }
    if (id == "ii'") {
        const auto& m = as_tensor(input, id);
        if (!m.is_symmetric()) throw SymmetryRequired("identity ii' requires a symmetric tensor");
        return trace(tensor_rot(m));
    }
    if (id == "iii") {
        const auto& v = as_vector(input, id);
        return tensor_div(spn(v)) + rot(v);
    }
    if (id == "iii'") {
        const auto& m = as_tensor(input, id);
        return tensor_div(skw(m)) + rot(spn_inv(skw(m)));
    }
    if (id == "iv") {
        const auto& v = as_vector(input, id);
        return tensor_rot(spn(v)) - (PolyTensorField::identity(div(v)) - transpose(jacobian(v)));
    }
    if (id == "iv'") {
        const auto& m = as_tensor(input, id);
        const PolyVectorField v = spn_inv(skw(m));
        return tensor_rot(skw(m)) - (PolyTensorField::identity(div(v)) - transpose(jacobian(v)));
    }
    if (id == "v") {
        const auto& m = as_tensor(input, id);
        PolyVectorField v = tensor_div(transpose(m)) - grad(trace(m));
        v *= Rational(1, 2);
        return skw(tensor_rot(m)) - spn(v);
    }
    if (id == "v'") {
        const auto& m = as_tensor(input, id);
        return Rational(2) * tensor_div(sym(tensor_rot(m))) - rot(tensor_div(transpose(m)));
    }
    if (id == "vi") {
        const auto& m = as_tensor(input, id);
        return skw(rot_rot_t(m)) - rot_rot_t(skw(m));
    }
    if (id == "vi'") {
        const auto& m = as_tensor(input, id);
        if (!m.is_symmetric()) throw SymmetryRequired("identity vi' requires a symmetric tensor");
        return sym(rot_rot_t(m)) - rot_rot_t(sym(m));
    }
    throw ArityMismatch("unknown identity id '" + id + "'");
}

/// All identity ids in suite order.
inline const std::array<std::string, 11>& appendix_identity_ids() {
    static const std::array<std::string, 11> ids = {
        "i", "ii", "ii'", "iii", "iii'", "iv", "iv'", "v", "v'", "vi", "vi'"};
    return ids;
}

} // namespace complexforge

#endif
