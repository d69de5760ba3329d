#pragma once

#include <stdexcept>
#include <utility>

#include "heisfree/matrix.hpp"

namespace heisfree {

enum class VectorClass { Positive, Negative, Null };
enum class SiegelClass { Interior, Boundary, Exterior };

const char* to_string(VectorClass c);
const char* to_string(SiegelClass c);

// Matrix of the Hermitian form of signature (2,1): anti-diagonal ones.
// H = H*, H^2 = I.
template <class S>
Matrix3<S> form_matrix() {
    Matrix3<S> h;
    h(0, 2) = S(1);
    h(1, 1) = S(1);
    h(2, 0) = S(1);
    return h;
}

// The two distinguished null vectors.
template <class S>
Vector3<S> origin_lift() {
    return {S(0), S(0), S(1)};
}
template <class S>
Vector3<S> infinity_lift() {
    return {S(1), S(0), S(0)};
}

// <z,w> = w* H z = conj(w3) z1 + conj(w2) z2 + conj(w1) z3. Conjugates sit on
// the left factor exactly as written; over the quaternions the factor order
// is semantic.
template <class S>
S herm_inner(const Vector3<S>& z, const Vector3<S>& w) {
    using heisfree::conj;
    return conj(w[2]) * z[0] + conj(w[1]) * z[1] + conj(w[0]) * z[2];
}

// Sign of <z,z>. Exact on the exact path; on the floating path, values within
// tol * max(1, sum of entry norms squared) of zero classify as Null.
template <class S>
VectorClass classify_vector(const Vector3<S>& z, double tol = kDefaultTol) {
    if (z.is_zero()) throw std::domain_error("classify_vector: zero vector");
    S ip = herm_inner(z, z);
    if constexpr (ScalarTraits<S>::is_exact) {
        (void)tol;
        const int s = real_part(ip).sign();
        if (s == 0) return VectorClass::Null;
        return s > 0 ? VectorClass::Positive : VectorClass::Negative;
    } else {
        const double v = real_part(ip);
        const double scale =
            std::max(1.0, norm_sq(z[0]) + norm_sq(z[1]) + norm_sq(z[2]));
        if (std::abs(v) <= tol * scale) return VectorClass::Null;
        return v > 0 ? VectorClass::Positive : VectorClass::Negative;
    }
}

// Membership test for U(2,1) / Sp(2,1): g* H g = H.
template <class S>
bool is_unitary(const Matrix3<S>& g, double tol = kDefaultTol) {
    const Matrix3<S> h = form_matrix<S>();
    const Matrix3<S> ghg = g.adjoint() * h * g;
    if constexpr (ScalarTraits<S>::is_exact) {
        (void)tol;
        return ghg == h;
    } else {
        const double m = max_abs_entry(g);
        return approx_equal(ghg, h, tol * std::max(1.0, m * m));
    }
}

// Standard null lift (-|zeta|^2 + nu, sqrt2 * zeta, 1) of a finite boundary
// point; nu enters as an imaginary scalar.
template <class S>
Vector3<S> standard_lift(const S& zeta, const typename ScalarTraits<S>::Imag& nu) {
    S z1 = S(-norm_sq(zeta)) + imag_embed(nu);
    return {std::move(z1), sqrt2_scalar<S>() * zeta, S(1)};
}

// Projective coordinates (z1 z3^-1, z2 z3^-1) of a point not on the line at
// infinity; right division per the right-vector-space convention.
template <class S>
std::pair<S, S> projective_coords(const Vector3<S>& z) {
    using heisfree::is_zero;
    if (is_zero(z[2]))
        throw std::domain_error("projective_coords: third coordinate is zero");
    const S inv = z[2].inverse();
    return {z[0] * inv, z[1] * inv};
}

// Siegel domain test on projective coordinates: sign of 2 Re(w1) + |w2|^2.
template <class S>
SiegelClass siegel_membership(const S& w1, const S& w2, double tol = kDefaultTol) {
    if constexpr (ScalarTraits<S>::is_exact) {
        (void)tol;
        const ExactScalar s = ExactScalar(2) * real_part(w1) + norm_sq(w2);
        const int sg = s.sign();
        if (sg == 0) return SiegelClass::Boundary;
        return sg < 0 ? SiegelClass::Interior : SiegelClass::Exterior;
    } else {
        const double s = 2 * real_part(w1) + norm_sq(w2);
        const double scale = std::max(1.0, norm_sq(w1) + norm_sq(w2));
        if (std::abs(s) <= tol * scale) return SiegelClass::Boundary;
        return s < 0 ? SiegelClass::Interior : SiegelClass::Exterior;
    }
}

}  // namespace heisfree
