#pragma once

#include "heisfree/hermitian.hpp"

namespace heisfree {

// Point (zeta, nu) of the generalized Heisenberg group N2 = K x Im(K).
// nu is the imaginary part, stored by its real coefficient data: an
// ExactScalar coefficient of i on the exact path, an ImaginaryQuat on the
// quaternion path. Purely imaginary by representation.
template <class S>
struct HeisPoint {
    using Imag = typename ScalarTraits<S>::Imag;

    S zeta{};
    Imag nu{};

    HeisPoint() = default;
    HeisPoint(S zeta_, Imag nu_) : zeta(std::move(zeta_)), nu(std::move(nu_)) {}

    friend bool operator==(const HeisPoint& p, const HeisPoint& q) {
        return p.zeta == q.zeta && p.nu == q.nu;
    }
    friend bool operator!=(const HeisPoint& p, const HeisPoint& q) { return !(p == q); }
};

// Group law (zeta1, nu1)(zeta2, nu2) = (zeta1 + zeta2, nu1 + nu2 + 2 Im(zeta2* zeta1)).
template <class S>
HeisPoint<S> heis_mul(const HeisPoint<S>& p, const HeisPoint<S>& q) {
    using heisfree::conj;
    S twist = conj(q.zeta) * p.zeta;
    return {p.zeta + q.zeta, p.nu + q.nu + 2 * imag_part(twist)};
}

template <class S>
HeisPoint<S> heis_inverse(const HeisPoint<S>& p) {
    return {-p.zeta, -p.nu};
}

// Left action of (zeta0, nu0); equals heis_mul(p0, p).
template <class S>
HeisPoint<S> heis_action(const HeisPoint<S>& p0, const HeisPoint<S>& p) {
    return heis_mul(p0, p);
}

template <class S>
bool is_vertical(const HeisPoint<S>& p) {
    using heisfree::is_zero;
    return is_zero(p.zeta);
}

// Heisenberg translation as a unipotent matrix:
//   ( 1  -sqrt2 conj(zeta0)  -|zeta0|^2 + nu0 )
//   ( 0        1                sqrt2 zeta0   )
//   ( 0        0                     1        )
template <class S>
Matrix3<S> heis_translation_matrix(const HeisPoint<S>& p) {
    using heisfree::conj;
    const S s2 = sqrt2_scalar<S>();
    Matrix3<S> t = Matrix3<S>::identity();
    t(0, 1) = -(s2 * conj(p.zeta));
    t(0, 2) = S(-norm_sq(p.zeta)) + imag_embed(p.nu);
    t(1, 2) = s2 * p.zeta;
    return t;
}

template <class S>
Vector3<S> standard_lift(const HeisPoint<S>& p) {
    return standard_lift(p.zeta, p.nu);
}

// ExactComplex path text form: "(zeta; nu)".
std::string to_string(const HeisPoint<ExactComplex>& p);
HeisPoint<ExactComplex> parse_heis_point(std::string_view text);

}  // namespace heisfree
