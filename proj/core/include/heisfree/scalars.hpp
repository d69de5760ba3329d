#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heisfree {

// Arbitrary-precision rational, always kept canonical (lowest terms,
// positive denominator).
using Rational = mpq_class;

// Default relative tolerance for the floating (quaternion) path.
inline constexpr double kDefaultTol = 1e-12;

Rational make_rational(long num, long den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
struct ExactScalar {
    Rational a;  // coefficient of 1
    Rational b;  // coefficient of sqrt(2)

    ExactScalar() : a(0), b(0) {}
    ExactScalar(long v) : a(v), b(0) {}
    ExactScalar(const Rational& v) : a(v), b(0) {}
    ExactScalar(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    static ExactScalar sqrt2() { return ExactScalar(Rational(0), Rational(1)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    // Exact sign of a + b*sqrt2, decided by case analysis on the signs of
    // a and b, comparing a^2 against 2 b^2 when they differ.
    int sign() const {
        const int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        const int c = cmp(Rational(a * a), Rational(2 * b * b));
        if (c == 0) return 0;  // unreachable for rational a, b not both zero
        return c > 0 ? sa : sb;
    }

    double to_double() const { return a.get_d() + b.get_d() * std::sqrt(2.0); }

    // Multiplicative inverse via the conjugate: (a - b*sqrt2) / (a^2 - 2 b^2).
    ExactScalar inverse() const {
        if (is_zero()) throw std::domain_error("ExactScalar: inverse of zero");
        Rational d(a * a - 2 * b * b);
        return ExactScalar(Rational(a / d), Rational(-b / d));
    }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        return ExactScalar(Rational(x.a + y.a), Rational(x.b + y.b));
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        return ExactScalar(Rational(x.a - y.a), Rational(x.b - y.b));
    }
    friend ExactScalar operator-(const ExactScalar& x) {
        return ExactScalar(Rational(-x.a), Rational(-x.b));
    }
    // (a1 a2 + 2 b1 b2) + (a1 b2 + b1 a2) sqrt2
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        return ExactScalar(Rational(x.a * y.a + 2 * x.b * y.b),
                           Rational(x.a * y.b + x.b * y.a));
    }
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
        return x * y.inverse();
    }
    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }
    friend bool operator<(const ExactScalar& x, const ExactScalar& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const ExactScalar& x, const ExactScalar& y) { return y < x; }
    friend bool operator<=(const ExactScalar& x, const ExactScalar& y) { return !(y < x); }
    friend bool operator>=(const ExactScalar& x, const ExactScalar& y) { return !(x < y); }
};

std::string to_string(const ExactScalar& x);
ExactScalar parse_exact_scalar(std::string_view text);

// Complex number over Q(sqrt 2): the exact scalar path.
struct ExactComplex {
    ExactScalar re;
    ExactScalar im;

    ExactComplex() = default;
    ExactComplex(long v) : re(v) {}
    ExactComplex(const Rational& v) : re(v) {}
    ExactComplex(const ExactScalar& v) : re(v) {}
    ExactComplex(ExactScalar re_, ExactScalar im_) : re(std::move(re_)), im(std::move(im_)) {}

    static ExactComplex i() { return ExactComplex(ExactScalar(0), ExactScalar(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    ExactComplex conjugate() const { return ExactComplex(re, -im); }
    ExactScalar norm_sq() const { return re * re + im * im; }

    ExactComplex inverse() const {
        if (is_zero()) throw std::domain_error("ExactComplex: inverse of zero");
        ExactScalar d = norm_sq().inverse();
        return ExactComplex(re * d, -im * d);
    }

    double real_d() const { return re.to_double(); }
    double imag_d() const { return im.to_double(); }

    friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
        return ExactComplex(x.re + y.re, x.im + y.im);
    }
    friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
        return ExactComplex(x.re - y.re, x.im - y.im);
    }
    friend ExactComplex operator-(const ExactComplex& x) {
        return ExactComplex(-x.re, -x.im);
    }
    friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
        return ExactComplex(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
        return x * y.inverse();
    }
    ExactComplex& operator+=(const ExactComplex& y) { return *this = *this + y; }
    ExactComplex& operator-=(const ExactComplex& y) { return *this = *this - y; }
    ExactComplex& operator*=(const ExactComplex& y) { return *this = *this * y; }

    friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }
};

std::string to_string(const ExactComplex& z);
ExactComplex parse_exact_complex(std::string_view text);

struct ImaginaryQuat;

// Quaternion r0 + r1 i + r2 j + r3 k over floating reals: the numeric path.
struct Quaternion {
    double r0 = 0, r1 = 0, r2 = 0, r3 = 0;

    Quaternion() = default;
    Quaternion(double v) : r0(v) {}
    Quaternion(double r0_, double r1_, double r2_, double r3_)
        : r0(r0_), r1(r1_), r2(r2_), r3(r3_) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    Quaternion conjugate() const { return {r0, -r1, -r2, -r3}; }
    double norm_sq() const { return r0 * r0 + r1 * r1 + r2 * r2 + r3 * r3; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_zero() const { return r0 == 0 && r1 == 0 && r2 == 0 && r3 == 0; }

    Quaternion inverse() const {
        if (is_zero()) throw std::domain_error("Quaternion: inverse of zero");
        const double n2 = norm_sq();
        return {r0 / n2, -r1 / n2, -r2 / n2, -r3 / n2};
    }

    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.r0 + q.r0, p.r1 + q.r1, p.r2 + q.r2, p.r3 + q.r3};
    }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.r0 - q.r0, p.r1 - q.r1, p.r2 - q.r2, p.r3 - q.r3};
    }
    friend Quaternion operator-(const Quaternion& p) {
        return {-p.r0, -p.r1, -p.r2, -p.r3};
    }
    // Hamilton product; non-commutative.
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.r0 * q.r0 - p.r1 * q.r1 - p.r2 * q.r2 - p.r3 * q.r3,
                p.r0 * q.r1 + p.r1 * q.r0 + p.r2 * q.r3 - p.r3 * q.r2,
                p.r0 * q.r2 - p.r1 * q.r3 + p.r2 * q.r0 + p.r3 * q.r1,
                p.r0 * q.r3 + p.r1 * q.r2 - p.r2 * q.r1 + p.r3 * q.r0};
    }
    friend Quaternion operator*(const Quaternion& p, double s) {
        return {p.r0 * s, p.r1 * s, p.r2 * s, p.r3 * s};
    }
    friend Quaternion operator*(double s, const Quaternion& p) { return p * s; }
    friend Quaternion operator/(const Quaternion& p, double s) {
        return {p.r0 / s, p.r1 / s, p.r2 / s, p.r3 / s};
    }
    Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }
    Quaternion& operator*=(const Quaternion& q) { return *this = *this * q; }

    friend bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.r0 == q.r0 && p.r1 == q.r1 && p.r2 == q.r2 && p.r3 == q.r3;
    }
    friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }
};

inline bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) {
    return (p - q).norm() <= tol;
}

std::string to_string(const Quaternion& q);
Quaternion parse_quaternion(std::string_view text);

// Purely imaginary quaternion t1 i + t2 j + t3 k; the real part is zero by
// representation.
struct ImaginaryQuat {
    double t1 = 0, t2 = 0, t3 = 0;

    ImaginaryQuat() = default;
    ImaginaryQuat(double t1_, double t2_, double t3_) : t1(t1_), t2(t2_), t3(t3_) {}

    double norm_sq() const { return t1 * t1 + t2 * t2 + t3 * t3; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_zero() const { return t1 == 0 && t2 == 0 && t3 == 0; }

    friend ImaginaryQuat operator+(const ImaginaryQuat& x, const ImaginaryQuat& y) {
        return {x.t1 + y.t1, x.t2 + y.t2, x.t3 + y.t3};
    }
    friend ImaginaryQuat operator-(const ImaginaryQuat& x, const ImaginaryQuat& y) {
        return {x.t1 - y.t1, x.t2 - y.t2, x.t3 - y.t3};
    }
    friend ImaginaryQuat operator-(const ImaginaryQuat& x) {
        return {-x.t1, -x.t2, -x.t3};
    }
    friend ImaginaryQuat operator*(double s, const ImaginaryQuat& x) {
        return {s * x.t1, s * x.t2, s * x.t3};
    }
    friend bool operator==(const ImaginaryQuat& x, const ImaginaryQuat& y) {
        return x.t1 == y.t1 && x.t2 == y.t2 && x.t3 == y.t3;
    }
};

// --- scalar-path glue -------------------------------------------------------
//
// The geometry layers are templated on the scalar type S, where S is either
// ExactComplex (exact path) or Quaternion (floating path). The Real/Imag
// associated types and the free functions below are the only surface those
// templates use.

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactComplex> {
    static constexpr bool is_exact = true;
    using Real = ExactScalar;   // real part / Hermitian norms
    using Imag = ExactScalar;   // coefficient of the imaginary unit
};

template <>
struct ScalarTraits<Quaternion> {
    static constexpr bool is_exact = false;
    using Real = double;
    using Imag = ImaginaryQuat;
};

inline ExactComplex conj(const ExactComplex& z) { return z.conjugate(); }
inline ExactScalar real_part(const ExactComplex& z) { return z.re; }
inline ExactScalar imag_part(const ExactComplex& z) { return z.im; }
inline ExactScalar norm_sq(const ExactComplex& z) { return z.norm_sq(); }
inline ExactComplex imag_embed(const ExactScalar& v) {
    return ExactComplex(ExactScalar(0), v);
}
inline bool is_zero(const ExactComplex& z) { return z.is_zero(); }

inline Quaternion conj(const Quaternion& q) { return q.conjugate(); }
inline double real_part(const Quaternion& q) { return q.r0; }
inline ImaginaryQuat imag_part(const Quaternion& q) { return {q.r1, q.r2, q.r3}; }
inline double norm_sq(const Quaternion& q) { return q.norm_sq(); }
inline Quaternion imag_embed(const ImaginaryQuat& t) { return {0, t.t1, t.t2, t.t3}; }
inline bool is_zero(const Quaternion& q) { return q.is_zero(); }

template <class S>
S sqrt2_scalar() {
    if constexpr (ScalarTraits<S>::is_exact) {
        return ExactComplex(ExactScalar::sqrt2());
    } else {
        return Quaternion(std::sqrt(2.0));
    }
}

inline double to_double(const ExactScalar& v) { return v.to_double(); }
inline double to_double(double v) { return v; }

}  // namespace heisfree
