#pragma once

#include <array>
#include <string>

#include "heisfree/scalars.hpp"

namespace heisfree {

// Column vector in K^{2,1}. Entries all live on one scalar path (the
// template parameter), so mixed-path expressions do not compile.
template <class S>
struct Vector3 {
    std::array<S, 3> v{};

    Vector3() = default;
    Vector3(S z1, S z2, S z3) : v{std::move(z1), std::move(z2), std::move(z3)} {}

    S& operator[](int i) { return v[static_cast<size_t>(i)]; }
    const S& operator[](int i) const { return v[static_cast<size_t>(i)]; }

    bool is_zero() const {
        using heisfree::is_zero;
        return is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]);
    }

    friend bool operator==(const Vector3& x, const Vector3& y) { return x.v == y.v; }
    friend bool operator!=(const Vector3& x, const Vector3& y) { return !(x == y); }

    friend Vector3 operator-(const Vector3& x) { return {-x.v[0], -x.v[1], -x.v[2]}; }
    friend Vector3 operator+(const Vector3& x, const Vector3& y) {
        return {x.v[0] + y.v[0], x.v[1] + y.v[1], x.v[2] + y.v[2]};
    }
    // right scalar multiple (right vector space convention)
    friend Vector3 operator*(const Vector3& x, const S& s) {
        return {x.v[0] * s, x.v[1] * s, x.v[2] * s};
    }
};

// 3x3 matrix, row-major. Entry order is preserved in products, so the same
// code is correct over the (non-commutative) quaternions.
template <class S>
struct Matrix3 {
    std::array<S, 9> m{};

    static Matrix3 identity() {
        Matrix3 r;
        r(0, 0) = S(1);
        r(1, 1) = S(1);
        r(2, 2) = S(1);
        return r;
    }

    S& operator()(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }
    const S& operator()(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }

    S trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

    // conjugate transpose
    Matrix3 adjoint() const {
        using heisfree::conj;
        Matrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = conj((*this)(j, i));
        return r;
    }

    friend Matrix3 operator*(const Matrix3& x, const Matrix3& y) {
        Matrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                S acc = x(i, 0) * y(0, j);
                acc += x(i, 1) * y(1, j);
                acc += x(i, 2) * y(2, j);
                r(i, j) = std::move(acc);
            }
        return r;
    }

    friend Vector3<S> operator*(const Matrix3& x, const Vector3<S>& z) {
        Vector3<S> r;
        for (int i = 0; i < 3; ++i) {
            S acc = x(i, 0) * z[0];
            acc += x(i, 1) * z[1];
            acc += x(i, 2) * z[2];
            r[i] = std::move(acc);
        }
        return r;
    }

    friend Matrix3 operator+(const Matrix3& x, const Matrix3& y) {
        Matrix3 r;
        for (int i = 0; i < 9; ++i) r.m[static_cast<size_t>(i)] =
            x.m[static_cast<size_t>(i)] + y.m[static_cast<size_t>(i)];
        return r;
    }
    friend Matrix3 operator-(const Matrix3& x, const Matrix3& y) {
        Matrix3 r;
        for (int i = 0; i < 9; ++i) r.m[static_cast<size_t>(i)] =
            x.m[static_cast<size_t>(i)] - y.m[static_cast<size_t>(i)];
        return r;
    }

    friend bool operator==(const Matrix3& x, const Matrix3& y) { return x.m == y.m; }
    friend bool operator!=(const Matrix3& x, const Matrix3& y) { return !(x == y); }
};

inline double max_abs_entry(const Matrix3<Quaternion>& g) {
    double m = 0;
    for (const auto& e : g.m) m = std::max(m, e.norm());
    return m;
}

inline bool approx_equal(const Matrix3<Quaternion>& x, const Matrix3<Quaternion>& y,
                         double tol) {
    for (size_t i = 0; i < 9; ++i)
        if (!approx_equal(x.m[i], y.m[i], tol)) return false;
    return true;
}

// Text form: rows separated by ';', entries by ',', scalars in their own
// serialization.
template <class S>
std::string to_string(const Matrix3<S>& g) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (i) out += ";";
        for (int j = 0; j < 3; ++j) {
            if (j) out += ",";
            out += to_string(g(i, j));
        }
    }
    return out;
}

template <class S>
std::string to_string(const Vector3<S>& z) {
    return to_string(z[0]) + ";" + to_string(z[1]) + ";" + to_string(z[2]);
}

Matrix3<ExactComplex> parse_matrix3(std::string_view text);
Vector3<ExactComplex> parse_vector3(std::string_view text);

}  // namespace heisfree
