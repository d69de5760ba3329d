#pragma once

// Shared helpers for the test suites: deterministic random generators and
// independent oracles (kept free of the code paths they check).

#include <array>
#include <random>

#include "heisfree/cartan.hpp"
#include "heisfree/freeness.hpp"

namespace heisfree::testing {

using Rng = std::mt19937;

inline Rational random_rational(Rng& rng, long max_num = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline ExactScalar random_exact_scalar(Rng& rng) {
    return ExactScalar(random_rational(rng), random_rational(rng));
}

inline ExactScalar random_nonzero_exact_scalar(Rng& rng) {
    for (;;) {
        ExactScalar x = random_exact_scalar(rng);
        if (!x.is_zero()) return x;
    }
}

inline ExactComplex random_exact_complex(Rng& rng) {
    return ExactComplex(random_exact_scalar(rng), random_exact_scalar(rng));
}

// mu with plain rational real and imaginary parts
inline ExactComplex random_rational_complex(Rng& rng) {
    return ExactComplex(ExactScalar(random_rational(rng)),
                        ExactScalar(random_rational(rng)));
}

inline double random_real(Rng& rng, double lo = -2.0, double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

inline Quaternion random_quaternion(Rng& rng) {
    return {random_real(rng), random_real(rng), random_real(rng), random_real(rng)};
}

inline ImaginaryQuat random_imaginary_quat(Rng& rng) {
    for (;;) {
        ImaginaryQuat t{random_real(rng), random_real(rng), random_real(rng)};
        if (!t.is_zero()) return t;
    }
}

inline HeisPoint<ExactComplex> random_heis_point(Rng& rng) {
    return {random_exact_complex(rng), random_exact_scalar(rng)};
}

inline Vector3<ExactComplex> random_null_lift(Rng& rng) {
    return standard_lift(random_heis_point(rng));
}

// Positive vector built by pushing e2 = (0,1,0) around with a unitary
// translation; classification is preserved, so the result stays positive.
inline Vector3<ExactComplex> random_positive_vector(Rng& rng) {
    const Matrix3<ExactComplex> t = heis_translation_matrix(random_heis_point(rng));
    Vector3<ExactComplex> e2{ExactComplex(0), ExactComplex(1), ExactComplex(0)};
    return t * e2;
}

inline Vector3<ExactComplex> random_negative_vector(Rng& rng) {
    const Matrix3<ExactComplex> t = heis_translation_matrix(random_heis_point(rng));
    // (-1, 0, 1) has <z,z> = -2
    Vector3<ExactComplex> z{ExactComplex(-1), ExactComplex(0), ExactComplex(1)};
    return t * z;
}

// --- oracles -------------------------------------------------------------------

// Independent quaternion product: left-multiplication by p as a 4x4 real
// matrix acting on the coefficient vector of q.
inline Quaternion quat_mul_oracle(const Quaternion& p, const Quaternion& q) {
    const std::array<std::array<double, 4>, 4> lm{{
        {p.r0, -p.r1, -p.r2, -p.r3},
        {p.r1, p.r0, -p.r3, p.r2},
        {p.r2, p.r3, p.r0, -p.r1},
        {p.r3, -p.r2, p.r1, p.r0},
    }};
    const std::array<double, 4> qc{q.r0, q.r1, q.r2, q.r3};
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            out[static_cast<size_t>(i)] +=
                lm[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                qc[static_cast<size_t>(k)];
    return {out[0], out[1], out[2], out[3]};
}

// Exact matrix inverse by Gauss-Jordan elimination with exact pivoting.
// Throws on singular input. Independent of the closed-form inverses used by
// the word engine.
inline Matrix3<ExactComplex> gauss_inverse(Matrix3<ExactComplex> a) {
    Matrix3<ExactComplex> inv = Matrix3<ExactComplex>::identity();
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        while (pivot < 3 && a(pivot, col).is_zero()) ++pivot;
        if (pivot == 3) throw std::domain_error("gauss_inverse: singular matrix");
        if (pivot != col) {
            for (int j = 0; j < 3; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const ExactComplex scale = a(col, col).inverse();
        for (int j = 0; j < 3; ++j) {
            a(col, j) = scale * a(col, j);
            inv(col, j) = scale * inv(col, j);
        }
        for (int row = 0; row < 3; ++row) {
            if (row == col || a(row, col).is_zero()) continue;
            const ExactComplex f = a(row, col);
            for (int j = 0; j < 3; ++j) {
                a(row, j) -= f * a(col, j);
                inv(row, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace heisfree::testing
