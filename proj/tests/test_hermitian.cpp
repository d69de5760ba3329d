#include <doctest.h>

#include "heisfree/freeness.hpp"
#include "heisfree/hermitian.hpp"
#include "support.hpp"

using namespace heisfree;
using namespace heisfree::testing;

namespace {
const Vector3<ExactComplex> kO = origin_lift<ExactComplex>();
const Vector3<ExactComplex> kInf = infinity_lift<ExactComplex>();
}  // namespace

TEST_SUITE("hermitian") {

TEST_CASE("form matrix is an involutive Hermitian matrix") {
    const Matrix3<ExactComplex> h = form_matrix<ExactComplex>();
    CHECK(h.adjoint() == h);
    CHECK(h * h == Matrix3<ExactComplex>::identity());
}

TEST_CASE("inner products of the distinguished lifts") {
    CHECK(herm_inner(kO, kInf) == ExactComplex(1));
    CHECK(herm_inner(kO, kO) == ExactComplex(0));

    // p2 = (-1 + i nu, -sqrt2, 1): <p2, p0> = -1 + i nu
    const ExactScalar nu = make_rational(5, 3);
    const Vector3<ExactComplex> p2 = standard_lift(ExactComplex(-1), nu);
    CHECK(p2[0] == ExactComplex(ExactScalar(-1), nu));
    CHECK(p2[1] == ExactComplex(-ExactScalar::sqrt2()));
    CHECK(herm_inner(p2, kO) == ExactComplex(ExactScalar(-1), nu));
}

TEST_CASE("vector classification") {
    CHECK(classify_vector(kO) == VectorClass::Null);
    CHECK(classify_vector(Vector3<ExactComplex>{ExactComplex(-1), ExactComplex(0),
                                                ExactComplex(1)}) ==
          VectorClass::Negative);
    CHECK(classify_vector(Vector3<ExactComplex>{ExactComplex(1), ExactComplex(0),
                                                ExactComplex(1)}) ==
          VectorClass::Positive);
    CHECK_THROWS_AS(classify_vector(Vector3<ExactComplex>{}), std::domain_error);
}

TEST_CASE("unitarity predicate") {
    CHECK(is_unitary(Matrix3<ExactComplex>::identity()));
    CHECK(is_unitary(generator_a<ExactComplex>()));
    Matrix3<ExactComplex> d = Matrix3<ExactComplex>::identity();
    d(0, 0) = ExactComplex(2);
    CHECK_FALSE(is_unitary(d));
}

TEST_CASE("standard lift lands on the null cone") {
    CHECK(standard_lift(HeisPoint<ExactComplex>{}) == kO);

    Rng rng(42);
    for (int n = 0; n < 100; ++n) {
        const Vector3<ExactComplex> z = random_null_lift(rng);
        CHECK(classify_vector(z) == VectorClass::Null);
    }
}

TEST_CASE("Siegel domain membership") {
    using EC = ExactComplex;
    CHECK(siegel_membership(EC(-1), EC(0)) == SiegelClass::Interior);
    CHECK(siegel_membership(EC(-1), EC(ExactScalar::sqrt2())) == SiegelClass::Boundary);
    CHECK(siegel_membership(EC(0), EC(1)) == SiegelClass::Exterior);
}

TEST_CASE("unitary maps preserve classification and the form") {
    Rng rng(43);
    for (int n = 0; n < 100; ++n) {
        Matrix3<ExactComplex> g;
        switch (n % 4) {
            case 0: g = heis_translation_matrix(random_heis_point(rng)); break;
            case 1: g = generator_a<ExactComplex>(); break;
            case 2: g = generator_b(random_exact_complex(rng)); break;
            default:
                g = inversion_matrix(PolarVector(random_positive_vector(rng)));
                break;
        }
        REQUIRE(is_unitary(g));
        const Vector3<ExactComplex> z =
            (n % 2) ? random_null_lift(rng) : random_negative_vector(rng);
        const Vector3<ExactComplex> w = random_null_lift(rng);
        CHECK(classify_vector(g * z) == classify_vector(z));
        CHECK(herm_inner(g * z, g * w) == herm_inner(z, w));
    }
}

TEST_CASE("projective coordinates use right division and match the Siegel test") {
    Rng rng(45);
    for (int n = 0; n < 50; ++n) {
        const auto [w1, w2] = projective_coords(random_null_lift(rng));
        CHECK(siegel_membership(w1, w2) == SiegelClass::Boundary);
        const auto [n1, n2] = projective_coords(random_negative_vector(rng));
        CHECK(siegel_membership(n1, n2) == SiegelClass::Interior);
    }
    // quaternion path: z3^-1 multiplies on the right
    const Vector3<Quaternion> z{Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0},
                                Quaternion{0, 0, 0, 2}};
    const auto [w1, w2] = projective_coords(z);
    CHECK(approx_equal(w1, Quaternion::i() * Quaternion::k().inverse() * 0.5, 1e-15));
    CHECK(approx_equal(w2, Quaternion::j() * Quaternion::k().inverse() * 0.5, 1e-15));
    CHECK_THROWS_AS(projective_coords(infinity_lift<ExactComplex>()), std::domain_error);
}

TEST_CASE("quaternion path: lift, classification, unitarity within tolerance") {
    Rng rng(44);
    for (int n = 0; n < 50; ++n) {
        const Quaternion zeta = random_quaternion(rng);
        const ImaginaryQuat nu = random_imaginary_quat(rng);
        const Vector3<Quaternion> z = standard_lift(zeta, nu);
        CHECK(classify_vector(z) == VectorClass::Null);
        const Matrix3<Quaternion> t =
            heis_translation_matrix(HeisPoint<Quaternion>{zeta, nu});
        CHECK(is_unitary(t));
    }
    // conjugate symmetry with quaternion entries: <z,w> = conj(<w,z>)
    for (int n = 0; n < 50; ++n) {
        const Vector3<Quaternion> z{random_quaternion(rng), random_quaternion(rng),
                                    random_quaternion(rng)};
        const Vector3<Quaternion> w{random_quaternion(rng), random_quaternion(rng),
                                    random_quaternion(rng)};
        CHECK(approx_equal(herm_inner(z, w), herm_inner(w, z).conjugate(), 1e-9));
    }
}

TEST_CASE("matrix text round-trips") {
    const Matrix3<ExactComplex> a = generator_a<ExactComplex>();
    CHECK(parse_matrix3(to_string(a)) == a);
    const Vector3<ExactComplex> p2 =
        standard_lift(ExactComplex(-1), ExactScalar(make_rational(1, 3)));
    CHECK(parse_vector3(to_string(p2)) == p2);
}

}  // TEST_SUITE
