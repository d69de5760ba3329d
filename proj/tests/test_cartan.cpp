#include <doctest.h>

#include "heisfree/cartan.hpp"
#include "heisfree/freeness.hpp"
#include "support.hpp"

using namespace heisfree;
using namespace heisfree::testing;

namespace {

const Vector3<ExactComplex> kO = origin_lift<ExactComplex>();
const Vector3<ExactComplex> kInf = infinity_lift<ExactComplex>();

BoundaryTriple standard_triple(const ExactScalar& nu) {
    return BoundaryTriple(kO, kInf, standard_lift(ExactComplex(-1), nu));
}

// mu on the circle from a rational nu: (-1 - i nu) / (1 + nu^2)
ExactComplex circle_mu(const Rational& nu) {
    const Rational d = 1 + nu * nu;
    return ExactComplex(ExactScalar(Rational(-1 / d)), ExactScalar(Rational(-nu / d)));
}

}  // namespace

TEST_SUITE("cartan") {

TEST_CASE("standard triple has invariant arg(1 - i nu)") {
    const ExactScalar nu = make_rational(5, 2);
    const CartanInvariant inv = cartan_invariant(standard_triple(nu));
    CHECK(inv.product == ExactComplex(ExactScalar(1), -nu));
    CHECK(inv.tangent_defined);
    CHECK(inv.tangent == -nu);
    CHECK(inv.angle == doctest::Approx(std::atan2(-nu.to_double(), 1.0)));

    const CartanInvariant flat = cartan_invariant(standard_triple(ExactScalar(0)));
    CHECK(flat.angle == 0.0);
    CHECK(flat.tangent == ExactScalar(0));
}

TEST_CASE("tangent is exactly -nu for random rational nu") {
    Rng rng(60);
    for (int n = 0; n < 50; ++n) {
        const ExactScalar nu = random_exact_scalar(rng);
        const CartanInvariant inv = cartan_invariant(standard_triple(nu));
        CHECK(inv.tangent == -nu);
        CHECK(inv.angle >= -1.5707963267948966);
        CHECK(inv.angle <= 1.5707963267948966);
    }
}

TEST_CASE("triple product has nonnegative real part on random triples") {
    Rng rng(61);
    int built = 0;
    while (built < 50) {
        const auto a = random_heis_point(rng);
        const auto b = random_heis_point(rng);
        const auto c = random_heis_point(rng);
        if (a == b || b == c || a == c) continue;
        const BoundaryTriple t(standard_lift(a), standard_lift(b), standard_lift(c));
        const CartanInvariant inv = cartan_invariant(t);
        CHECK(inv.product.re.sign() >= 0);
        ++built;
    }
}

TEST_CASE("triple product is invariant under unitary maps") {
    Rng rng(62);
    for (int n = 0; n < 50; ++n) {
        const ExactScalar nu = random_exact_scalar(rng);
        const BoundaryTriple t = standard_triple(nu);
        const Matrix3<ExactComplex> g = heis_translation_matrix(random_heis_point(rng));
        const BoundaryTriple gt(g * t.p0, g * t.p1, g * t.p2);
        CHECK(cartan_invariant(gt).product == cartan_invariant(t).product);
    }
}

TEST_CASE("triple validation") {
    CHECK_THROWS_AS(BoundaryTriple(kO, kO, kInf), std::domain_error);
    const Vector3<ExactComplex> pos{ExactComplex(1), ExactComplex(0), ExactComplex(1)};
    CHECK_THROWS_AS(BoundaryTriple(kO, kInf, pos), std::domain_error);
}

TEST_CASE("polar vectors of the standard pairs") {
    const ExactScalar nu = make_rational(3, 1);
    const Vector3<ExactComplex> p2 = standard_lift(ExactComplex(-1), nu);

    // (p1, p2): proportional to (sqrt2 conj(zeta), -1, 0) = (-sqrt2, -1, 0)
    const PolarVector c0 = polar_vector(kInf, p2);
    CHECK(c0.c[0] == ExactComplex(ExactScalar::sqrt2()));  // sign normalized
    CHECK(c0.c[1] == ExactComplex(1));
    CHECK(c0.c[2] == ExactComplex(0));

    // (p0, p1): proportional to (0, 1, 0)
    const PolarVector c2 = polar_vector(kO, kInf);
    CHECK(c2.c[0] == ExactComplex(0));
    CHECK(c2.c[1] == ExactComplex(1));
    CHECK(c2.c[2] == ExactComplex(0));
}

TEST_CASE("polar vector is form-orthogonal to both inputs") {
    Rng rng(63);
    int built = 0;
    while (built < 50) {
        const auto a = random_heis_point(rng);
        const auto b = random_heis_point(rng);
        if (a == b) continue;
        const auto pa = standard_lift(a), pb = standard_lift(b);
        const PolarVector c = polar_vector(pa, pb);
        CHECK(herm_inner(pa, c.c) == ExactComplex(0));
        CHECK(herm_inner(pb, c.c) == ExactComplex(0));
        CHECK(classify_vector(c.c) == VectorClass::Positive);
        ++built;
    }
    CHECK_THROWS_AS(polar_vector(kO, kO), std::domain_error);
}

TEST_CASE("inversion matrices of the standard polar vectors") {
    // c2 = (0,1,0) -> diag(-1, 1, -1)
    const Matrix3<ExactComplex> i2 = inversion_matrix(polar_vector(kO, kInf));
    Matrix3<ExactComplex> expected;
    expected(0, 0) = ExactComplex(-1);
    expected(1, 1) = ExactComplex(1);
    expected(2, 2) = ExactComplex(-1);
    CHECK(i2 == expected);

    // c0 at zeta = -1: first row (-1, 2 sqrt2, 4), middle row (0, 1, 2 sqrt2)
    const ExactScalar nu = make_rational(2, 1);
    const Vector3<ExactComplex> p2 = standard_lift(ExactComplex(-1), nu);
    const Matrix3<ExactComplex> i0 = inversion_matrix(polar_vector(kInf, p2));
    Matrix3<ExactComplex> i0_expected;
    i0_expected(0, 0) = ExactComplex(-1);
    i0_expected(0, 1) = ExactComplex(ExactScalar(0, 2));
    i0_expected(0, 2) = ExactComplex(4);
    i0_expected(1, 1) = ExactComplex(1);
    i0_expected(1, 2) = ExactComplex(ExactScalar(0, 2));
    i0_expected(2, 2) = ExactComplex(-1);
    CHECK(i0 == i0_expected);
}

TEST_CASE("inversions are unitary involutions fixing their polar vector") {
    Rng rng(64);
    for (int n = 0; n < 50; ++n) {
        const PolarVector c(random_positive_vector(rng));
        const Matrix3<ExactComplex> inv = inversion_matrix(c);
        CHECK(is_unitary(inv));
        CHECK(inv * inv == Matrix3<ExactComplex>::identity());
        CHECK(inv * c.c == c.c);
    }
    // negative vector rejected by PolarVector
    CHECK_THROWS_AS(
        PolarVector(Vector3<ExactComplex>{ExactComplex(-1), ExactComplex(0), ExactComplex(1)}),
        std::domain_error);
}

TEST_CASE("decompose_generators at mu = -1") {
    const GeneratorDecomposition d = decompose_generators(ExactComplex(-1));
    CHECK(d.nu == ExactScalar(0));
    const auto pair = generator_pair(ExactComplex(-1));
    CHECK(d.i0 * d.i2 == pair.a);
    CHECK(d.i2 * d.i1 == pair.b);
}

TEST_CASE("decompose_generators rejects mu off the circle with the residual") {
    const ExactComplex mu(ExactScalar(make_rational(-3, 4)), ExactScalar(0));
    CHECK(circle_residual(mu) == ExactScalar(make_rational(-3, 16)));
    CHECK_THROWS_WITH_AS(decompose_generators(mu),
                         "decompose_generators: Re(mu) + |mu|^2 = -3/16 != 0",
                         std::domain_error);
    CHECK_THROWS_AS(decompose_generators(ExactComplex(0)), std::domain_error);
}

TEST_CASE("decompose_generators at nu = 1, mu = (-1-i)/2") {
    const ExactComplex mu = circle_mu(Rational(1));
    CHECK(mu == ExactComplex(ExactScalar(make_rational(-1, 2)),
                             ExactScalar(make_rational(-1, 2))));
    const GeneratorDecomposition d = decompose_generators(mu);
    CHECK(d.nu == ExactScalar(1));
    CHECK(d.i0 * d.i2 == generator_a<ExactComplex>());
    CHECK(d.i2 * d.i1 == generator_b(mu));
}

TEST_CASE("decomposition identities for random rational nu") {
    Rng rng(65);
    for (int n = 0; n < 50; ++n) {
        const Rational nu = random_rational(rng);
        const ExactComplex mu = circle_mu(nu);
        const GeneratorDecomposition d = decompose_generators(mu);
        CHECK(d.nu == ExactScalar(nu));
        CHECK(d.i0 * d.i2 == generator_a<ExactComplex>());
        CHECK(d.i2 * d.i1 == generator_b(mu));
        // |mu|^2 = 1/(1 + nu^2)
        CHECK(mu.norm_sq() == ExactScalar(Rational(1 / (1 + nu * nu))));
        // all three inversions are unitary involutions
        for (const auto* m : {&d.i0, &d.i1, &d.i2}) {
            CHECK(is_unitary(*m));
            CHECK(*m * *m == Matrix3<ExactComplex>::identity());
        }
    }
}

}  // TEST_SUITE
