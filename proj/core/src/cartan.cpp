#include "heisfree/cartan.hpp"

#include <cmath>
#include <utility>

#include "heisfree/freeness.hpp"

namespace heisfree {

namespace {

// Bilinear cross product (no conjugation). Orthogonal to both arguments
// under the plain dot product, which is what the form-orthogonality on the
// conjugated, reversed coordinates needs.
Vector3<ExactComplex> cross(const Vector3<ExactComplex>& x, const Vector3<ExactComplex>& y) {
    return {x[1] * y[2] - x[2] * y[1],
            x[2] * y[0] - x[0] * y[2],
            x[0] * y[1] - x[1] * y[0]};
}

}  // namespace

BoundaryTriple::BoundaryTriple(Vector3<ExactComplex> p0_, Vector3<ExactComplex> p1_,
                               Vector3<ExactComplex> p2_)
    : p0(std::move(p0_)), p1(std::move(p1_)), p2(std::move(p2_)) {
    for (const auto* p : {&p0, &p1, &p2})
        if (classify_vector(*p) != VectorClass::Null)
            throw std::domain_error("BoundaryTriple: lift is not null");
    // for null vectors, <z,w> = 0 exactly when they are proportional
    if (herm_inner(p0, p1).is_zero() || herm_inner(p1, p2).is_zero() ||
        herm_inner(p2, p0).is_zero())
        throw std::domain_error("BoundaryTriple: points are not pairwise distinct");
}

PolarVector::PolarVector(Vector3<ExactComplex> c_) : c(std::move(c_)) {
    if (classify_vector(c) != VectorClass::Positive)
        throw std::domain_error("PolarVector: vector is not positive");
}

CartanInvariant cartan_invariant(const BoundaryTriple& t) {
    const ExactComplex product =
        -(herm_inner(t.p0, t.p1) * herm_inner(t.p1, t.p2) * herm_inner(t.p2, t.p0));
    if (product.is_zero())
        throw std::domain_error("cartan_invariant: degenerate triple");
    if (product.re.sign() < 0)
        throw std::logic_error("cartan_invariant: triple product has negative real part");
    CartanInvariant inv;
    inv.product = product;
    inv.angle = std::atan2(product.im.to_double(), product.re.to_double());
    inv.tangent_defined = !product.re.is_zero();
    inv.tangent = inv.tangent_defined ? product.im / product.re : ExactScalar(0);
    return inv;
}

PolarVector polar_vector(const Vector3<ExactComplex>& pa, const Vector3<ExactComplex>& pb) {
    if (classify_vector(pa) != VectorClass::Null || classify_vector(pb) != VectorClass::Null)
        throw std::domain_error("polar_vector: inputs must be null");
    const Vector3<ExactComplex> d = cross(pa, pb);
    if (d.is_zero()) throw std::domain_error("polar_vector: proportional inputs");
    Vector3<ExactComplex> c(d[2].conjugate(), d[1].conjugate(), d[0].conjugate());

    // first-nonzero-entry normalization: make it real positive when a unit
    // of the field can (entry real or purely imaginary), else leave as is
    int k = 0;
    while (c[k].is_zero()) ++k;
    if (c[k].im.is_zero()) {
        if (c[k].re.sign() < 0) c = -c;
    } else if (c[k].re.is_zero()) {
        c = c * ExactComplex(ExactScalar(0), ExactScalar(-1));  // times -i
        if (c[k].re.sign() < 0) c = -c;
    }
    return PolarVector(std::move(c));
}

Matrix3<ExactComplex> inversion_matrix(const PolarVector& pv) {
    const Vector3<ExactComplex>& c = pv.c;
    const ExactComplex cc = herm_inner(c, c);
    const ExactComplex scale = ExactComplex(ExactScalar(2) / cc.re);
    // M = -I + (2/<c,c>) c c* H; right-multiplying by H permutes columns
    Matrix3<ExactComplex> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m(i, j) = scale * c[i] * c[2 - j].conjugate();
            if (i == j) m(i, j) -= ExactComplex(1);
        }
    return m;
}

ExactScalar circle_residual(const ExactComplex& mu) { return mu.re + mu.norm_sq(); }

GeneratorDecomposition decompose_generators(const ExactComplex& mu) {
    const ExactScalar residual = circle_residual(mu);
    if (!residual.is_zero())
        throw std::domain_error("decompose_generators: Re(mu) + |mu|^2 = " +
                                to_string(residual) + " != 0");
    if (mu.is_zero())
        throw std::domain_error("decompose_generators: mu must be nonzero");

    const ExactScalar nu = mu.im / mu.re;
    const Vector3<ExactComplex> p0 = origin_lift<ExactComplex>();
    const Vector3<ExactComplex> p1 = infinity_lift<ExactComplex>();
    const Vector3<ExactComplex> p2 = standard_lift(ExactComplex(-1), nu);

    GeneratorDecomposition out{nu,
                               inversion_matrix(polar_vector(p1, p2)),
                               inversion_matrix(polar_vector(p0, p2)),
                               inversion_matrix(polar_vector(p0, p1))};

    const GeneratorPair<ExactComplex> pair = generator_pair(mu);
    if (out.i0 * out.i2 != pair.a || out.i2 * out.i1 != pair.b)
        throw std::logic_error("decompose_generators: generator recovery failed");
    return out;
}

}  // namespace heisfree
