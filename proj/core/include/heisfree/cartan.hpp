#pragma once

#include "heisfree/heisenberg.hpp"

namespace heisfree {

// Triple of null lifts of distinct boundary points (exact path).
struct BoundaryTriple {
    Vector3<ExactComplex> p0, p1, p2;

    // Validates that each lift is null and no two are proportional.
    BoundaryTriple(Vector3<ExactComplex> p0_, Vector3<ExactComplex> p1_,
                   Vector3<ExactComplex> p2_);
};

// Polar vector of a complex geodesic: a positive vector c with the geodesic
// P{z : <z,c> = 0}. Scale is irrelevant downstream, entries stay exact.
struct PolarVector {
    Vector3<ExactComplex> c;

    explicit PolarVector(Vector3<ExactComplex> c_);
};

// Cartan angular invariant of a boundary triple. The full triple product
// -<p0,p1><p1,p2><p2,p0> is kept so tan A = Im/Re is available exactly; the
// floating angle is arg of that product, always in [-pi/2, pi/2].
struct CartanInvariant {
    ExactComplex product;   // Re(product) >= 0, checked exactly
    double angle;           // atan2(Im, Re)
    bool tangent_defined;   // Re(product) != 0
    ExactScalar tangent;    // Im/Re when defined, else 0
};

CartanInvariant cartan_invariant(const BoundaryTriple& t);

// The polar vector of the geodesic through two distinct boundary points.
// First nonzero entry is normalized to be real positive when a field unit
// can make it so (real or purely imaginary entry); otherwise entries are
// kept as computed.
PolarVector polar_vector(const Vector3<ExactComplex>& pa, const Vector3<ExactComplex>& pb);

// Inversion around the complex geodesic polar to c, as a matrix:
//   Z |-> -Z + 2 <Z,c>/<c,c> c.
// Unitary and an exact involution.
Matrix3<ExactComplex> inversion_matrix(const PolarVector& c);

// Re(mu) + |mu|^2; zero exactly when mu lies on the circle |mu + 1/2| = 1/2.
ExactScalar circle_residual(const ExactComplex& mu);

struct GeneratorDecomposition {
    ExactScalar nu;               // mu = (-1 - i nu) / (1 + nu^2)
    Matrix3<ExactComplex> i0, i1, i2;
};

// For mu on the circle (Re(mu) + |mu|^2 = 0, mu != 0), produces the parameter
// nu and the three inversions, built from the boundary triple
// (o, inf, lift(-1, nu)), with i0*i2 and i2*i1 recovering the generator pair.
// Throws std::domain_error carrying the residual when the constraint fails.
GeneratorDecomposition decompose_generators(const ExactComplex& mu);

}  // namespace heisfree
