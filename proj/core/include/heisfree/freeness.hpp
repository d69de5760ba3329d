#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heisfree/heisenberg.hpp"

namespace heisfree {

// --- words in the generators -------------------------------------------------

enum class Letter : int { A = 0, AInv = 1, B = 2, BInv = 3 };

inline Letter inverse_of(Letter l) {
    switch (l) {
        case Letter::A: return Letter::AInv;
        case Letter::AInv: return Letter::A;
        case Letter::B: return Letter::BInv;
        case Letter::BInv: return Letter::B;
    }
    return Letter::A;
}

// Freely reduced word over {A, A^-1, B, B^-1}. Text form uses case to mark
// inverses: 'A', 'a' = A^-1, 'B', 'b' = B^-1.
class ReducedWord {
public:
    ReducedWord() = default;
    explicit ReducedWord(std::vector<Letter> letters);  // throws if not reduced
    static ReducedWord parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::string to_string() const;

    friend bool operator==(const ReducedWord& x, const ReducedWord& y) {
        return x.letters_ == y.letters_;
    }
    friend bool operator!=(const ReducedWord& x, const ReducedWord& y) { return !(x == y); }

private:
    std::vector<Letter> letters_;
};

// --- verdicts ----------------------------------------------------------------

enum class VerdictKind { CertifiedFree, NonFreeWitness, NotCovered };

const char* to_string(VerdictKind k);

// Output contract of every checker. The certified conditions are sufficient
// only: failing one yields NotCovered, never a non-freeness claim.
// NonFreeWitness always carries a nonempty word whose evaluation is a
// projective identity.
struct FreenessVerdict {
    VerdictKind kind;
    std::string certificate;  // condition tag, witness word, or reason text
    std::optional<ReducedWord> witness;

    static FreenessVerdict certified(std::string tag) {
        return {VerdictKind::CertifiedFree, std::move(tag), std::nullopt};
    }
    static FreenessVerdict not_covered(std::string reason) {
        return {VerdictKind::NotCovered, std::move(reason), std::nullopt};
    }
    static FreenessVerdict witness_found(ReducedWord w) {
        std::string text = w.to_string();
        return {VerdictKind::NonFreeWitness, std::move(text), std::move(w)};
    }
};

// Condition tags carried by CertifiedFree verdicts.
inline constexpr const char* kTagCircleThreshold = "circle-threshold";
inline constexpr const char* kTagQuatSliceThreshold = "quaternion-slice-threshold";
inline constexpr const char* kTagParabolicProductBound = "parabolic-product-bound";
inline constexpr const char* kTagVerticalTranslationBound = "vertical-translation-bound";

// --- generators ----------------------------------------------------------------

// The fixed generator pair: A the constant translation, B the
// lower-triangular unipotent with parameter mu. Both unitary; B(0) = I.
template <class S>
struct GeneratorPair {
    Matrix3<S> a;
    Matrix3<S> b;
    S mu;
};

// A = T((-2, 0)) = (1, 2 sqrt2, -4; 0, 1, -2 sqrt2; 0, 0, 1).
template <class S>
Matrix3<S> generator_a() {
    return heis_translation_matrix(HeisPoint<S>{S(-2), {}});
}

// B(mu) = (1, 0, 0; 2 sqrt2 mu, 1, 0; -4 |mu|^2, -2 sqrt2 conj(mu), 1).
template <class S>
Matrix3<S> generator_b(const S& mu) {
    using heisfree::conj;
    const S s2 = sqrt2_scalar<S>();
    Matrix3<S> b = Matrix3<S>::identity();
    b(1, 0) = S(2) * s2 * mu;
    b(2, 0) = S(-4) * S(norm_sq(mu));
    b(2, 1) = S(-2) * s2 * conj(mu);
    return b;
}

template <class S>
GeneratorPair<S> generator_pair(const S& mu) {
    return {generator_a<S>(), generator_b(mu), mu};
}

// tr(A B(mu)) = 3 + 16 Re(mu) + 16 |mu|^2, returned as a real scalar.
template <class S>
S trace_ab(const S& mu) {
    if constexpr (ScalarTraits<S>::is_exact) {
        return ExactComplex(ExactScalar(3) + ExactScalar(16) * mu.re +
                            ExactScalar(16) * mu.norm_sq());
    } else {
        return Quaternion(3 + 16 * mu.r0 + 16 * mu.norm_sq());
    }
}

// Projective identity in PU(2,1): lambda * I with |lambda| = 1. Exact path:
// off-diagonal entries exactly zero, equal diagonal entries, |lambda|^2 = 1.
bool is_projective_identity(const Matrix3<ExactComplex>& g);

// --- main checkers -------------------------------------------------------------

// Sufficient condition |mu|^2 = -Re(mu) >= 3/128, decided exactly.
// With search_depth > 0, a NotCovered verdict is upgraded to NonFreeWitness
// when the word engine finds an identity word at that depth.
FreenessVerdict check_free_main(const ExactComplex& mu, int search_depth = 0,
                                int workers = 1);

// Quaternionic case: same threshold within tol, reduced to the complex slice
// through tau = Re(mu) + sqrt(|mu|^2 - Re(mu)^2) i.
FreenessVerdict check_free_quat(const Quaternion& mu, double tol = kDefaultTol);
Quaternion complex_slice_tau(const Quaternion& mu);

// The refuted prior sufficient condition,
//   1 / sqrt(1 + arctan(sqrt(125/3))^2) <= |mu|,
// evaluated in floating arithmetic. Kept only to demonstrate that satisfying
// it does not imply freeness.
double refuted_modulus_bound();
bool refuted_modulus_condition(const ExactComplex& mu);

// Two-parabolic condition |m n| >= 4, decided exactly as |m|^2 |n|^2 >= 16.
FreenessVerdict check_free_lu(const ExactComplex& m, const ExactComplex& n);

// 2x2 complex matrix and its block embedding (a, 0, b; 0, 1, 0; c, 0, d),
// an exact multiplicative homomorphism.
struct Matrix2 {
    ExactComplex a, b, c, d;

    static Matrix2 identity() {
        return {ExactComplex(1), ExactComplex(0), ExactComplex(0), ExactComplex(1)};
    }
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Matrix2& x, const Matrix2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

Matrix3<ExactComplex> embed_2x2(const Matrix2& m);

// Vertical quaternionic translations (1,0,tau;0,1,0;0,0,1), (1,0,0;0,1,0;tau,0,1):
// free when |tau| >= 2 (within tol). The conjugator and the conjugated pair
// are returned for inspection.
struct VerticalQuatCheck {
    FreenessVerdict verdict;
    Quaternion alpha;            // unit; alpha tau alpha^-1 = |tau| i
    Matrix3<Quaternion> a1, b1;  // the pair conjugated by diag(alpha, 1, alpha)
};

VerticalQuatCheck check_free_vertical_quat(const ImaginaryQuat& tau,
                                           double tol = kDefaultTol);

// Unit quaternion alpha with alpha tau alpha^-1 = |tau| i. Construction:
// u = tau/|tau|; j when u = -i, else (1 - i u)/|1 - i u|.
Quaternion quat_conjugator(const ImaginaryQuat& tau);

// --- word engine ---------------------------------------------------------------

inline constexpr int kMaxWordSearchDepth = 16;

// Matrices of the four letters, indexed by Letter. Inverses use the closed
// forms A^-1 = T((2,0)) and B(mu)^-1 = B(-mu).
template <class S>
std::array<Matrix3<S>, 4> letter_matrices(const GeneratorPair<S>& pair) {
    return {pair.a, heis_translation_matrix(HeisPoint<S>{S(2), {}}), pair.b,
            generator_b(S(-pair.mu))};
}

// Left-to-right product of generator matrices; empty word = identity.
template <class S>
Matrix3<S> word_evaluate(const GeneratorPair<S>& pair, const ReducedWord& w) {
    const auto gens = letter_matrices(pair);
    Matrix3<S> acc = Matrix3<S>::identity();
    for (Letter l : w.letters()) acc = acc * gens[static_cast<size_t>(l)];
    return acc;
}

// Exhaustive search over freely reduced words of length 1..max_len, shortest
// first, ties broken lexicographically in the letter order A < A^-1 < B < B^-1.
// Returns the first word evaluating to a projective identity. With
// workers > 1 the per-length scan is partitioned by first letter; the result
// is identical to the sequential search.
std::optional<ReducedWord> identity_word_search(const GeneratorPair<ExactComplex>& pair,
                                                int max_len, int workers = 1);

// --- threshold bookkeeping -------------------------------------------------------

// |mu|^2 = 1/(1 + nu^2) and the two equivalent inequalities
// |mu|^2 >= 3/128 and nu^2 <= 125/3, all exact.
struct ThresholdReport {
    Rational mu_abs_sq;
    bool mu_bound_holds;
    bool nu_bound_holds;
};

ThresholdReport threshold_equivalence(const Rational& nu);
ThresholdReport threshold_equivalence_sq(const Rational& nu_sq);

}  // namespace heisfree
