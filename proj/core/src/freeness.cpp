#include "heisfree/freeness.hpp"

#include <cmath>
#include <future>
#include <utility>

#include "heisfree/cartan.hpp"

namespace heisfree {

// --- words ---------------------------------------------------------------------

ReducedWord::ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (size_t i = 1; i < letters_.size(); ++i)
        if (letters_[i] == inverse_of(letters_[i - 1]))
            throw std::invalid_argument("ReducedWord: adjacent inverse pair at position " +
                                        std::to_string(i));
}

ReducedWord ReducedWord::parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'A': letters.push_back(Letter::A); break;
            case 'a': letters.push_back(Letter::AInv); break;
            case 'B': letters.push_back(Letter::B); break;
            case 'b': letters.push_back(Letter::BInv); break;
            case ' ': break;
            default:
                throw std::invalid_argument(std::string("ReducedWord: bad letter '") + c + "'");
        }
    }
    return ReducedWord(std::move(letters));
}

std::string ReducedWord::to_string() const {
    static constexpr char kChars[4] = {'A', 'a', 'B', 'b'};
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out.push_back(kChars[static_cast<int>(l)]);
    return out;
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedFree: return "CertifiedFree";
        case VerdictKind::NonFreeWitness: return "NonFreeWitness";
        case VerdictKind::NotCovered: return "NotCovered";
    }
    return "?";
}

// --- projective identity ---------------------------------------------------------

bool is_projective_identity(const Matrix3<ExactComplex>& g) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !g(i, j).is_zero()) return false;
    if (g(0, 0) != g(1, 1) || g(1, 1) != g(2, 2)) return false;
    return g(0, 0).norm_sq() == ExactScalar(1);
}

// --- condition checkers -----------------------------------------------------------

FreenessVerdict check_free_main(const ExactComplex& mu, int search_depth, int workers) {
    const ExactScalar ns = mu.norm_sq();
    const bool on_circle = ns == -mu.re;
    const bool above = ns >= ExactScalar(make_rational(3, 128));
    if (on_circle && above) return FreenessVerdict::certified(kTagCircleThreshold);

    if (search_depth > 0) {
        if (auto w = identity_word_search(generator_pair(mu), search_depth, workers))
            return FreenessVerdict::witness_found(std::move(*w));
    }

    std::string reason;
    if (!on_circle) {
        reason = "circle constraint fails: Re(mu) + |mu|^2 = " +
                 to_string(circle_residual(mu));
    } else {
        reason = "|mu|^2 = " + to_string(ns) + " below threshold 3/128";
    }
    if (search_depth > 0)
        reason += "; no identity word up to depth " + std::to_string(search_depth);
    return FreenessVerdict::not_covered(std::move(reason));
}

Quaternion complex_slice_tau(const Quaternion& mu) {
    const double rad = mu.norm_sq() - mu.r0 * mu.r0;
    if (rad < 0)
        throw std::domain_error("complex_slice_tau: |mu|^2 < Re(mu)^2");
    return {mu.r0, std::sqrt(rad), 0, 0};
}

FreenessVerdict check_free_quat(const Quaternion& mu, double tol) {
    const Quaternion tau = complex_slice_tau(mu);
    const double ns = tau.norm_sq();
    const double re = tau.r0;
    const bool on_circle = std::abs(ns + re) <= tol * std::max(1.0, std::abs(ns));
    const bool above = ns >= 3.0 / 128.0 - tol;
    if (on_circle && above) return FreenessVerdict::certified(kTagQuatSliceThreshold);

    std::string reason = on_circle ? "|mu|^2 below threshold 3/128"
                                   : "circle constraint fails: |Re(mu) + |mu|^2| > tol";
    return FreenessVerdict::not_covered(std::move(reason));
}

double refuted_modulus_bound() {
    const double t = std::atan(std::sqrt(125.0 / 3.0));
    return 1.0 / std::sqrt(1.0 + t * t);
}

bool refuted_modulus_condition(const ExactComplex& mu) {
    return std::sqrt(mu.norm_sq().to_double()) >= refuted_modulus_bound();
}

FreenessVerdict check_free_lu(const ExactComplex& m, const ExactComplex& n) {
    const ExactScalar prod = m.norm_sq() * n.norm_sq();
    if (prod >= ExactScalar(16))
        return FreenessVerdict::certified(kTagParabolicProductBound);
    return FreenessVerdict::not_covered("|mn|^2 = " + to_string(prod) + " below 16");
}

Matrix3<ExactComplex> embed_2x2(const Matrix2& m) {
    Matrix3<ExactComplex> g;
    g(0, 0) = m.a;
    g(0, 2) = m.b;
    g(1, 1) = ExactComplex(1);
    g(2, 0) = m.c;
    g(2, 2) = m.d;
    return g;
}

Quaternion quat_conjugator(const ImaginaryQuat& tau) {
    if (tau.is_zero()) throw std::domain_error("quat_conjugator: tau must be nonzero");
    const Quaternion u = imag_embed(tau) / tau.norm();
    const Quaternion q = Quaternion(1) - Quaternion::i() * u;
    const double n = q.norm();
    if (n <= 1e-12) return Quaternion::j();  // u = -i; j(-i)j^-1 = i
    return q / n;
}

VerticalQuatCheck check_free_vertical_quat(const ImaginaryQuat& tau, double tol) {
    if (tau.is_zero())
        throw std::domain_error("check_free_vertical_quat: tau must be nonzero");

    const Quaternion alpha = quat_conjugator(tau);
    const Quaternion alpha_inv = alpha.conjugate();  // unit quaternion

    Matrix3<Quaternion> a = heis_translation_matrix(HeisPoint<Quaternion>{{}, tau});
    Matrix3<Quaternion> b = Matrix3<Quaternion>::identity();
    b(2, 0) = imag_embed(tau);

    Matrix3<Quaternion> c = Matrix3<Quaternion>::identity();
    c(0, 0) = alpha;
    c(2, 2) = alpha;
    Matrix3<Quaternion> c_inv = Matrix3<Quaternion>::identity();
    c_inv(0, 0) = alpha_inv;
    c_inv(2, 2) = alpha_inv;

    VerticalQuatCheck out;
    out.alpha = alpha;
    out.a1 = c * a * c_inv;
    out.b1 = c * b * c_inv;
    if (tau.norm_sq() >= 4.0 - tol) {
        out.verdict = FreenessVerdict::certified(kTagVerticalTranslationBound);
    } else {
        out.verdict = FreenessVerdict::not_covered("|tau| < 2");
    }
    return out;
}

// --- word search -----------------------------------------------------------------

namespace {

constexpr std::array<Letter, 4> kLetterOrder = {Letter::A, Letter::AInv, Letter::B,
                                                Letter::BInv};

// Depth-first scan of the freely reduced words of exactly `len` letters that
// extend `word`, in lexicographic letter order; true at the first word whose
// product is a projective identity. Reduction is enforced at generation time
// (a letter never follows its inverse).
bool search_suffix(const std::array<Matrix3<ExactComplex>, 4>& gens, int len,
                   const Matrix3<ExactComplex>& acc, std::vector<Letter>& word) {
    if (static_cast<int>(word.size()) == len) return is_projective_identity(acc);
    for (Letter l : kLetterOrder) {
        if (!word.empty() && l == inverse_of(word.back())) continue;
        word.push_back(l);
        if (search_suffix(gens, len, acc * gens[static_cast<size_t>(l)], word)) return true;
        word.pop_back();
    }
    return false;
}

}  // namespace

std::optional<ReducedWord> identity_word_search(const GeneratorPair<ExactComplex>& pair,
                                                int max_len, int workers) {
    if (max_len < 1)
        throw std::invalid_argument("identity_word_search: max_len must be >= 1");
    if (max_len > kMaxWordSearchDepth)
        throw std::invalid_argument("identity_word_search: max_len " +
                                    std::to_string(max_len) + " exceeds budget " +
                                    std::to_string(kMaxWordSearchDepth));

    const auto gens = letter_matrices(pair);

    // lengths in lockstep: the winner is the shortest witness, lexicographic
    // among equals, whether or not the per-length scan is partitioned
    for (int len = 1; len <= max_len; ++len) {
        if (workers <= 1) {
            std::vector<Letter> word;
            if (search_suffix(gens, len, Matrix3<ExactComplex>::identity(), word))
                return ReducedWord(std::move(word));
        } else {
            std::array<std::future<std::optional<std::vector<Letter>>>, 4> parts;
            for (int first = 0; first < 4; ++first) {
                parts[static_cast<size_t>(first)] = std::async(
                    std::launch::async,
                    [&gens, len, first]() -> std::optional<std::vector<Letter>> {
                        std::vector<Letter> word{static_cast<Letter>(first)};
                        if (search_suffix(gens, len, gens[static_cast<size_t>(first)], word))
                            return word;
                        return std::nullopt;
                    });
            }
            for (auto& part : parts)
                if (auto word = part.get()) return ReducedWord(std::move(*word));
        }
    }
    return std::nullopt;
}

// --- thresholds --------------------------------------------------------------------

ThresholdReport threshold_equivalence_sq(const Rational& nu_sq) {
    if (sgn(nu_sq) < 0)
        throw std::domain_error("threshold_equivalence: nu^2 must be nonnegative");
    const Rational mu_abs_sq = Rational(1) / (Rational(1) + nu_sq);
    return {mu_abs_sq, mu_abs_sq >= make_rational(3, 128), nu_sq <= make_rational(125, 3)};
}

ThresholdReport threshold_equivalence(const Rational& nu) {
    return threshold_equivalence_sq(Rational(nu * nu));
}

}  // namespace heisfree
