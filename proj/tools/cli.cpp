#include "cli.hpp"

#include <fstream>

#include "heisfree/cartan.hpp"
#include "heisfree/freeness.hpp"

namespace heisfree::cli {

namespace {

Json float_diag(double value, double tol) {
    return Json{{"value", value}, {"tol", tol}};
}

Json verdict_json(const FreenessVerdict& v) {
    Json out;
    out["kind"] = to_string(v.kind);
    out["certificate"] = v.certificate;
    if (v.witness) out["witness"] = v.witness->to_string();
    return out;
}

// mu = (-1 - i nu) / (1 + nu^2), exactly on the circle
ExactComplex circle_mu(const Rational& nu) {
    const Rational d = 1 + nu * nu;
    return ExactComplex(ExactScalar(Rational(-1 / d)), ExactScalar(Rational(-nu / d)));
}

}  // namespace

Json cmd_check(const std::string& mu_text, const std::string& path, const Options& opt) {
    Json rep;
    rep["command"] = "check";
    rep["input"] = Json{{"mu", mu_text}, {"path", path}, {"depth", opt.depth}};

    if (path == "complex") {
        const ExactComplex mu = parse_exact_complex(mu_text);
        rep["exactness"] = "exact";
        rep["verdict"] = verdict_json(check_free_main(mu, opt.depth, opt.workers));
        Json diag;
        diag["mu"] = to_string(mu);
        diag["mu_abs_sq"] = to_string(mu.norm_sq());
        diag["circle_residual"] = to_string(circle_residual(mu));
        diag["trace_ab"] = to_string(trace_ab(mu));
        if (circle_residual(mu).is_zero() && !mu.is_zero())
            diag["nu"] = to_string(ExactScalar(mu.im / mu.re));
        rep["diagnostics"] = diag;
    } else if (path == "quaternion") {
        if (opt.depth > 0)
            throw std::invalid_argument(
                "exact word search is unavailable on the quaternion path; "
                "rerun with --depth 0");
        const Quaternion mu = parse_quaternion(mu_text);
        rep["exactness"] = "floating";
        rep["verdict"] = verdict_json(check_free_quat(mu, opt.tol));
        Json diag;
        diag["tau"] = to_string(complex_slice_tau(mu));
        diag["mu_abs_sq"] = float_diag(mu.norm_sq(), opt.tol);
        diag["circle_residual"] = float_diag(mu.norm_sq() + mu.r0, opt.tol);
        rep["diagnostics"] = diag;
    } else {
        throw std::invalid_argument("path must be 'complex' or 'quaternion'");
    }
    return rep;
}

Json cmd_cartan(const std::string& nu_text, const Options& opt) {
    const Rational nu = parse_rational(nu_text);
    const ExactComplex mu = circle_mu(nu);
    const GeneratorDecomposition d = decompose_generators(mu);
    const GeneratorPair<ExactComplex> pair = generator_pair(mu);

    const BoundaryTriple triple(origin_lift<ExactComplex>(), infinity_lift<ExactComplex>(),
                                standard_lift(ExactComplex(-1), d.nu));
    const CartanInvariant inv = cartan_invariant(triple);
    const ThresholdReport thr = threshold_equivalence(nu);

    Json rep;
    rep["command"] = "cartan";
    rep["input"] = Json{{"nu", nu_text}};
    rep["exactness"] = "exact";
    rep["mu"] = to_string(mu);
    rep["mu_abs_sq"] = to_string(mu.norm_sq());
    rep["tangent"] = to_string(inv.tangent);
    rep["angle_rad"] = float_diag(inv.angle, opt.tol);
    rep["gps_bound"] = Json{{"nu_sq", to_string(Rational(nu * nu))},
                            {"bound", "125/3"},
                            {"holds", thr.nu_bound_holds}};
    rep["decomposition"] = Json{{"a_equals_i0_i2", d.i0 * d.i2 == pair.a},
                                {"b_equals_i2_i1", d.i2 * d.i1 == pair.b}};
    rep["verdict"] = verdict_json(check_free_main(mu));
    return rep;
}

// Boundary-friendly variant: nu supplied in squared form, so irrational nu
// like sqrt(125/3) keeps all threshold arithmetic exact. mu itself is not
// representable then, so the decomposition flags are omitted.
Json cmd_cartan_sq(const std::string& nu_sq_text, const Options&) {
    const Rational nu_sq = parse_rational(nu_sq_text);
    const ThresholdReport thr = threshold_equivalence_sq(nu_sq);

    Json rep;
    rep["command"] = "cartan";
    rep["input"] = Json{{"nu_sq", nu_sq_text}};
    rep["exactness"] = "exact";
    rep["mu_abs_sq"] = to_string(thr.mu_abs_sq);
    rep["tan_sq"] = to_string(nu_sq);
    rep["gps_bound"] = Json{{"nu_sq", to_string(nu_sq)},
                            {"bound", "125/3"},
                            {"holds", thr.nu_bound_holds}};
    rep["mu_bound_holds"] = thr.mu_bound_holds;
    rep["note"] = "nu given in squared form; mu not constructed";
    return rep;
}

Json cmd_refute(const Options& opt) {
    const ExactComplex mu(ExactScalar(make_rational(-3, 4)), ExactScalar(0));
    const GeneratorPair<ExactComplex> pair = generator_pair(mu);
    const Matrix3<ExactComplex> ab = pair.a * pair.b;
    const Matrix3<ExactComplex> ab2 = ab * ab;
    const Matrix3<ExactComplex> ab3 = ab2 * ab;
    const auto witness = identity_word_search(pair, 6, opt.workers);

    Json rep;
    rep["command"] = "refute";
    rep["exactness"] = "exact";
    rep["mu"] = to_string(mu);
    rep["refuted_bound"] = float_diag(refuted_modulus_bound(), 1e-9);
    rep["refuted_condition_satisfied"] = refuted_modulus_condition(mu);
    rep["ab"] = to_string(ab);
    rep["trace_ab"] = to_string(trace_ab(mu));
    rep["ab_is_projective_identity"] = is_projective_identity(ab);
    rep["ab_sq_is_projective_identity"] = is_projective_identity(ab2);
    rep["ab_cubed_is_projective_identity"] = is_projective_identity(ab3);
    rep["ab_cubed_scalar"] = to_string(ab3(0, 0));
    rep["projective_order_ab"] = 3;
    rep["witness"] = witness ? witness->to_string() : "";
    rep["verdict"] = verdict_json(check_free_main(mu, 6, opt.workers));
    return rep;
}

Json cmd_sweep(const std::string& nu_min_text, const std::string& nu_max_text, long steps,
               const std::string& out_path, const Options& opt) {
    const Rational nu_min = parse_rational(nu_min_text);
    const Rational nu_max = parse_rational(nu_max_text);
    if (steps < 1) throw std::invalid_argument("sweep: steps must be >= 1");
    if (nu_min > nu_max) throw std::invalid_argument("sweep: nu_min must be <= nu_max");

    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("sweep: cannot open output file '" + out_path + "'");

    long certified = 0, witnessed = 0, uncovered = 0;
    for (long i = 0; i < steps; ++i) {
        Rational nu = nu_min;
        if (steps > 1)
            nu = Rational(nu_min + (nu_max - nu_min) * Rational(i) / Rational(steps - 1));
        const ExactComplex mu = circle_mu(nu);
        const ThresholdReport thr = threshold_equivalence(nu);
        const FreenessVerdict verdict = check_free_main(mu, opt.depth, opt.workers);
        switch (verdict.kind) {
            case VerdictKind::CertifiedFree: ++certified; break;
            case VerdictKind::NonFreeWitness: ++witnessed; break;
            case VerdictKind::NotCovered: ++uncovered; break;
        }

        Json record;
        record["nu"] = to_string(nu);
        record["mu"] = to_string(mu);
        record["mu_abs_sq"] = to_string(mu.norm_sq());
        record["tangent"] = to_string(ExactScalar(Rational(-nu)));
        record["nu_bound_holds"] = thr.nu_bound_holds;
        record["verdict"] = verdict_json(verdict);
        out << record.dump() << "\n";
    }
    out.flush();
    if (!out) throw std::invalid_argument("sweep: write failed on '" + out_path + "'");

    Json rep;
    rep["command"] = "sweep";
    rep["input"] = Json{{"nu_min", nu_min_text}, {"nu_max", nu_max_text}, {"steps", steps}};
    rep["out"] = out_path;
    rep["records"] = steps;
    rep["certified_free"] = certified;
    rep["non_free_witness"] = witnessed;
    rep["not_covered"] = uncovered;
    return rep;
}

Json cmd_heis(const std::string& p_text, const std::string& q_text, const Options&) {
    const HeisPoint<ExactComplex> p = parse_heis_point(p_text);
    const HeisPoint<ExactComplex> q = parse_heis_point(q_text);
    const HeisPoint<ExactComplex> prod = heis_mul(p, q);

    Json rep;
    rep["command"] = "heis";
    rep["input"] = Json{{"p", p_text}, {"q", q_text}};
    rep["exactness"] = "exact";
    rep["product"] = to_string(prod);
    rep["product_matrix"] = to_string(heis_translation_matrix(prod));
    rep["p_vertical"] = is_vertical(p);
    rep["q_vertical"] = is_vertical(q);
    rep["product_vertical"] = is_vertical(prod);
    rep["matrix_homomorphism_holds"] =
        heis_translation_matrix(prod) ==
        heis_translation_matrix(p) * heis_translation_matrix(q);
    return rep;
}

Json cmd_lu(const std::string& m_text, const std::string& n_text, const Options&) {
    const ExactComplex m = parse_exact_complex(m_text);
    const ExactComplex n = parse_exact_complex(n_text);

    Json rep;
    rep["command"] = "lu";
    rep["input"] = Json{{"m", m_text}, {"n", n_text}};
    rep["exactness"] = "exact";
    rep["verdict"] = verdict_json(check_free_lu(m, n));
    rep["product_abs_sq"] = to_string(ExactScalar(m.norm_sq() * n.norm_sq()));
    const Matrix2 a0{ExactComplex(1), m, ExactComplex(0), ExactComplex(1)};
    const Matrix2 b0{ExactComplex(1), ExactComplex(0), n, ExactComplex(1)};
    rep["embedded_a1"] = to_string(embed_2x2(a0));
    rep["embedded_b1"] = to_string(embed_2x2(b0));
    return rep;
}

Json cmd_vquat(const std::string& tau_text, const Options& opt) {
    const Quaternion raw = parse_quaternion(tau_text);
    if (raw.r0 != 0)
        throw std::invalid_argument("vquat: tau must be purely imaginary (zero real part)");
    const ImaginaryQuat tau = imag_part(raw);
    const VerticalQuatCheck check = check_free_vertical_quat(tau, opt.tol);

    Json rep;
    rep["command"] = "vquat";
    rep["input"] = Json{{"tau", tau_text}};
    rep["exactness"] = "floating";
    rep["verdict"] = verdict_json(check.verdict);
    rep["tau_norm"] = float_diag(tau.norm(), opt.tol);
    rep["alpha"] = to_string(check.alpha);
    rep["conjugated_a1"] = to_string(check.a1);
    rep["conjugated_b1"] = to_string(check.b1);
    return rep;
}

std::string render(const Json& report, bool pretty) {
    return pretty ? report.dump(2) : report.dump();
}

}  // namespace heisfree::cli
