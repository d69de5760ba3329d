#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"
#include "heisfree/freeness.hpp"

// Exit codes: 0 = verdict produced, 1 = malformed input, 2 = internal
// invariant violation.
int main(int argc, char** argv) {
    using heisfree::cli::Json;
    using heisfree::cli::Options;

    CLI::App app{"exact checkers for groups generated by two Heisenberg translations"};
    app.require_subcommand(1);

    Options opt;
    std::string format = "structured";
    std::string mu, path = "complex", nu, nu_sq, nu_min, nu_max, out_path, p, q, m, n, tau;
    long steps = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--depth", opt.depth, "word-search depth (0 disables)")
            ->check(CLI::Range(0, heisfree::kMaxWordSearchDepth));
        cmd->add_option("--tol", opt.tol, "floating tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"structured", "pretty"}));
        cmd->add_option("--workers", opt.workers, "word-search workers")
            ->check(CLI::Range(1, 64));
    };

    CLI::App* check = app.add_subcommand("check", "freeness checkers for the pair A, B(mu)");
    check->add_option("mu", mu, "mu in the scalar serialization")->required();
    check->add_option("--path", path, "scalar path")
        ->check(CLI::IsMember({"complex", "quaternion"}));
    add_common(check);

    CLI::App* cartan = app.add_subcommand(
        "cartan", "angular invariant and inversion decomposition on the circle");
    cartan->add_option("nu", nu, "rational circle parameter");
    cartan->add_option("--nu-sq", nu_sq, "nu^2 as a rational (for irrational nu)");
    add_common(cartan);

    CLI::App* refute = app.add_subcommand(
        "refute", "reproduce the counterexample to the superseded modulus bound");
    add_common(refute);

    CLI::App* sweep = app.add_subcommand("sweep", "sample the circle parameter range");
    sweep->add_option("nu_min", nu_min, "lower rational bound")->required();
    sweep->add_option("nu_max", nu_max, "upper rational bound")->required();
    sweep->add_option("--steps", steps, "number of samples")->required();
    sweep->add_option("--out", out_path, "output file, one JSON record per line")->required();
    add_common(sweep);

    CLI::App* heis = app.add_subcommand("heis", "Heisenberg group-law calculator");
    heis->add_option("p", p, "left point '(zeta; nu)'")->required();
    heis->add_option("q", q, "right point '(zeta; nu)'")->required();
    add_common(heis);

    CLI::App* lu = app.add_subcommand("lu", "two-parabolic |mn| >= 4 checker");
    lu->add_option("m", m, "first complex parameter")->required();
    lu->add_option("n", n, "second complex parameter")->required();
    add_common(lu);

    CLI::App* vquat =
        app.add_subcommand("vquat", "vertical quaternionic translation checker");
    vquat->add_option("tau", tau, "purely imaginary quaternion")->required();
    add_common(vquat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        Json report;
        if (*check) {
            report = heisfree::cli::cmd_check(mu, path, opt);
        } else if (*cartan) {
            if (!nu_sq.empty() && !nu.empty())
                throw std::invalid_argument("cartan: give either nu or --nu-sq, not both");
            if (!nu_sq.empty())
                report = heisfree::cli::cmd_cartan_sq(nu_sq, opt);
            else if (!nu.empty())
                report = heisfree::cli::cmd_cartan(nu, opt);
            else
                throw std::invalid_argument("cartan: nu or --nu-sq is required");
        } else if (*refute) {
            report = heisfree::cli::cmd_refute(opt);
        } else if (*sweep) {
            report = heisfree::cli::cmd_sweep(nu_min, nu_max, steps, out_path, opt);
        } else if (*heis) {
            report = heisfree::cli::cmd_heis(p, q, opt);
        } else if (*lu) {
            report = heisfree::cli::cmd_lu(m, n, opt);
        } else if (*vquat) {
            report = heisfree::cli::cmd_vquat(tau, opt);
        }
        std::cout << heisfree::cli::render(report, format == "pretty") << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
