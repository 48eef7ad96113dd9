#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <iwacalc/cli.hpp>
#include <iwacalc/errors.hpp>

using namespace iwacalc;

int main(int argc, char **argv)
{
    CLI::App app{"iwacalc: logarithmic matrices, orthogonality checks and Iwasawa invariants"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    JobConfig config;
    std::string side = "primal";
    std::optional<std::size_t> random_g;

    auto add_frobenius = [&](CLI::App *sub) {
        sub->add_option("--c-matrix", config.c_matrix, "Frobenius data JSON file");
        sub->add_option("--input", config.input, "Frobenius data JSON (file or inline)");
        sub->add_option("--ap", config.ap, "a_p for the 2x2 supersingular case (needs --p)");
        sub->add_option("--random", random_g, "random C in GL_g(Z_p) of this size (seed: IWACALC_SEED)");
        sub->add_option("--g-minus", config.g_minus, "g_- for --random (default g/2)");
        sub->add_option("--p", config.p, "odd prime");
        sub->add_option("--x-prec", config.x_precision, "X-adic precision D (default 2p^2)");
        sub->add_option("--p-prec", config.p_precision, "p-adic precision N (default 2(n_max+2))");
    };

    auto *logmatrix = app.add_subcommand("logmatrix", "compute M_n");
    add_frobenius(logmatrix);
    logmatrix->add_option("--n", config.n, "level (default 3)");
    logmatrix->add_option("--side", side, "primal or dual")->check(CLI::IsMember({"primal", "dual"}));

    auto *verify = app.add_subcommand("verify", "check orthogonality or the determinant identity");
    add_frobenius(verify);
    verify->add_option("--n", config.n, "level (default 3)");
    verify->add_option("--identity", config.identity, "orthogonality or determinant")
        ->check(CLI::IsMember({"orthogonality", "determinant"}));

    auto *convergence = app.add_subcommand("convergence", "v_p(M_{n+1} - M_n) for n < n_max");
    add_frobenius(convergence);
    convergence->add_option("--n-max", config.n_max, "largest level (default 6)");

    auto *weierstrass = app.add_subcommand("weierstrass", "mu, lambda and distinguished polynomial");
    weierstrass->add_option("--input", config.input, "series JSON (file or inline)")->required();

    auto *compare = app.add_subcommand("compare", "functional equation f_X ~ iota(f_Y)");
    compare->add_option("--input", config.input, "{\"fX\": series, \"fY\": series} (file or inline)")->required();

    auto *euler = app.add_subcommand("euler", "Euler characteristic exponents");
    euler->add_option("--p", config.p, "odd prime")->required();
    euler->add_option("--m", config.m, "m")->required();
    euler->add_option("--e", config.e, "ramification index e")->required();
    euler->add_option("--deg-f", config.deg_f, "[F : Q]")->required();
    euler->add_option("--n", config.n, "level n (default 0)");
    euler->add_option("--g", config.g, "g")->required();
    euler->add_option("--g-minus", config.g_minus, "g_- (default 0)");

    for (auto *sub : {logmatrix, verify, convergence, weierstrass, compare, euler}) {
        sub->add_option("--out", config.out, "write the JSON report here");
        sub->add_flag("--json", config.json, "print the JSON report");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &err) {
        const int code = app.exit(err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        config.command = parse_command(app.get_subcommands().front()->get_name());
        config.side = side == "dual" ? Side::dual : Side::primal;
        config.random_g = random_g;
        if (const char *seed = std::getenv("IWACALC_SEED")) {
            config.seed = std::stoull(seed);
        }
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    }

    return emit(config, run(config));
}
