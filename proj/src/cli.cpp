#include <iwacalc/cli.hpp>
#include <iwacalc/errors.hpp>
#include <iwacalc/frobenius.hpp>
#include <iwacalc/integer.hpp>
#include <iwacalc/iwasawa.hpp>
#include <iwacalc/logmatrix.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace iwacalc
{

namespace
{

std::string load_text(const std::string &path_or_inline)
{
    const auto first = path_or_inline.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
        return path_or_inline;
    }
    std::ifstream in(path_or_inline);
    if (!in) {
        throw UsageError("cannot read input file '" + path_or_inline + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Parameters {
    unsigned n;
    unsigned n_max;
    std::size_t x_precision;
    long p_precision;
};

Parameters resolve_parameters(const JobConfig &config, unsigned long p)
{
    Parameters out{};
    out.n_max = config.n_max.value_or(LogMatrixDefaults::n_max);
    out.n = config.n.value_or(3);
    out.x_precision = config.x_precision.value_or(LogMatrixDefaults::x_precision(p));
    out.p_precision = config.p_precision.value_or(LogMatrixDefaults::p_precision(std::max(out.n_max, out.n)));
    if (out.p_precision < 1) {
        throw UsageError("--p-prec must be positive");
    }
    return out;
}

long default_frobenius_precision(const JobConfig &config)
{
    if (config.p_precision) {
        return *config.p_precision;
    }
    return LogMatrixDefaults::p_precision(
        std::max(config.n_max.value_or(LogMatrixDefaults::n_max), config.n.value_or(3)));
}

FrobeniusData resolve_frobenius(const JobConfig &config)
{
    const long precision = default_frobenius_precision(config);
    std::optional<FrobeniusData> fd;
    int sources = 0;
    if (config.c_matrix) {
        fd = frobenius_from_json(parse_json(load_text(*config.c_matrix)), precision);
        ++sources;
    }
    if (config.input) {
        fd = frobenius_from_json(parse_json(load_text(*config.input)), precision);
        ++sources;
    }
    if (config.ap) {
        if (!config.p) {
            throw UsageError("--ap requires --p");
        }
        fd = build_frobenius_from_ap(PadicScalar::from_integer(*config.p, parse_decimal(*config.ap), precision),
                                     precision);
        ++sources;
    }
    if (config.random_g) {
        if (!config.p) {
            throw UsageError("--random requires --p");
        }
        const std::size_t g = *config.random_g;
        const std::size_t g_minus = config.g_minus.value_or(g / 2);
        if (g_minus > g) {
            throw UsageError("--g-minus exceeds --random");
        }
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(mpz_class(std::to_string(config.seed.value_or(0)), 10));
        fd = random_frobenius(*config.p, g_minus, g - g_minus, precision, rng);
        ++sources;
    }
    if (sources != 1) {
        throw UsageError("exactly one of --c-matrix, --input, --ap, --random must supply the Frobenius data");
    }
    if (config.p && *config.p != fd->prime()) {
        throw UsageError("--p " + std::to_string(*config.p) + " disagrees with the Frobenius data (p = "
                         + std::to_string(fd->prime()) + ")");
    }
    return *fd;
}

RunResult run_logmatrix(const JobConfig &config)
{
    const FrobeniusData fd = resolve_frobenius(config);
    const Parameters prm = resolve_parameters(config, fd.prime());
    const SeriesMatrix m = logarithmic_matrix(fd, prm.n, config.side, prm.x_precision, prm.p_precision);
    RunResult r;
    r.exit_code = exit_pass;
    r.report = json{{"frobenius", to_json(fd)},
                    {"n", prm.n},
                    {"side", to_string(config.side)},
                    {"D", prm.x_precision},
                    {"N", prm.p_precision},
                    {"matrix", to_json(m)}};
    std::ostringstream ss;
    ss << "M_" << prm.n << " (" << to_string(config.side) << "): g = " << m.size() << ", denominator p^"
       << m.denominator_exp() << ", absolute precision p^" << (m.size() ? m.absolute_precision() : 0);
    r.summary = ss.str();
    return r;
}

RunResult run_verify(const JobConfig &config)
{
    const FrobeniusData fd = resolve_frobenius(config);
    const Parameters prm = resolve_parameters(config, fd.prime());
    if (prm.n == 0) {
        throw UsageError("--n must be at least 1");
    }
    CheckReport check;
    if (config.identity == "orthogonality") {
        check = verify_orthogonality(fd, prm.n, prm.x_precision, prm.p_precision);
    } else if (config.identity == "determinant") {
        check = determinant_identity_check(fd, prm.n, prm.x_precision, prm.p_precision);
    } else {
        throw UsageError("--identity must be 'orthogonality' or 'determinant'");
    }
    RunResult r;
    r.exit_code = check.pass ? exit_pass : exit_check_failed;
    r.report = to_json(check);
    r.report["frobenius"] = to_json(fd);
    r.report["D"] = prm.x_precision;
    r.report["N"] = prm.p_precision;
    std::ostringstream ss;
    ss << check.check << " n=" << prm.n << ": " << (check.pass ? "PASS" : "FAIL") << " (absolute precision p^"
       << check.absolute_precision << ", " << check.verified_digits << " verified digits)";
    if (check.witness) {
        ss << " witness entry (" << check.witness->row << "," << check.witness->col << ") X^"
           << check.witness->coefficient << ": " << check.witness->lhs << " vs " << check.witness->rhs;
    }
    r.summary = ss.str();
    return r;
}

RunResult run_convergence(const JobConfig &config)
{
    const FrobeniusData fd = resolve_frobenius(config);
    const Parameters prm = resolve_parameters(config, fd.prime());
    const auto steps = convergence_run(fd, prm.n_max, prm.x_precision, prm.p_precision);
    const bool any_error = std::any_of(steps.begin(), steps.end(), [](const ConvergenceStep &s) { return s.error.has_value(); });
    RunResult r;
    r.exit_code = any_error ? exit_precision : exit_pass;
    r.report = json{{"check", "convergence"},
                    {"frobenius", to_json(fd)},
                    {"n_max", prm.n_max},
                    {"D", prm.x_precision},
                    {"N", prm.p_precision},
                    {"steps", to_json(steps)}};
    std::ostringstream ss;
    ss << "convergence:";
    for (const auto &s : steps) {
        ss << " n=" << s.n << ":";
        if (s.error) {
            ss << "error";
        } else {
            ss << (s.lower_bound ? ">=" : "") << s.agreement_valuation;
        }
    }
    r.summary = ss.str();
    return r;
}

json require_input(const JobConfig &config)
{
    if (!config.input) {
        throw UsageError(std::string(to_string(config.command)) + " requires --input <path or inline JSON>");
    }
    return parse_json(load_text(*config.input));
}

RunResult run_weierstrass(const JobConfig &config)
{
    const TruncatedSeries f = series_from_json(require_input(config));
    const WeierstrassData w = weierstrass(f);
    RunResult r;
    r.exit_code = exit_pass;
    r.report = json{{"input", to_json(f)}, {"result", to_json(w)}};
    std::ostringstream ss;
    ss << "mu = " << w.mu << ", lambda = " << w.lambda << ", distinguished = " << w.distinguished
       << (w.certified ? " [certified]" : " [not certified]");
    r.summary = ss.str();
    return r;
}

RunResult run_compare(const JobConfig &config)
{
    const json in = require_input(config);
    if (!in.is_object() || !in.contains("fX") || !in.contains("fY")) {
        throw SchemaError("compare input must be an object with 'fX' and 'fY' series");
    }
    const ComparisonReport cmp = functional_equation_compare(series_from_json(in["fX"]), series_from_json(in["fY"]));
    RunResult r;
    r.exit_code = cmp.pass ? exit_pass : exit_check_failed;
    r.report = to_json(cmp);
    std::ostringstream ss;
    ss << "functional equation: " << (cmp.pass ? "PASS" : "FAIL") << " mu " << cmp.mu[0] << "/" << cmp.mu[1]
       << ", lambda " << cmp.lambda[0] << "/" << cmp.lambda[1];
    if (cmp.witness) {
        ss << " (" << *cmp.witness << ")";
    }
    r.summary = ss.str();
    return r;
}

RunResult run_euler(const JobConfig &config)
{
    if (!config.p) {
        throw UsageError("euler requires --p");
    }
    const unsigned long n_level = config.n.value_or(0);
    const unsigned long g_minus = config.g_minus.value_or(0);
    const EulerExponents ex =
        euler_characteristic_exponent(*config.p, config.m, config.e, config.deg_f, n_level, config.g, g_minus);
    RunResult r;
    r.exit_code = exit_pass;
    r.report = to_json(ex);
    r.report["inputs"] = json{{"p", *config.p},     {"m", config.m}, {"e", config.e},       {"deg_f", config.deg_f},
                              {"n_level", n_level}, {"g", config.g}, {"g_minus", g_minus}};
    r.summary = "global exponent " + ex.global.get_str() + ", local exponent " + ex.local.get_str();
    return r;
}

} // namespace

Command parse_command(const std::string &name)
{
    for (Command c : {Command::logmatrix, Command::verify, Command::convergence, Command::weierstrass, Command::compare,
                      Command::euler}) {
        if (name == to_string(c)) {
            return c;
        }
    }
    throw UsageError("unknown command '" + name + "'");
}

const char *to_string(Command command) noexcept
{
    switch (command) {
        case Command::logmatrix:
            return "logmatrix";
        case Command::verify:
            return "verify";
        case Command::convergence:
            return "convergence";
        case Command::weierstrass:
            return "weierstrass";
        case Command::compare:
            return "compare";
        case Command::euler:
            return "euler";
    }
    return "unknown";
}

RunResult run(const JobConfig &config)
{
    RunResult r;
    std::string kind;
    try {
        switch (config.command) {
            case Command::logmatrix:
                r = run_logmatrix(config);
                break;
            case Command::verify:
                r = run_verify(config);
                break;
            case Command::convergence:
                r = run_convergence(config);
                break;
            case Command::weierstrass:
                r = run_weierstrass(config);
                break;
            case Command::compare:
                r = run_compare(config);
                break;
            case Command::euler:
                r = run_euler(config);
                break;
        }
        r.report["command"] = to_string(config.command);
        return r;
    } catch (const PrecisionError &err) {
        r.exit_code = exit_precision;
        r.report = json{{"error", err.what()}, {"error_kind", "precision"}, {"deficit", err.deficit()}};
    } catch (const UsageError &err) {
        r.exit_code = exit_usage;
        r.report = json{{"error", err.what()}, {"error_kind", "usage"}};
    } catch (const ValidationError &err) {
        r.exit_code = exit_usage;
        r.report = json{{"error", err.what()}, {"error_kind", "validation"}};
    } catch (const SchemaError &err) {
        r.exit_code = exit_usage;
        r.report = json{{"error", err.what()}, {"error_kind", "schema"}};
    } catch (const DomainError &err) {
        r.exit_code = exit_usage;
        r.report = json{{"error", err.what()}, {"error_kind", "domain"}};
    } catch (const json::exception &err) {
        r.exit_code = exit_usage;
        r.report = json{{"error", err.what()}, {"error_kind", "schema"}};
    } catch (const std::exception &err) {
        r.exit_code = exit_internal;
        r.report = json{{"error", err.what()}, {"error_kind", "internal"}};
    }
    r.report["command"] = to_string(config.command);
    r.summary = "error: " + r.report["error"].get<std::string>();
    return r;
}

int emit(const JobConfig &config, const RunResult &result)
{
    if (config.out) {
        std::ofstream out(*config.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << *config.out << "'\n";
            return exit_usage;
        }
        out << canonical_dump(result.report);
    }
    if (config.json) {
        std::cout << canonical_dump(result.report);
    } else if (result.exit_code == exit_pass || result.exit_code == exit_check_failed) {
        std::cout << result.summary << "\n";
    } else {
        std::cerr << result.summary << "\n";
    }
    return result.exit_code;
}

} // namespace iwacalc
