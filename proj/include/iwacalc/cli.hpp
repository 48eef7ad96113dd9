#ifndef IWACALC_CLI_HPP
#define IWACALC_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <iwacalc/json_io.hpp>
#include <iwacalc/series_matrix.hpp>

namespace iwacalc
{

enum class Command { logmatrix, verify, convergence, weierstrass, compare, euler };

Command parse_command(const std::string &name);
const char *to_string(Command command) noexcept;

enum ExitCode : int {
    exit_pass = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_precision = 3,
    exit_internal = 4,
};

struct JobConfig {
    Command command = Command::verify;

    // Frobenius data source: c_matrix (path), input (path or inline JSON),
    // ap (with p), or random_g (with p and IWACALC_SEED).
    std::optional<std::string> c_matrix;
    std::optional<std::string> input;
    std::optional<std::string> ap;
    std::optional<std::size_t> random_g;
    std::optional<std::size_t> g_minus;
    std::optional<std::uint64_t> seed;

    std::optional<unsigned long> p;
    std::optional<unsigned> n;
    std::optional<unsigned> n_max;
    std::optional<std::size_t> x_precision;
    std::optional<long> p_precision;

    std::string identity = "orthogonality";
    Side side = Side::primal;

    // euler
    unsigned long m = 0;
    unsigned long e = 0;
    unsigned long deg_f = 0;
    unsigned long g = 0;

    std::optional<std::string> out;
    bool json = false;
    int verbosity = 0;
};

struct RunResult {
    int exit_code = exit_internal;
    json report;
    // one-line human-readable summary
    std::string summary;
};

// Executes a job. Library errors are mapped onto exit codes; the report
// always carries "command" and, on error, "error".
RunResult run(const JobConfig &config);

// Writes the report to config.out (if set) and the summary or JSON to stdout.
int emit(const JobConfig &config, const RunResult &result);

} // namespace iwacalc

#endif
