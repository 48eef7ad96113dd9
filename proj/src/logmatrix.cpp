#include <iwacalc/errors.hpp>
#include <iwacalc/logmatrix.hpp>

#include <algorithm>
#include <limits>

namespace iwacalc
{

namespace
{

SeriesMatrix oriented_block_factor(const FrobeniusData &data, unsigned n, std::size_t x_precision,
                                   long p_precision)
{
    if (n == 0) {
        throw UsageError("block factors are defined for n >= 1");
    }
    const unsigned long p = data.prime();
    const std::size_t g = data.size();
    const long prec = std::min(p_precision, data.precision());
    const TruncatedSeries phi = cyclotomic_shifted(p, n, x_precision, prec);
    std::vector<TruncatedSeries> entries;
    entries.reserve(g * g);
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            TruncatedSeries c = TruncatedSeries::constant(p, data.c_inverse()(i, j), x_precision, prec);
            entries.push_back(data.is_scaled(i) ? phi * c : std::move(c));
        }
    }
    return SeriesMatrix(p, g, x_precision, std::move(entries)).with_provenance({n, data.orientation()});
}

FrobeniusData oriented(const FrobeniusData &fd, Side side)
{
    return side == Side::primal ? fd : dual_frobenius(fd);
}

void require_precision(long available, unsigned n)
{
    const long needed = static_cast<long>(n) + 2;
    if (available < needed) {
        throw PrecisionError("M_" + std::to_string(n) + " needs p-precision N > " + std::to_string(n + 1)
                                 + ", have " + std::to_string(available),
                             needed - available);
    }
}

// Numerator-level product F^{n+1} * prefix followed by a single shift by p^{-(n+1)}.
SeriesMatrix finish(const ZpMatrix &scaled_frobenius, const SeriesMatrix &prefix, unsigned n, Side side)
{
    const ZpMatrix power = scaled_frobenius.power(n + 1);
    SeriesMatrix m = SeriesMatrix::from_constants(power, prefix.x_precision()) * prefix;
    return m.scaled_by_p(-static_cast<long>(n) - 1).with_provenance({n, side});
}

SeriesMatrix scalar_cyclotomic(unsigned long p, unsigned n, std::size_t g, std::size_t x_precision,
                               long p_precision, long exponent, bool with_identity)
{
    TruncatedSeries f = cyclotomic_product(p, n, x_precision, p_precision);
    TruncatedSeries acc = TruncatedSeries::constant(p, 1, x_precision, p_precision);
    for (long k = 0; k < exponent; ++k) {
        acc = acc * f;
    }
    acc = acc.scaled_by_p(-(static_cast<long>(n) + 1) * exponent);
    return with_identity ? SeriesMatrix::scalar(acc, g) : SeriesMatrix::scalar(acc, 1);
}

long max_p_precision(const SeriesMatrix &m)
{
    long n = 0;
    for (const auto &f : m.entries()) {
        n = std::max(n, f.p_precision() + f.denominator_exp());
    }
    return n;
}

} // namespace

SeriesMatrix block_factor(const FrobeniusData &fd, unsigned n, Side side, std::size_t x_precision,
                          long p_precision)
{
    return oriented_block_factor(oriented(fd, side), n, x_precision, p_precision)
        .with_provenance({n, side});
}

std::vector<SeriesMatrix> logarithmic_matrices(const FrobeniusData &fd, unsigned n_max, Side side,
                                               std::size_t x_precision, long p_precision)
{
    if (n_max == 0) {
        throw UsageError("logarithmic matrices are defined for n >= 1");
    }
    const FrobeniusData data = oriented(fd, side);
    const long prec = std::min(p_precision, data.precision());
    require_precision(prec, n_max);
    const ZpMatrix scaled = data.scaled_frobenius().with_precision(prec);
    std::vector<SeriesMatrix> out;
    out.reserve(n_max);
    SeriesMatrix prefix = SeriesMatrix::identity(data.prime(), data.size(), x_precision, prec);
    for (unsigned n = 1; n <= n_max; ++n) {
        prefix = oriented_block_factor(data, n, x_precision, prec) * prefix;
        out.push_back(finish(scaled, prefix, n, side));
    }
    return out;
}

SeriesMatrix logarithmic_matrix(const FrobeniusData &fd, unsigned n, Side side, std::size_t x_precision,
                                long p_precision)
{
    return logarithmic_matrices(fd, n, side, x_precision, p_precision).back();
}

SeriesMatrix assemble_logarithmic_matrix(const FrobeniusData &oriented_data, std::span<const SeriesMatrix> factors)
{
    if (factors.empty()) {
        throw UsageError("assemble_logarithmic_matrix needs at least one block factor");
    }
    SeriesMatrix prefix = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) {
        prefix = factors[k] * prefix;
    }
    long prec = oriented_data.precision();
    for (const auto &f : prefix.entries()) {
        prec = std::min(prec, f.p_precision() + f.denominator_exp());
    }
    const auto n = static_cast<unsigned>(factors.size());
    return finish(oriented_data.scaled_frobenius().with_precision(prec), prefix, n,
                  oriented_data.orientation());
}

std::vector<ConvergenceStep> convergence_run(const FrobeniusData &fd, unsigned n_max, std::size_t x_precision,
                                             long p_precision)
{
    if (n_max < 2) {
        throw UsageError("convergence_run requires n_max >= 2");
    }
    std::vector<ConvergenceStep> steps;
    if (fd.size() == 0) {
        return steps;
    }
    const long prec = std::min(p_precision, fd.precision());
    const long reachable = prec - 2; // largest n with N > n + 1
    const unsigned computed = reachable < 1 ? 0U : std::min<unsigned>(n_max, static_cast<unsigned>(reachable));
    std::vector<SeriesMatrix> ms;
    if (computed >= 1) {
        ms = logarithmic_matrices(fd, computed, Side::primal, x_precision, prec);
    }
    for (unsigned n = 1; n < n_max; ++n) {
        ConvergenceStep step;
        step.n = n;
        if (n + 1 > computed) {
            step.error = "precision exhausted: M_" + std::to_string(n + 1) + " needs N > " + std::to_string(n + 2)
                         + ", have " + std::to_string(prec);
            steps.push_back(std::move(step));
            continue;
        }
        const SeriesMatrix diff = ms[n] - ms[n - 1];
        long nonzero_min = std::numeric_limits<long>::max();
        long zero_min = std::numeric_limits<long>::max();
        for (const auto &f : diff.entries()) {
            if (f.is_zero()) {
                zero_min = std::min(zero_min, f.absolute_precision());
            } else {
                nonzero_min = std::min(nonzero_min, f.valuation());
            }
        }
        step.agreement_valuation = std::min(nonzero_min, zero_min);
        step.lower_bound = zero_min <= nonzero_min;
        step.absolute_precision = diff.absolute_precision();
        steps.push_back(std::move(step));
    }
    return steps;
}

CheckReport compare_matrices(const std::string &check, const SeriesMatrix &lhs, const SeriesMatrix &rhs)
{
    if (lhs.size() != rhs.size()) {
        throw UsageError("compare_matrices: size mismatch");
    }
    const SeriesMatrix diff = lhs - rhs;
    CheckReport report;
    report.check = check;
    report.pass = diff.is_zero();
    report.absolute_precision = diff.size() == 0 ? 0 : diff.absolute_precision();
    long rhs_val = std::numeric_limits<long>::max();
    for (const auto &f : rhs.entries()) {
        if (!f.is_zero()) {
            rhs_val = std::min(rhs_val, f.valuation());
        }
    }
    report.verified_digits = rhs_val == std::numeric_limits<long>::max() ? report.absolute_precision
                                                                          : report.absolute_precision - rhs_val;
    const std::size_t g = diff.size();
    for (std::size_t i = 0; i < g && !report.witness; ++i) {
        for (std::size_t j = 0; j < g && !report.witness; ++j) {
            const TruncatedSeries &d = diff(i, j);
            if (d.is_zero()) {
                continue;
            }
            const auto nums = d.numerators();
            const std::size_t k = static_cast<std::size_t>(
                std::find_if(nums.begin(), nums.end(), [](const mpz_class &c) { return c != 0; }) - nums.begin());
            CheckWitness w;
            w.row = i;
            w.col = j;
            w.coefficient = k;
            w.lhs = lhs(i, j).coefficient(k).to_string();
            w.rhs = rhs(i, j).coefficient(k).to_string();
            report.witness = w;
        }
    }
    return report;
}

CheckReport orthogonality_report(const SeriesMatrix &primal, const SeriesMatrix &dual, unsigned n)
{
    const SeriesMatrix lhs = primal.transpose() * dual;
    const long prec = max_p_precision(lhs) + static_cast<long>(n) + 1;
    const SeriesMatrix rhs = scalar_cyclotomic(primal.prime(), n, primal.size(),
                                               std::min(primal.x_precision(), dual.x_precision()), prec, 1, true);
    CheckReport report = compare_matrices("orthogonality", lhs, rhs);
    report.n = n;
    return report;
}

CheckReport verify_orthogonality(const FrobeniusData &fd, unsigned n, std::size_t x_precision, long p_precision)
{
    if (n == 0) {
        throw UsageError("verify_orthogonality requires n >= 1");
    }
    return orthogonality_report(logarithmic_matrix(fd, n, Side::primal, x_precision, p_precision),
                                logarithmic_matrix(fd, n, Side::dual, x_precision, p_precision), n);
}

CheckReport determinant_identity_check(const FrobeniusData &fd, unsigned n, std::size_t x_precision,
                                       long p_precision)
{
    if (n == 0) {
        throw UsageError("determinant_identity_check requires n >= 1");
    }
    const unsigned long p = fd.prime();
    const std::size_t g = fd.size();
    const SeriesMatrix mn = logarithmic_matrix(fd, n, Side::primal, x_precision, p_precision);
    const SeriesMatrix ms = logarithmic_matrix(fd, n, Side::dual, x_precision, p_precision);
    const TruncatedSeries det_mn = mn.determinant();
    const TruncatedSeries det_ms = ms.determinant();

    std::size_t scaled = 0;
    for (std::size_t i = 0; i < g; ++i) {
        scaled += fd.is_scaled(i) ? 1 : 0;
    }
    const long prec = std::max(det_mn.p_precision() + det_mn.denominator_exp(),
                               det_ms.p_precision() + det_ms.denominator_exp())
                      + static_cast<long>((n + 1) * g) + 1;
    const TruncatedSeries det_c =
        TruncatedSeries::constant(p, fd.c().determinant(), x_precision, std::min(fd.precision(), p_precision));
    const SeriesMatrix rhs1 =
        SeriesMatrix::scalar(scalar_cyclotomic(p, n, g, x_precision, prec, static_cast<long>(scaled), false)(0, 0)
                                 * det_c,
                             1);
    const SeriesMatrix rhs2 = scalar_cyclotomic(p, n, g, x_precision, prec, static_cast<long>(g), false);

    CheckReport first = compare_matrices("det_primal", SeriesMatrix::scalar(det_mn, 1), rhs1);
    CheckReport second = compare_matrices("det_product", SeriesMatrix::scalar(det_mn * det_ms, 1), rhs2);
    first.n = second.n = n;

    CheckReport report;
    report.check = "determinant";
    report.n = n;
    report.pass = first.pass && second.pass;
    report.absolute_precision = std::min(first.absolute_precision, second.absolute_precision);
    report.verified_digits = std::min(first.verified_digits, second.verified_digits);
    report.witness = first.witness ? first.witness : second.witness;
    report.parts = {std::move(first), std::move(second)};
    return report;
}

} // namespace iwacalc
