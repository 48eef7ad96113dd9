#include <iwacalc/errors.hpp>
#include <iwacalc/frobenius.hpp>
#include <iwacalc/integer.hpp>

namespace iwacalc
{

FrobeniusData::FrobeniusData(ZpMatrix c, std::size_t g_minus, std::size_t g_plus, Side orientation)
    : m_c(std::move(c)), m_c_inverse(m_c.prime(), m_c.precision(), m_c.size()), m_g_minus(g_minus),
      m_g_plus(g_plus), m_orientation(orientation)
{
    require_odd_prime(m_c.prime());
    if (m_c.size() != g_minus + g_plus) {
        throw UsageError("C has size " + std::to_string(m_c.size()) + " but g_minus + g_plus = "
                         + std::to_string(g_minus + g_plus));
    }
    if (m_c.size() > 0 && m_c.precision() < 1) {
        throw PrecisionError("C needs at least one p-adic digit", 1 - m_c.precision());
    }
    if (m_c.size() > 0 && mpz_divisible_ui_p(m_c.determinant().get_mpz_t(), m_c.prime()) != 0) {
        throw ValidationError("det(C) is not a p-adic unit; C must lie in GL_g(Z_p)");
    }
    m_c_inverse = m_c.inverse();
}

bool FrobeniusData::is_scaled(std::size_t i) const noexcept
{
    return m_orientation == Side::primal ? i >= m_g_minus : i < m_g_minus;
}

ZpMatrix FrobeniusData::scaled_frobenius() const
{
    const std::size_t g = size();
    ZpMatrix out(prime(), precision(), g);
    const mpz_class p{prime()};
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            out.set(i, j, is_scaled(j) ? m_c(i, j) : mpz_class(m_c(i, j) * p));
        }
    }
    return out;
}

std::vector<PadicScalar> FrobeniusData::frobenius_matrix() const
{
    const std::size_t g = size();
    std::vector<PadicScalar> out;
    out.reserve(g * g);
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            PadicScalar x = PadicScalar::from_integer(prime(), m_c(i, j), precision());
            if (is_scaled(j)) {
                x = x * PadicScalar(prime(), -1, 1, precision() + 1);
            }
            out.push_back(x);
        }
    }
    return out;
}

bool operator==(const FrobeniusData &a, const FrobeniusData &b)
{
    return a.m_c == b.m_c && a.m_g_minus == b.m_g_minus && a.m_g_plus == b.m_g_plus
           && a.m_orientation == b.m_orientation;
}

FrobeniusData build_frobenius(const std::vector<std::vector<mpz_class>> &c, std::size_t g_minus,
                              std::size_t g_plus, unsigned long p, long precision)
{
    require_odd_prime(p);
    const std::size_t g = c.size();
    std::vector<mpz_class> entries;
    entries.reserve(g * g);
    for (const auto &row : c) {
        if (row.size() != g) {
            throw UsageError("C must be square: row of length " + std::to_string(row.size()) + " in a "
                             + std::to_string(g) + "-row matrix");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return FrobeniusData(ZpMatrix(p, precision, g, std::move(entries)), g_minus, g_plus);
}

FrobeniusData build_frobenius(const std::vector<std::vector<PadicScalar>> &c, std::size_t g_minus,
                              std::size_t g_plus)
{
    if (c.empty()) {
        throw UsageError("build_frobenius: use the integer overload for g = 0");
    }
    if (c.front().empty()) {
        throw UsageError("C must be square");
    }
    const unsigned long p = c.front().front().prime();
    long precision = PadicScalar::infinite_valuation;
    std::vector<std::vector<mpz_class>> ints;
    for (const auto &row : c) {
        std::vector<mpz_class> r;
        for (const auto &x : row) {
            if (x.prime() != p) {
                throw UsageError("C entries over different primes");
            }
            if (!x.is_zero() && x.valuation() < 0) {
                throw ValidationError("C entries must be integral, got " + x.to_string());
            }
            precision = std::min(precision, x.absolute_precision());
            r.push_back(x.to_integer());
        }
        ints.push_back(std::move(r));
    }
    if (precision == PadicScalar::infinite_valuation) {
        throw PrecisionError("C has no finite precision; all entries are exact zero");
    }
    return build_frobenius(ints, g_minus, g_plus, p, precision);
}

FrobeniusData build_frobenius_from_ap(const PadicScalar &ap, long precision)
{
    const unsigned long p = ap.prime();
    if (!ap.is_zero() && ap.valuation() < 1) {
        throw ValidationError("a_p = " + ap.to_string()
                              + " is a unit; supersingular input (H.Frob slope condition) needs v_p(a_p) >= 1");
    }
    if (!ap.is_exact_zero()) {
        precision = std::min(precision, ap.absolute_precision());
    }
    const mpz_class a = ap.is_zero() ? mpz_class(0) : ap.to_integer();
    return build_frobenius({{a, -1}, {1, 0}}, 1, 1, p, precision);
}

FrobeniusData dual_frobenius(const FrobeniusData &fd)
{
    if (fd.size() > 0 && fd.precision() < 1) {
        throw PrecisionError("cannot invert C without a certain digit", 1);
    }
    return FrobeniusData(fd.c_inverse().transpose(), fd.g_minus(), fd.g_plus(),
                         fd.orientation() == Side::primal ? Side::dual : Side::primal);
}

FrobeniusData random_frobenius(unsigned long p, std::size_t g_minus, std::size_t g_plus, long precision,
                               gmp_randclass &rng)
{
    require_odd_prime(p);
    const std::size_t g = g_minus + g_plus;
    const mpz_class mod = prime_power(p, precision);
    for (;;) {
        std::vector<mpz_class> entries(g * g);
        for (auto &x : entries) {
            x = rng.get_z_range(mod);
        }
        ZpMatrix c(p, precision, g, std::move(entries));
        if (mpz_divisible_ui_p(c.determinant().get_mpz_t(), p) == 0) {
            return FrobeniusData(std::move(c), g_minus, g_plus);
        }
    }
}

} // namespace iwacalc
