#include <iwacalc/determinant.hpp>
#include <iwacalc/errors.hpp>
#include <iwacalc/series_matrix.hpp>

#include <algorithm>
#include <limits>

namespace iwacalc
{

const char *to_string(Side side) noexcept
{
    return side == Side::primal ? "primal" : "dual";
}

SeriesMatrix::SeriesMatrix(unsigned long p, std::size_t size, std::size_t x_precision, long p_precision)
    : m_p(p), m_size(size), m_x_precision(x_precision),
      m_entries(size * size, TruncatedSeries(p, x_precision, p_precision))
{
}

SeriesMatrix::SeriesMatrix(unsigned long p, std::size_t size, std::size_t x_precision,
                           std::vector<TruncatedSeries> entries)
    : m_p(p), m_size(size), m_x_precision(x_precision), m_entries(std::move(entries))
{
    if (m_entries.size() != size * size) {
        throw UsageError("SeriesMatrix: expected " + std::to_string(size * size) + " entries, got "
                         + std::to_string(m_entries.size()));
    }
    for (const auto &f : m_entries) {
        if (f.prime() != p || f.x_precision() != x_precision) {
            throw UsageError("SeriesMatrix: entries must share the prime and x-precision");
        }
    }
}

SeriesMatrix SeriesMatrix::identity(unsigned long p, std::size_t size, std::size_t x_precision,
                                    long p_precision)
{
    SeriesMatrix out(p, size, x_precision, p_precision);
    for (std::size_t i = 0; i < size; ++i) {
        out.m_entries[i * size + i] = TruncatedSeries::constant(p, 1, x_precision, p_precision);
    }
    return out;
}

SeriesMatrix SeriesMatrix::from_constants(const ZpMatrix &m, std::size_t x_precision)
{
    const std::size_t n = m.size();
    std::vector<TruncatedSeries> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entries.push_back(TruncatedSeries::constant(m.prime(), m(i, j), x_precision, m.precision()));
        }
    }
    return SeriesMatrix(m.prime(), n, x_precision, std::move(entries));
}

SeriesMatrix SeriesMatrix::scalar(const TruncatedSeries &f, std::size_t size)
{
    // off-diagonal zeros carry the same absolute precision as f
    const TruncatedSeries zero = TruncatedSeries(f.prime(), f.x_precision(), f.p_precision()).scaled_by_p(-f.denominator_exp());
    std::vector<TruncatedSeries> entries(size * size, zero);
    for (std::size_t i = 0; i < size; ++i) {
        entries[i * size + i] = f;
    }
    return SeriesMatrix(f.prime(), size, f.x_precision(), std::move(entries));
}

void SeriesMatrix::set(std::size_t i, std::size_t j, TruncatedSeries f)
{
    if (f.prime() != m_p || f.x_precision() != m_x_precision) {
        throw UsageError("SeriesMatrix::set: entry must share the prime and x-precision");
    }
    m_entries.at(i * m_size + j) = std::move(f);
}

long SeriesMatrix::denominator_exp() const
{
    long s = 0;
    for (const auto &f : m_entries) {
        s = std::max(s, f.denominator_exp());
    }
    return s;
}

long SeriesMatrix::absolute_precision() const
{
    long a = std::numeric_limits<long>::max();
    for (const auto &f : m_entries) {
        a = std::min(a, f.absolute_precision());
    }
    return a;
}

long SeriesMatrix::valuation() const
{
    long v = std::numeric_limits<long>::max();
    for (const auto &f : m_entries) {
        v = std::min(v, f.valuation());
    }
    return v;
}

bool SeriesMatrix::is_zero() const
{
    return std::all_of(m_entries.begin(), m_entries.end(), [](const TruncatedSeries &f) { return f.is_zero(); });
}

SeriesMatrix SeriesMatrix::with_provenance(Provenance prov) const
{
    SeriesMatrix out = *this;
    out.m_provenance = prov;
    return out;
}

SeriesMatrix SeriesMatrix::transpose() const
{
    std::vector<TruncatedSeries> entries;
    entries.reserve(m_entries.size());
    for (std::size_t i = 0; i < m_size; ++i) {
        for (std::size_t j = 0; j < m_size; ++j) {
            entries.push_back((*this)(j, i));
        }
    }
    return SeriesMatrix(m_p, m_size, m_x_precision, std::move(entries));
}

SeriesMatrix SeriesMatrix::scaled_by_p(long k) const
{
    std::vector<TruncatedSeries> entries;
    entries.reserve(m_entries.size());
    for (const auto &f : m_entries) {
        entries.push_back(f.scaled_by_p(k));
    }
    SeriesMatrix out(m_p, m_size, m_x_precision, std::move(entries));
    out.m_provenance = m_provenance;
    return out;
}

namespace
{

void require_compatible(const SeriesMatrix &a, const SeriesMatrix &b)
{
    if (a.prime() != b.prime() || a.size() != b.size()) {
        throw UsageError("SeriesMatrix: incompatible operands");
    }
}

} // namespace

SeriesMatrix operator+(const SeriesMatrix &a, const SeriesMatrix &b)
{
    require_compatible(a, b);
    const std::size_t d = std::min(a.m_x_precision, b.m_x_precision);
    std::vector<TruncatedSeries> entries;
    entries.reserve(a.m_entries.size());
    for (std::size_t i = 0; i < a.m_entries.size(); ++i) {
        entries.push_back(a.m_entries[i] + b.m_entries[i]);
    }
    return SeriesMatrix(a.m_p, a.m_size, d, std::move(entries));
}

SeriesMatrix operator-(const SeriesMatrix &a, const SeriesMatrix &b)
{
    require_compatible(a, b);
    const std::size_t d = std::min(a.m_x_precision, b.m_x_precision);
    std::vector<TruncatedSeries> entries;
    entries.reserve(a.m_entries.size());
    for (std::size_t i = 0; i < a.m_entries.size(); ++i) {
        entries.push_back(a.m_entries[i] - b.m_entries[i]);
    }
    return SeriesMatrix(a.m_p, a.m_size, d, std::move(entries));
}

SeriesMatrix operator*(const SeriesMatrix &a, const SeriesMatrix &b)
{
    require_compatible(a, b);
    const std::size_t n = a.m_size;
    const std::size_t d = std::min(a.m_x_precision, b.m_x_precision);
    std::vector<TruncatedSeries> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            TruncatedSeries acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < n; ++k) {
                acc = acc + a(i, k) * b(k, j);
            }
            entries.push_back(std::move(acc));
        }
    }
    return SeriesMatrix(a.m_p, n, d, std::move(entries));
}

TruncatedSeries SeriesMatrix::determinant() const
{
    long n_max = 0;
    for (const auto &f : m_entries) {
        n_max = std::max(n_max, f.p_precision());
    }
    const TruncatedSeries one = TruncatedSeries::constant(m_p, 1, m_x_precision, std::max(n_max, 1L) * 4 + 64);
    const TruncatedSeries zero = one - one;
    return berkowitz_determinant<TruncatedSeries>(m_entries, m_size, zero, one);
}

bool operator==(const SeriesMatrix &a, const SeriesMatrix &b)
{
    return a.m_p == b.m_p && a.m_size == b.m_size && a.m_x_precision == b.m_x_precision
           && a.m_entries == b.m_entries;
}

} // namespace iwacalc
