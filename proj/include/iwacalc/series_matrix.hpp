#ifndef IWACALC_SERIES_MATRIX_HPP
#define IWACALC_SERIES_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <iwacalc/series.hpp>
#include <iwacalc/zp_matrix.hpp>

namespace iwacalc
{

enum class Side { primal, dual };

const char *to_string(Side side) noexcept;

// Which logarithmic-matrix computation produced a matrix.
struct Provenance {
    unsigned level;
    Side side;

    friend bool operator==(const Provenance &, const Provenance &) = default;
};

// g x g matrix of truncated series sharing the prime and the x-precision.
class SeriesMatrix
{
public:
    // Zero matrix.
    SeriesMatrix(unsigned long p, std::size_t size, std::size_t x_precision, long p_precision);
    // Row-major entries; all must share p and x-precision.
    SeriesMatrix(unsigned long p, std::size_t size, std::size_t x_precision, std::vector<TruncatedSeries> entries);

    static SeriesMatrix identity(unsigned long p, std::size_t size, std::size_t x_precision, long p_precision);
    // Constant matrix with the entries of m.
    static SeriesMatrix from_constants(const ZpMatrix &m, std::size_t x_precision);
    // f * identity.
    static SeriesMatrix scalar(const TruncatedSeries &f, std::size_t size);

    unsigned long prime() const noexcept
    {
        return m_p;
    }
    std::size_t size() const noexcept
    {
        return m_size;
    }
    std::size_t x_precision() const noexcept
    {
        return m_x_precision;
    }
    const TruncatedSeries &operator()(std::size_t i, std::size_t j) const
    {
        return m_entries[i * m_size + j];
    }
    void set(std::size_t i, std::size_t j, TruncatedSeries f);
    const std::vector<TruncatedSeries> &entries() const noexcept
    {
        return m_entries;
    }

    // Largest entry denominator exponent (0 for the empty matrix).
    long denominator_exp() const;
    long absolute_precision() const;
    long valuation() const;
    bool is_zero() const;

    const std::optional<Provenance> &provenance() const noexcept
    {
        return m_provenance;
    }
    SeriesMatrix with_provenance(Provenance prov) const;

    SeriesMatrix transpose() const;
    SeriesMatrix scaled_by_p(long k) const;
    friend SeriesMatrix operator+(const SeriesMatrix &a, const SeriesMatrix &b);
    friend SeriesMatrix operator-(const SeriesMatrix &a, const SeriesMatrix &b);
    friend SeriesMatrix operator*(const SeriesMatrix &a, const SeriesMatrix &b);

    // Division-free determinant.
    TruncatedSeries determinant() const;

    // Structural equality of entries (provenance ignored).
    friend bool operator==(const SeriesMatrix &a, const SeriesMatrix &b);

private:
    unsigned long m_p;
    std::size_t m_size;
    std::size_t m_x_precision;
    std::vector<TruncatedSeries> m_entries;
    std::optional<Provenance> m_provenance;
};

} // namespace iwacalc

#endif
