#ifndef IWACALC_ZP_MATRIX_HPP
#define IWACALC_ZP_MATRIX_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace iwacalc
{

// Dense square matrix over Z/p^N, entries kept in [0, p^N).
class ZpMatrix
{
public:
    ZpMatrix(unsigned long p, long precision, std::size_t size);
    ZpMatrix(unsigned long p, long precision, std::size_t size, std::vector<mpz_class> entries);

    static ZpMatrix identity(unsigned long p, long precision, std::size_t size);

    unsigned long prime() const noexcept
    {
        return m_p;
    }
    long precision() const noexcept
    {
        return m_precision;
    }
    std::size_t size() const noexcept
    {
        return m_size;
    }
    const mpz_class &operator()(std::size_t i, std::size_t j) const
    {
        return m_entries[i * m_size + j];
    }
    void set(std::size_t i, std::size_t j, const mpz_class &x);
    const std::vector<mpz_class> &entries() const noexcept
    {
        return m_entries;
    }

    ZpMatrix transpose() const;
    ZpMatrix with_precision(long precision) const;
    friend ZpMatrix operator*(const ZpMatrix &a, const ZpMatrix &b);
    ZpMatrix power(unsigned long k) const;

    // Determinant modulo p^N (division free).
    mpz_class determinant() const;
    // Gauss-Jordan with unit pivots. Throws ValidationError when the
    // determinant is not a unit.
    ZpMatrix inverse() const;

    friend bool operator==(const ZpMatrix &a, const ZpMatrix &b);

private:
    unsigned long m_p;
    long m_precision;
    std::size_t m_size;
    mpz_class m_modulus;
    std::vector<mpz_class> m_entries;
};

} // namespace iwacalc

#endif
