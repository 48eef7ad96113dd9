#include <iwacalc/determinant.hpp>
#include <iwacalc/errors.hpp>
#include <iwacalc/integer.hpp>
#include <iwacalc/zp_matrix.hpp>

#include <utility>

namespace iwacalc
{

ZpMatrix::ZpMatrix(unsigned long p, long precision, std::size_t size)
    : m_p(p), m_precision(precision), m_size(size), m_modulus(prime_power(p, precision)),
      m_entries(size * size)
{
}

ZpMatrix::ZpMatrix(unsigned long p, long precision, std::size_t size, std::vector<mpz_class> entries)
    : m_p(p), m_precision(precision), m_size(size), m_modulus(prime_power(p, precision)),
      m_entries(std::move(entries))
{
    if (m_entries.size() != size * size) {
        throw UsageError("ZpMatrix: expected " + std::to_string(size * size) + " entries");
    }
    for (auto &x : m_entries) {
        x = reduce(x, m_modulus);
    }
}

ZpMatrix ZpMatrix::identity(unsigned long p, long precision, std::size_t size)
{
    ZpMatrix out(p, precision, size);
    for (std::size_t i = 0; i < size; ++i) {
        out.set(i, i, 1);
    }
    return out;
}

void ZpMatrix::set(std::size_t i, std::size_t j, const mpz_class &x)
{
    m_entries[i * m_size + j] = reduce(x, m_modulus);
}

ZpMatrix ZpMatrix::transpose() const
{
    ZpMatrix out(m_p, m_precision, m_size);
    for (std::size_t i = 0; i < m_size; ++i) {
        for (std::size_t j = 0; j < m_size; ++j) {
            out.m_entries[j * m_size + i] = (*this)(i, j);
        }
    }
    return out;
}

ZpMatrix ZpMatrix::with_precision(long precision) const
{
    return ZpMatrix(m_p, precision, m_size, m_entries);
}

ZpMatrix operator*(const ZpMatrix &a, const ZpMatrix &b)
{
    if (a.m_p != b.m_p || a.m_size != b.m_size) {
        throw UsageError("ZpMatrix product: incompatible operands");
    }
    const std::size_t n = a.m_size;
    ZpMatrix out(a.m_p, std::min(a.m_precision, b.m_precision), n);
    mpz_class acc;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                mpz_addmul(acc.get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

ZpMatrix ZpMatrix::power(unsigned long k) const
{
    ZpMatrix result = identity(m_p, m_precision, m_size);
    ZpMatrix base = *this;
    while (k > 0) {
        if (k & 1UL) {
            result = result * base;
        }
        base = base * base;
        k >>= 1;
    }
    return result;
}

mpz_class ZpMatrix::determinant() const
{
    return reduce(berkowitz_determinant<mpz_class>(m_entries, m_size, mpz_class(0), mpz_class(1)),
                  m_modulus);
}

ZpMatrix ZpMatrix::inverse() const
{
    const std::size_t n = m_size;
    std::vector<mpz_class> a = m_entries;
    ZpMatrix inv = identity(m_p, m_precision, n);
    std::vector<mpz_class> &b = inv.m_entries;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (mpz_divisible_ui_p(a[r * n + col].get_mpz_t(), m_p) == 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == n || m_precision == 0) {
            throw ValidationError("matrix is not invertible over Z_p (determinant is not a unit)");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[pivot * n + j], a[col * n + j]);
                std::swap(b[pivot * n + j], b[col * n + j]);
            }
        }
        const mpz_class scale = inverse_mod(a[col * n + col], m_modulus);
        for (std::size_t j = 0; j < n; ++j) {
            a[col * n + j] = reduce(a[col * n + j] * scale, m_modulus);
            b[col * n + j] = reduce(b[col * n + j] * scale, m_modulus);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r * n + col] == 0) {
                continue;
            }
            const mpz_class f = a[r * n + col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r * n + j] = reduce(a[r * n + j] - f * a[col * n + j], m_modulus);
                b[r * n + j] = reduce(b[r * n + j] - f * b[col * n + j], m_modulus);
            }
        }
    }
    return inv;
}

bool operator==(const ZpMatrix &a, const ZpMatrix &b)
{
    return a.m_p == b.m_p && a.m_precision == b.m_precision && a.m_size == b.m_size
           && a.m_entries == b.m_entries;
}

} // namespace iwacalc
