#ifndef IWACALC_SERIES_HPP
#define IWACALC_SERIES_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <iwacalc/padic.hpp>

namespace iwacalc
{

// p^{-s} * (c_0 + c_1 X + ... + c_D X^D) with the numerators c_i known modulo
// p^N, i.e. an element of Q_p[[X]] known modulo (p^{N-s}, X^{D+1}).
//
// Normal form: s == 0 or some c_i is a p-adic unit. A series whose numerators
// all vanish modulo p^N is "zero at precision"; it is stored with zero
// numerators, s = 0 and N = N - s (or s = s - N, N = 0 when that is negative).
class TruncatedSeries
{
public:
    // The zero series modulo (p^N, X^{D+1}).
    TruncatedSeries(unsigned long p, std::size_t x_precision, long p_precision);
    // Numerators are reduced modulo p^N; x-precision is numerators.size() - 1.
    TruncatedSeries(unsigned long p, std::vector<mpz_class> numerators, long p_precision,
                    long denominator_exp = 0);

    static TruncatedSeries constant(unsigned long p, const mpz_class &c, std::size_t x_precision,
                                    long p_precision);
    // X^k (zero when k exceeds the x-precision).
    static TruncatedSeries monomial(unsigned long p, std::size_t k, std::size_t x_precision, long p_precision);

    unsigned long prime() const noexcept
    {
        return m_p;
    }
    long denominator_exp() const noexcept
    {
        return m_s;
    }
    std::size_t x_precision() const noexcept
    {
        return m_c.size() - 1;
    }
    long p_precision() const noexcept
    {
        return m_n;
    }
    long absolute_precision() const noexcept
    {
        return m_n - m_s;
    }
    std::span<const mpz_class> numerators() const noexcept
    {
        return m_c;
    }
    const mpz_class &numerator(std::size_t i) const
    {
        return m_c.at(i);
    }

    PadicScalar coefficient(std::size_t i) const;

    bool is_zero() const noexcept;
    // Minimal coefficient valuation, or the absolute precision when zero.
    long valuation() const;
    // Minimal valuation of the numerators (N when all vanish).
    long numerator_valuation() const;

    TruncatedSeries truncate(std::size_t x_precision) const;
    // Drops numerator digits beyond p^N (N must not exceed the current value).
    TruncatedSeries with_p_precision(long p_precision) const;
    // (f - (c_0 + ... + c_{k-1} X^{k-1})) / X^k, with x-precision D - k.
    TruncatedSeries shift_down(std::size_t k) const;
    // c_0 + ... + c_{k-1} X^{k-1}, same x-precision.
    TruncatedSeries low_part(std::size_t k) const;
    // Multiplication by p^k, k of either sign.
    TruncatedSeries scaled_by_p(long k) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(const TruncatedSeries &a, const PadicScalar &x);
    friend TruncatedSeries operator*(const PadicScalar &x, const TruncatedSeries &a)
    {
        return a * x;
    }

    // Multiplicative inverse; requires the constant numerator to be a unit.
    TruncatedSeries inverse() const;
    // f(inner) for an integral inner series with zero constant term.
    TruncatedSeries compose(const TruncatedSeries &inner) const;

    // Structural equality of the stored representation.
    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b);

    std::string to_string() const;

private:
    void normalize();

    unsigned long m_p;
    long m_s;
    long m_n;
    std::vector<mpz_class> m_c;
};

// a - b vanishes at the tracked precision.
bool equal_at_precision(const TruncatedSeries &a, const TruncatedSeries &b);

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &f);

// Phi_{p^n}(1 + X) = ((1+X)^{p^n} - 1) / ((1+X)^{p^{n-1}} - 1) modulo (p^N, X^{D+1}); n >= 1.
TruncatedSeries cyclotomic_shifted(unsigned long p, unsigned n, std::size_t x_precision, long p_precision);

// prod_{k=1}^n Phi_{p^k}(1 + X).
TruncatedSeries cyclotomic_product(unsigned long p, unsigned n, std::size_t x_precision, long p_precision);

// log(1 + X) / (p X) = (1/p) sum_k (-1)^k X^k / (k + 1); p_precision is the numerator precision.
TruncatedSeries log_over_px(unsigned long p, std::size_t x_precision, long p_precision);

// log(1 + X) = sum_{k>=1} (-1)^{k+1} X^k / k.
TruncatedSeries log_one_plus_x(unsigned long p, std::size_t x_precision, long p_precision);

// log(1 + X) / log_p(u) for a principal unit u; the usual convention is u = 1 + p.
TruncatedSeries log_gamma_ratio(unsigned long p, std::size_t x_precision, long p_precision,
                                const PadicScalar &u);

} // namespace iwacalc

#endif
