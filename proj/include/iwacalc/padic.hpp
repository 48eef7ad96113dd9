#ifndef IWACALC_PADIC_HPP
#define IWACALC_PADIC_HPP

#include <limits>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace iwacalc
{

// An element p^v * u of Q_p with u a unit known modulo p^N (N is the
// relative precision). Exact zero and "zero to absolute precision a" are
// distinct states: the latter has u = 0, N = 0 and v = a.
class PadicScalar
{
public:
    static constexpr long infinite_valuation = std::numeric_limits<long>::max();

    // Unit must be coprime to p (or zero together with relative_precision 0).
    PadicScalar(unsigned long p, long valuation, mpz_class unit, long relative_precision);

    static PadicScalar exact_zero(unsigned long p);
    // Value known to lie in p^absolute_precision Z_p, no digit certain.
    static PadicScalar zero(unsigned long p, long absolute_precision);
    // x known modulo p^absolute_precision.
    static PadicScalar from_integer(unsigned long p, const mpz_class &x, long absolute_precision);
    // num/den known modulo p^absolute_precision; den != 0.
    static PadicScalar from_rational(unsigned long p, const mpz_class &num, const mpz_class &den,
                                     long absolute_precision);

    unsigned long prime() const noexcept
    {
        return m_p;
    }
    long valuation() const noexcept
    {
        return m_valuation;
    }
    const mpz_class &unit() const noexcept
    {
        return m_unit;
    }
    long relative_precision() const noexcept
    {
        return m_precision;
    }
    // v + N, or infinite_valuation for exact zero.
    long absolute_precision() const noexcept;

    bool is_exact_zero() const noexcept
    {
        return m_valuation == infinite_valuation;
    }
    // Exact zero or indistinguishable from zero at the tracked precision.
    bool is_zero() const noexcept
    {
        return m_unit == 0;
    }

    // Representative p^v * u as an integer (requires v >= 0).
    mpz_class to_integer() const;
    PadicScalar with_absolute_precision(long absolute_precision) const;

    PadicScalar operator-() const;
    friend PadicScalar operator+(const PadicScalar &a, const PadicScalar &b);
    friend PadicScalar operator-(const PadicScalar &a, const PadicScalar &b);
    friend PadicScalar operator*(const PadicScalar &a, const PadicScalar &b);

    // Structural equality: same state, digits and precision.
    friend bool operator==(const PadicScalar &a, const PadicScalar &b);

    std::string to_string() const;

private:
    unsigned long m_p;
    long m_valuation;
    mpz_class m_unit;
    long m_precision;
};

// Throws DomainError for (exact or precision-) zero.
PadicScalar invert(const PadicScalar &a);

// Equal up to the smaller of the two absolute precisions.
bool equal_at_precision(const PadicScalar &a, const PadicScalar &b);

// p-adic logarithm of a principal unit u = 1 + p*(...) with v(u - 1) >= 1.
PadicScalar padic_log(const PadicScalar &u);

std::ostream &operator<<(std::ostream &os, const PadicScalar &x);

} // namespace iwacalc

#endif
