#include <iwacalc/errors.hpp>
#include <iwacalc/integer.hpp>
#include <iwacalc/padic.hpp>

#include <algorithm>
#include <sstream>

namespace iwacalc
{

namespace
{

void require_same_prime(const PadicScalar &a, const PadicScalar &b)
{
    if (a.prime() != b.prime()) {
        throw UsageError("p-adic scalars over different primes (" + std::to_string(a.prime()) + " vs "
                         + std::to_string(b.prime()) + ")");
    }
}

// p^vmin * x known modulo p^absolute, normalized.
PadicScalar normalize(unsigned long p, long vmin, mpz_class x, long absolute)
{
    const long rel = absolute - vmin;
    if (rel <= 0) {
        return PadicScalar::zero(p, absolute);
    }
    x = reduce(x, prime_power(p, rel));
    if (x == 0) {
        return PadicScalar::zero(p, absolute);
    }
    mpz_class unit;
    mpz_class prime{p};
    const long k = static_cast<long>(mpz_remove(unit.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
    return PadicScalar(p, vmin + k, unit, rel - k);
}

} // namespace

PadicScalar::PadicScalar(unsigned long p, long valuation, mpz_class unit, long relative_precision)
    : m_p(p), m_valuation(valuation), m_unit(std::move(unit)), m_precision(relative_precision)
{
    require_odd_prime(p);
    if (m_precision < 0) {
        throw UsageError("negative relative precision");
    }
    if (m_unit == 0) {
        m_precision = 0;
        return;
    }
    if (m_precision == 0) {
        m_unit = 0;
        return;
    }
    m_unit = reduce(m_unit, prime_power(p, m_precision));
    if (mpz_divisible_ui_p(m_unit.get_mpz_t(), p) != 0) {
        throw UsageError("PadicScalar unit part must be coprime to p");
    }
}

PadicScalar PadicScalar::exact_zero(unsigned long p)
{
    return PadicScalar(p, infinite_valuation, 0, 0);
}

PadicScalar PadicScalar::zero(unsigned long p, long absolute_precision)
{
    return PadicScalar(p, absolute_precision, 0, 0);
}

PadicScalar PadicScalar::from_integer(unsigned long p, const mpz_class &x, long absolute_precision)
{
    require_odd_prime(p);
    return normalize(p, 0, x, absolute_precision);
}

PadicScalar PadicScalar::from_rational(unsigned long p, const mpz_class &num, const mpz_class &den,
                                       long absolute_precision)
{
    require_odd_prime(p);
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    if (num == 0) {
        return zero(p, absolute_precision);
    }
    mpz_class prime{p}, a, b;
    const long va = static_cast<long>(mpz_remove(a.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
    const long vb = static_cast<long>(mpz_remove(b.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
    const long v = va - vb;
    const long rel = absolute_precision - v;
    if (rel <= 0) {
        return zero(p, absolute_precision);
    }
    const mpz_class mod = prime_power(p, rel);
    return PadicScalar(p, v, reduce(a * inverse_mod(reduce(b, mod), mod), mod), rel);
}

long PadicScalar::absolute_precision() const noexcept
{
    return is_exact_zero() ? infinite_valuation : m_valuation + m_precision;
}

mpz_class PadicScalar::to_integer() const
{
    if (is_zero()) {
        return 0;
    }
    if (m_valuation < 0) {
        throw DomainError("to_integer: value " + to_string() + " is not integral");
    }
    return m_unit * prime_power(m_p, m_valuation);
}

PadicScalar PadicScalar::with_absolute_precision(long absolute_precision) const
{
    if (is_exact_zero()) {
        return zero(m_p, absolute_precision);
    }
    const long a = std::min(absolute_precision, this->absolute_precision());
    if (a <= m_valuation || is_zero()) {
        return zero(m_p, a);
    }
    return PadicScalar(m_p, m_valuation, m_unit, a - m_valuation);
}

PadicScalar PadicScalar::operator-() const
{
    if (is_zero()) {
        return *this;
    }
    return PadicScalar(m_p, m_valuation, prime_power(m_p, m_precision) - m_unit, m_precision);
}

PadicScalar operator+(const PadicScalar &a, const PadicScalar &b)
{
    require_same_prime(a, b);
    if (a.is_exact_zero()) {
        return b;
    }
    if (b.is_exact_zero()) {
        return a;
    }
    const unsigned long p = a.prime();
    const long absolute = std::min(a.absolute_precision(), b.absolute_precision());
    const long vmin = std::min(a.valuation(), b.valuation());
    if (vmin >= absolute) {
        return PadicScalar::zero(p, absolute);
    }
    mpz_class x = 0;
    if (!a.is_zero()) {
        x += a.unit() * prime_power(p, a.valuation() - vmin);
    }
    if (!b.is_zero()) {
        x += b.unit() * prime_power(p, b.valuation() - vmin);
    }
    return normalize(p, vmin, std::move(x), absolute);
}

PadicScalar operator-(const PadicScalar &a, const PadicScalar &b)
{
    return a + (-b);
}

PadicScalar operator*(const PadicScalar &a, const PadicScalar &b)
{
    require_same_prime(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return PadicScalar::exact_zero(a.prime());
    }
    const long v = a.valuation() + b.valuation();
    const long rel = std::min(a.relative_precision(), b.relative_precision());
    if (rel == 0) {
        return PadicScalar::zero(a.prime(), v);
    }
    return PadicScalar(a.prime(), v, a.unit() * b.unit(), rel);
}

bool operator==(const PadicScalar &a, const PadicScalar &b)
{
    return a.m_p == b.m_p && a.m_valuation == b.m_valuation && a.m_precision == b.m_precision
           && a.m_unit == b.m_unit;
}

PadicScalar invert(const PadicScalar &a)
{
    if (a.is_exact_zero()) {
        throw DomainError("cannot invert exact zero");
    }
    if (a.is_zero()) {
        throw DomainError("cannot invert: value indistinguishable from zero at absolute precision "
                          + std::to_string(a.absolute_precision()));
    }
    const mpz_class mod = prime_power(a.prime(), a.relative_precision());
    return PadicScalar(a.prime(), -a.valuation(), inverse_mod(a.unit(), mod), a.relative_precision());
}

bool equal_at_precision(const PadicScalar &a, const PadicScalar &b)
{
    return (a - b).is_zero();
}

PadicScalar padic_log(const PadicScalar &u)
{
    const unsigned long p = u.prime();
    const PadicScalar one = PadicScalar::from_integer(p, 1, u.absolute_precision());
    const PadicScalar t = u - one;
    if (!t.is_zero() && t.valuation() < 1) {
        throw DomainError("padic_log: argument " + u.to_string() + " is not a principal unit");
    }
    if (t.is_zero()) {
        return t;
    }
    const long target = t.absolute_precision();
    // v(t^k / k) = k v(t) - v(k) >= k v(t) - floor(log_p k), which is non-decreasing in k;
    // stop at the first k where that bound reaches the target.
    PadicScalar sum = PadicScalar::exact_zero(p);
    PadicScalar power = t;
    for (long k = 1;; ++k) {
        long log_k = 0;
        for (long q = k; q >= static_cast<long>(p); q /= static_cast<long>(p)) {
            ++log_k;
        }
        if (k * t.valuation() - log_k >= target) {
            break;
        }
        const PadicScalar term = power * invert(PadicScalar::from_integer(p, k, target + log_k + 1));
        sum = (k % 2 == 1) ? sum + term : sum - term;
        power = power * t;
    }
    return sum.with_absolute_precision(target);
}

std::string PadicScalar::to_string() const
{
    std::ostringstream os;
    if (is_exact_zero()) {
        return "0";
    }
    if (is_zero()) {
        os << "O(" << m_p << "^" << m_valuation << ")";
        return os.str();
    }
    os << m_unit.get_str();
    if (m_valuation != 0) {
        os << "*" << m_p << "^" << m_valuation;
    }
    os << " + O(" << m_p << "^" << absolute_precision() << ")";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const PadicScalar &x)
{
    return os << x.to_string();
}

} // namespace iwacalc
