#include <iwacalc/errors.hpp>
#include <iwacalc/integer.hpp>
#include <iwacalc/series.hpp>

#include <algorithm>
#include <sstream>

namespace iwacalc
{

namespace
{

void require_same_prime(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.prime() != b.prime()) {
        throw UsageError("series over different primes (" + std::to_string(a.prime()) + " vs "
                         + std::to_string(b.prime()) + ")");
    }
}

long floor_log(unsigned long p, std::size_t x)
{
    long k = 0;
    for (std::size_t q = x; q >= p; q /= p) {
        ++k;
    }
    return k;
}

} // namespace

TruncatedSeries::TruncatedSeries(unsigned long p, std::size_t x_precision, long p_precision)
    : m_p(p), m_s(0), m_n(p_precision), m_c(x_precision + 1)
{
    require_odd_prime(p);
    if (p_precision < 0) {
        throw UsageError("negative p-precision");
    }
}

TruncatedSeries::TruncatedSeries(unsigned long p, std::vector<mpz_class> numerators, long p_precision,
                                 long denominator_exp)
    : m_p(p), m_s(denominator_exp), m_n(p_precision), m_c(std::move(numerators))
{
    require_odd_prime(p);
    if (m_c.empty()) {
        throw UsageError("series needs at least one coefficient");
    }
    if (p_precision < 0 || denominator_exp < 0) {
        throw UsageError("series precision and denominator exponent must be non-negative");
    }
    const mpz_class mod = prime_power(p, m_n);
    for (auto &c : m_c) {
        c = reduce(c, mod);
    }
    normalize();
}

TruncatedSeries TruncatedSeries::constant(unsigned long p, const mpz_class &c, std::size_t x_precision,
                                          long p_precision)
{
    std::vector<mpz_class> cs(x_precision + 1);
    cs[0] = c;
    return TruncatedSeries(p, std::move(cs), p_precision);
}

TruncatedSeries TruncatedSeries::monomial(unsigned long p, std::size_t k, std::size_t x_precision,
                                          long p_precision)
{
    std::vector<mpz_class> cs(x_precision + 1);
    if (k <= x_precision) {
        cs[k] = 1;
    }
    return TruncatedSeries(p, std::move(cs), p_precision);
}

void TruncatedSeries::normalize()
{
    long k = m_n;
    mpz_class prime{m_p};
    for (const auto &c : m_c) {
        if (c != 0) {
            k = std::min(k, iwacalc::valuation(c, m_p));
            if (k == 0) {
                break;
            }
        }
    }
    if (k >= m_n) {
        // zero at precision: keep the absolute precision N - s
        for (auto &c : m_c) {
            c = 0;
        }
        const long absolute = m_n - m_s;
        if (absolute >= 0) {
            m_s = 0;
            m_n = absolute;
        } else {
            m_s = -absolute;
            m_n = 0;
        }
        return;
    }
    const long t = std::min(k, m_s);
    if (t > 0) {
        const mpz_class pt = prime_power(m_p, t);
        for (auto &c : m_c) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pt.get_mpz_t());
        }
        m_s -= t;
        m_n -= t;
    }
}

PadicScalar TruncatedSeries::coefficient(std::size_t i) const
{
    const mpz_class &c = m_c.at(i);
    if (c == 0) {
        return PadicScalar::zero(m_p, absolute_precision());
    }
    mpz_class unit;
    mpz_class prime{m_p};
    const long v = static_cast<long>(mpz_remove(unit.get_mpz_t(), c.get_mpz_t(), prime.get_mpz_t()));
    return PadicScalar(m_p, v - m_s, unit, m_n - v);
}

bool TruncatedSeries::is_zero() const noexcept
{
    return std::all_of(m_c.begin(), m_c.end(), [](const mpz_class &c) { return c == 0; });
}

long TruncatedSeries::numerator_valuation() const
{
    long k = m_n;
    for (const auto &c : m_c) {
        if (c != 0) {
            k = std::min(k, iwacalc::valuation(c, m_p));
        }
    }
    return k;
}

long TruncatedSeries::valuation() const
{
    return numerator_valuation() - m_s;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t x_precision) const
{
    if (x_precision >= this->x_precision()) {
        return *this;
    }
    std::vector<mpz_class> cs(m_c.begin(), m_c.begin() + static_cast<std::ptrdiff_t>(x_precision + 1));
    return TruncatedSeries(m_p, std::move(cs), m_n, m_s);
}

TruncatedSeries TruncatedSeries::with_p_precision(long p_precision) const
{
    if (p_precision >= m_n) {
        return *this;
    }
    return TruncatedSeries(m_p, m_c, std::max(p_precision, 0L), m_s);
}

TruncatedSeries TruncatedSeries::shift_down(std::size_t k) const
{
    if (k > x_precision()) {
        throw PrecisionError("shift_down by " + std::to_string(k) + " exceeds x-precision "
                                 + std::to_string(x_precision()),
                             0);
    }
    std::vector<mpz_class> cs(m_c.begin() + static_cast<std::ptrdiff_t>(k), m_c.end());
    return TruncatedSeries(m_p, std::move(cs), m_n, m_s);
}

TruncatedSeries TruncatedSeries::low_part(std::size_t k) const
{
    std::vector<mpz_class> cs(m_c.size());
    for (std::size_t i = 0; i < std::min(k, m_c.size()); ++i) {
        cs[i] = m_c[i];
    }
    return TruncatedSeries(m_p, std::move(cs), m_n, m_s);
}

TruncatedSeries TruncatedSeries::scaled_by_p(long k) const
{
    if (k <= 0) {
        return TruncatedSeries(m_p, m_c, m_n, m_s - k);
    }
    const long t = std::min(k, m_s);
    const long r = k - t;
    if (r == 0) {
        return TruncatedSeries(m_p, m_c, m_n, m_s - t);
    }
    const mpz_class pr = prime_power(m_p, r);
    std::vector<mpz_class> cs(m_c);
    for (auto &c : cs) {
        c *= pr;
    }
    return TruncatedSeries(m_p, std::move(cs), m_n + r, m_s - t);
}

TruncatedSeries TruncatedSeries::operator-() const
{
    std::vector<mpz_class> cs(m_c.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        cs[i] = -m_c[i];
    }
    return TruncatedSeries(m_p, std::move(cs), m_n, m_s);
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_prime(a, b);
    const unsigned long p = a.prime();
    const std::size_t d = std::min(a.x_precision(), b.x_precision());
    const long s = std::max(a.m_s, b.m_s);
    const long shift_a = s - a.m_s;
    const long shift_b = s - b.m_s;
    const long n = std::min(a.m_n + shift_a, b.m_n + shift_b);
    const mpz_class pa = prime_power(p, shift_a);
    const mpz_class pb = prime_power(p, shift_b);
    std::vector<mpz_class> cs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        cs[i] = a.m_c[i] * pa + b.m_c[i] * pb;
    }
    return TruncatedSeries(p, std::move(cs), n, s);
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_prime(a, b);
    const unsigned long p = a.prime();
    const std::size_t d = std::min(a.x_precision(), b.x_precision());
    const long n = std::min(a.m_n + b.numerator_valuation(), b.m_n + a.numerator_valuation());
    // Schoolbook convolution with a single reduction per output coefficient.
    std::vector<mpz_class> cs(d + 1);
    std::size_t b_top = d;
    while (b_top > 0 && b.m_c[b_top] == 0) {
        --b_top;
    }
    for (std::size_t i = 0; i <= d; ++i) {
        const mpz_class &ai = a.m_c[i];
        if (ai == 0) {
            continue;
        }
        const std::size_t jmax = std::min(d - i, b_top);
        for (std::size_t j = 0; j <= jmax; ++j) {
            mpz_addmul(cs[i + j].get_mpz_t(), ai.get_mpz_t(), b.m_c[j].get_mpz_t());
        }
    }
    return TruncatedSeries(p, std::move(cs), n, a.m_s + b.m_s);
}

TruncatedSeries operator*(const TruncatedSeries &a, const PadicScalar &x)
{
    if (a.prime() != x.prime()) {
        throw UsageError("series and scalar over different primes");
    }
    if (x.is_exact_zero()) {
        return TruncatedSeries(a.prime(), a.x_precision(), a.m_n).scaled_by_p(-a.m_s);
    }
    const long n = std::min(a.m_n, x.relative_precision() + a.numerator_valuation());
    std::vector<mpz_class> cs(a.m_c.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        cs[i] = a.m_c[i] * x.unit();
    }
    return TruncatedSeries(a.prime(), std::move(cs), n, a.m_s).scaled_by_p(x.valuation());
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (m_n == 0 || m_c[0] == 0 || mpz_divisible_ui_p(m_c[0].get_mpz_t(), m_p) != 0) {
        throw DomainError("series inverse requires a unit constant numerator: " + to_string());
    }
    const mpz_class mod = prime_power(m_p, m_n);
    const std::size_t d = x_precision();
    std::vector<mpz_class> inv(d + 1);
    const mpz_class b0 = inverse_mod(m_c[0], mod);
    inv[0] = b0;
    mpz_class acc;
    for (std::size_t k = 1; k <= d; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            mpz_addmul(acc.get_mpz_t(), m_c[i].get_mpz_t(), inv[k - i].get_mpz_t());
        }
        inv[k] = reduce(-acc * b0, mod);
    }
    // (p^{-s} c)^{-1} = p^s c^{-1}
    return TruncatedSeries(m_p, std::move(inv), m_n).scaled_by_p(m_s);
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries &inner) const
{
    require_same_prime(*this, inner);
    if (inner.m_s != 0 || inner.m_c[0] != 0) {
        throw UsageError("compose: inner series must be integral with zero constant term");
    }
    const std::size_t d = std::min(x_precision(), inner.x_precision());
    const TruncatedSeries in = inner.truncate(d);
    // Horner on the numerators, then restore the denominator.
    TruncatedSeries acc = TruncatedSeries::constant(m_p, m_c[d], d, m_n);
    for (std::size_t i = d; i-- > 0;) {
        acc = acc * in + TruncatedSeries::constant(m_p, m_c[i], d, m_n);
    }
    return acc.scaled_by_p(-m_s);
}

bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return a.m_p == b.m_p && a.m_s == b.m_s && a.m_n == b.m_n && a.m_c == b.m_c;
}

bool equal_at_precision(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return (a - b).is_zero();
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    if (m_s != 0) {
        os << m_p << "^-" << m_s << "*";
    }
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < m_c.size(); ++i) {
        if (m_c[i] == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << m_c[i].get_str();
        if (i == 1) {
            os << "*X";
        } else if (i > 1) {
            os << "*X^" << i;
        }
    }
    if (first) {
        os << "0";
    }
    os << ") + O(" << m_p << "^" << absolute_precision() << ", X^" << m_c.size() << ")";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &f)
{
    return os << f.to_string();
}

TruncatedSeries cyclotomic_shifted(unsigned long p, unsigned n, std::size_t x_precision, long p_precision)
{
    require_odd_prime(p);
    if (n == 0) {
        throw UsageError("cyclotomic_shifted requires n >= 1");
    }
    // Phi_{p^n}(1 + X) = sum_{j=0}^{p-1} (1 + X)^{j p^{n-1}}
    const mpz_class step = prime_power(p, static_cast<long>(n) - 1);
    std::vector<mpz_class> cs(x_precision + 1);
    for (unsigned long j = 0; j < p; ++j) {
        const mpz_class e = step * j;
        mpz_class binom = 1;
        for (std::size_t i = 0; i <= x_precision; ++i) {
            if (i > 0) {
                // binom(e, i) = binom(e, i-1) * (e - i + 1) / i
                binom *= e - static_cast<unsigned long>(i - 1);
                mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i));
            }
            if (binom == 0) {
                break;
            }
            cs[i] += binom;
        }
    }
    return TruncatedSeries(p, std::move(cs), p_precision);
}

TruncatedSeries cyclotomic_product(unsigned long p, unsigned n, std::size_t x_precision, long p_precision)
{
    TruncatedSeries acc = TruncatedSeries::constant(p, 1, x_precision, p_precision);
    for (unsigned k = 1; k <= n; ++k) {
        acc = acc * cyclotomic_shifted(p, k, x_precision, p_precision);
    }
    return acc;
}

TruncatedSeries log_over_px(unsigned long p, std::size_t x_precision, long p_precision)
{
    require_odd_prime(p);
    // coefficient k is (-1)^k / (p (k+1)); common denominator p^{1 + max v(k+1)}
    const long s = 1 + floor_log(p, x_precision + 1);
    const mpz_class mod = prime_power(p, p_precision);
    std::vector<mpz_class> cs(x_precision + 1);
    for (std::size_t k = 0; k <= x_precision; ++k) {
        mpz_class m = static_cast<unsigned long>(k + 1);
        const long v = valuation(m, p);
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), prime_power(p, v).get_mpz_t());
        mpz_class c = prime_power(p, s - 1 - v) * inverse_mod(reduce(m, mod), mod);
        cs[k] = (k % 2 == 0) ? c : mpz_class(-c);
    }
    return TruncatedSeries(p, std::move(cs), p_precision, s);
}

TruncatedSeries log_one_plus_x(unsigned long p, std::size_t x_precision, long p_precision)
{
    require_odd_prime(p);
    const long s = floor_log(p, std::max<std::size_t>(x_precision, 1));
    const mpz_class mod = prime_power(p, p_precision);
    std::vector<mpz_class> cs(x_precision + 1);
    for (std::size_t k = 1; k <= x_precision; ++k) {
        mpz_class m = static_cast<unsigned long>(k);
        const long v = valuation(m, p);
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), prime_power(p, v).get_mpz_t());
        mpz_class c = prime_power(p, s - v) * inverse_mod(reduce(m, mod), mod);
        cs[k] = (k % 2 == 1) ? c : mpz_class(-c);
    }
    return TruncatedSeries(p, std::move(cs), p_precision, s);
}

TruncatedSeries log_gamma_ratio(unsigned long p, std::size_t x_precision, long p_precision,
                                const PadicScalar &u)
{
    return log_one_plus_x(p, x_precision, p_precision) * invert(padic_log(u));
}

} // namespace iwacalc
